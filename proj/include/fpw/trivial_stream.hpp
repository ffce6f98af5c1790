// Enumeration of the words trivial in a presented group, each paired with a
// certificate, and the budgeted semi-decision built on it.
//
// Certificates are produced in stages. Stage 0 is the empty product. Stage
// S >= 1 holds the certificates of size exactly S, where
//
//     size = (factor count) + (sum of conjugator lengths) + (max relator cost)
//
// and the cost of a relator is the stage at which it was pulled from the
// relator source, minus one. One relator is pulled at the start of each stage
// while fewer than S are known, so for a finite presentation the cost of
// relator j is exactly j. Within a stage the order is lexicographic in the
// tuple (n, max cost, relator indices, conjugator lengths, conjugators in
// shortlex, signs with + before -). A stage with no certificates (no relator
// available yet) emits the empty product once, so every call to next()
// makes progress.
//
// The stream is fair: every certificate has a finite size, hence a finite
// position. Factors with the identity relator are redundant and never
// produced. The same word can appear with many certificates;
// DistinctTrivialWordStream filters repeats.

#ifndef FPW_TRIVIAL_STREAM_HPP
#define FPW_TRIVIAL_STREAM_HPP

#include <cstdint>
#include <memory>
#include <unordered_set>
#include <variant>
#include <vector>

#include "fpw/presentation.hpp"

namespace fpw {

struct TrivialWord {
  Word word;
  TrivialityCertificate certificate;
};

class TrivialWordStream {
 public:
  explicit TrivialWordStream(const FinitePresentation& p);
  explicit TrivialWordStream(const RecursivePresentation& p);

  TrivialWord next();

  std::uint64_t emitted() const { return emitted_; }
  std::uint64_t stage() const { return stage_; }
  const AlphabetPtr& generators() const { return generators_; }
  /// Relators pulled so far; certificate indices refer to this prefix.
  const std::vector<Word>& relators() const { return relators_; }

 private:
  enum Level { kCount, kMaxCost, kRelators, kLengths, kConjugators, kSigns, kLevels };

  void begin_stage();
  bool first_from(int level);
  bool next_from(int level);
  bool set_first(int level);
  bool step(int level);
  bool relators_valid() const;
  TrivialWord build() const;

  AlphabetPtr generators_;
  std::unique_ptr<RelatorSource> source_;
  bool source_done_ = false;
  std::vector<Word> relators_;
  std::vector<std::uint64_t> costs_;

  std::uint64_t stage_ = 0;
  std::uint64_t emitted_ = 0;
  bool positioned_ = false;  // a certificate of the current stage is loaded

  std::size_t count_ = 0;
  std::uint64_t max_cost_ = 0;
  std::size_t usable_ = 0;
  std::vector<std::size_t> rels_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<std::uint32_t>> conj_;
  std::vector<int> signs_;
};

/// Skips words already emitted. `underlying_emitted()` counts every
/// certificate consumed, which is what budgets are charged for.
class DistinctTrivialWordStream {
 public:
  explicit DistinctTrivialWordStream(const FinitePresentation& p) : stream_(p) {}
  explicit DistinctTrivialWordStream(const RecursivePresentation& p) : stream_(p) {}

  TrivialWord next();
  std::uint64_t underlying_emitted() const { return stream_.emitted(); }

 private:
  TrivialWordStream stream_;
  std::unordered_set<Word, WordHash> seen_;
};

struct ProvedTrivial {
  TrivialityCertificate certificate;
  std::uint64_t steps = 0;
};

struct Exhausted {
  std::uint64_t steps = 0;
};

using TrivialVerdict = std::variant<ProvedTrivial, Exhausted>;

/// Scan at most `budget` emissions of the trivial-word stream for `w`.
TrivialVerdict semidecide_trivial(const FinitePresentation& p, const Word& w, std::uint64_t budget);
TrivialVerdict semidecide_trivial(const RecursivePresentation& p, const Word& w,
                                  std::uint64_t budget);

/// Emissions of one presentation's stream, cached so several consumers can
/// walk it with independent cursors without re-enumerating.
class TrivialWordCache {
 public:
  explicit TrivialWordCache(const FinitePresentation& p) : stream_(p) {}

  const TrivialWord& at(std::size_t index);
  const AlphabetPtr& generators() const { return stream_.generators(); }

 private:
  TrivialWordStream stream_;
  std::vector<TrivialWord> cache_;
};

}  // namespace fpw

#endif  // FPW_TRIVIAL_STREAM_HPP
