// Finite and recursive group presentations, and triviality certificates.

#ifndef FPW_PRESENTATION_HPP
#define FPW_PRESENTATION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpw/pull.hpp"
#include "fpw/word.hpp"

namespace fpw {

/// <X | R> with R a finite list of reduced words over X.
class FinitePresentation {
 public:
  FinitePresentation(AlphabetPtr generators, std::vector<Word> relators);

  /// `< s, t | s^-1 t^2 s = t^3 >`. Relators of the form `u = v` are stored as
  /// u v^-1; relators that reduce to the identity are dropped.
  static FinitePresentation parse(std::string_view text);

  const AlphabetPtr& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// `< s, t | s^-1 t t s t^-1 t^-1 t^-1 >`, relators in stored order.
  std::string to_string() const;
  /// Generators in order, relators sorted shortlex. Used for move-log hashes.
  std::string canonical_string() const;

  friend bool operator==(const FinitePresentation& a, const FinitePresentation& b);

 private:
  AlphabetPtr generators_;
  std::vector<Word> relators_;
};

/// A pull source of relators; see PullState for the Pending/Exhausted split.
class RelatorSource {
 public:
  virtual ~RelatorSource() = default;
  virtual Pull<Word> pull() = 0;
};

/// Finitely many generators and a relator stream. The stream is opened fresh
/// for every consumer, so independent searches never share cursor state.
class RecursivePresentation {
 public:
  using Opener = std::function<std::unique_ptr<RelatorSource>()>;

  RecursivePresentation(AlphabetPtr generators, Opener opener);

  static RecursivePresentation from_finite(const FinitePresentation& p);

  const AlphabetPtr& generators() const { return generators_; }
  std::unique_ptr<RelatorSource> open() const { return opener_(); }

  /// First `count` relators (fewer if the stream ends or stalls `max_pending`
  /// times in a row).
  std::vector<Word> prefix(std::size_t count, std::size_t max_pending = 64) const;

 private:
  AlphabetPtr generators_;
  Opener opener_;
};

/// One factor c r^e c^-1 of a certificate. relator == kEmptyRelator stands
/// for the identity factor, which the enumerator never produces but
/// certificate checking accepts.
struct CertificateFactor {
  static constexpr std::int64_t kEmptyRelator = -1;

  Word conjugator;
  std::int64_t relator = 0;
  int sign = 1;

  friend bool operator==(const CertificateFactor&, const CertificateFactor&) = default;
};

/// A product of conjugates of relators; the empty product is the identity.
struct TrivialityCertificate {
  std::vector<CertificateFactor> factors;

  friend bool operator==(const TrivialityCertificate&, const TrivialityCertificate&) = default;
};

/// The reduced value of the certificate's product against `relators`.
/// Throws IndexOutOfRange for a relator index not in `relators`.
Word certificate_word(const AlphabetPtr& generators, std::span<const Word> relators,
                      const TrivialityCertificate& cert);
Word certificate_word(const FinitePresentation& p, const TrivialityCertificate& cert);

}  // namespace fpw

#endif  // FPW_PRESENTATION_HPP
