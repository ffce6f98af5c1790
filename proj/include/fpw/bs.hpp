// Baumslag-Solitar groups BS(m, n) = < s, t | s^-1 t^m s = t^n >.
//
// The word problem is decided by Britton reduction on syllable form: a word
// with s-letters and no pinch (s^-1 t^k s with m | k, or s t^k s^-1 with
// n | k) is nontrivial, and t^k is trivial only for k = 0. The endomorphism
// f (s -> s, t -> t^2) of BS(2,3) is surjective but not injective; the words
// w_i below separate the kernels of its iterates.

#ifndef FPW_BS_HPP
#define FPW_BS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpw/presentation.hpp"
#include "fpw/smith.hpp"
#include "fpw/word.hpp"

namespace fpw {

struct BSParams {
  BigInt m = 2;
  BigInt n = 3;

  BSParams() = default;
  BSParams(BigInt m_, BigInt n_);
};

/// The alphabet {s, t} shared by every BS word the library produces.
const AlphabetPtr& bs_alphabet();

/// `< s, t | s^-1 t^m s t^-n >`
FinitePresentation bs_presentation(const BSParams& p);

/// t^a0 s^e1 t^a1 ... s^ek t^ak. `powers` always has one more entry than
/// `signs`.
class SyllableWord {
 public:
  SyllableWord();
  SyllableWord(std::vector<BigInt> powers, std::vector<int> signs);

  const std::vector<BigInt>& powers() const { return powers_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t s_count() const { return signs_.size(); }
  /// No s-letters and t-power zero.
  bool is_identity() const { return signs_.empty() && powers_.front() == 0; }

  /// `t^0 s^-1 t^2 s^1 t^0`
  std::string to_string() const;

  friend bool operator==(const SyllableWord&, const SyllableWord&) = default;

 private:
  friend SyllableWord britton_reduce_syllables(const BSParams&, SyllableWord, std::size_t*);
  friend SyllableWord apply_f(const SyllableWord&, std::uint64_t);
  std::vector<BigInt> powers_;
  std::vector<int> signs_;
};

/// Group a word over {s, t} into syllables. Throws ForeignGenerator if the
/// word uses a generator named anything else.
SyllableWord to_syllables(const Word& w);
/// Expand back to a reduced word over bs_alphabet(). Throws Overflow if a
/// t-power does not fit in memory-sized letter counts.
Word from_syllables(const SyllableWord& sw);

/// Rewrite pinches leftmost-first until none remain. Each rewrite removes two
/// s-letters; `pinches` (optional) receives the number of rewrites.
SyllableWord britton_reduce_syllables(const BSParams& p, SyllableWord sw,
                                      std::size_t* pinches = nullptr);
SyllableWord britton_reduce(const BSParams& p, const Word& w, std::size_t* pinches = nullptr);

bool bs_is_trivial(const BSParams& p, const Word& w);
bool bs_is_trivial(const BSParams& p, const SyllableWord& sw);
bool bs_equal(const BSParams& p, const Word& u, const Word& v);

/// f^i: s -> s, t -> t^(2^i). i = 0 is the identity.
Word apply_f(const Word& w, std::uint64_t i);
SyllableWord apply_f(const SyllableWord& sw, std::uint64_t i);

/// w_0 = 1, w_1 = [s^-1 t s, t], w_i = w_{i-1}(s, [s^-1, t]).
Word w_family(std::uint64_t i);

/// {s -> s, t -> s^-1 t s t^-1}: images under f equal the generators in
/// BS(2,3), so f is onto.
GeneratorMap f_preimage_witnesses();

/// Reduced words w over {s, t}, in shortlex order, with f^i(w) trivial in
/// BS(2,3).
class KernelStream {
 public:
  explicit KernelStream(std::uint64_t iterate);

  Word next();
  /// Membership test for the stream's filter.
  bool admits(const Word& w) const;
  std::uint64_t iterate() const { return iterate_; }
  std::uint64_t candidates_scanned() const { return words_.emitted(); }

 private:
  std::uint64_t iterate_;
  ShortlexStream words_;
};

}  // namespace fpw

#endif  // FPW_BS_HPP
