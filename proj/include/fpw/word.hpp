// Free-group words over a finite alphabet.
//
// Every Word held by the library is freely reduced. Raw letter sequences are
// only accepted at parse boundaries and by the explicit free_reduce entry
// point, which is what all constructors go through.

#ifndef FPW_WORD_HPP
#define FPW_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpw/error.hpp"

namespace fpw {

/// True iff `name` is a legal generator identifier.
bool valid_generator_name(std::string_view name);

/// An ordered, duplicate-free list of generator names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Same generator list (pointer identity or equal names).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// A generator index with a sign. `code()` gives the position in the fixed
/// letter order g0, g0^-1, g1, g1^-1, ... used by shortlex enumeration.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  static Letter from_code(std::uint32_t code) {
    return {code / 2, static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }
  std::uint32_t code() const { return 2 * gen + (sign < 0 ? 1u : 0u); }
  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Cancel adjacent inverse pairs until none remain.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

class Word {
 public:
  /// The identity word over `alphabet`.
  explicit Word(AlphabetPtr alphabet);
  /// Reduces `letters`; throws UnknownGenerator if a letter is out of range.
  Word(AlphabetPtr alphabet, std::span<const Letter> letters);

  /// Parse `name` / `name^k` tokens separated by whitespace.
  static Word parse(AlphabetPtr alphabet, std::string_view text);
  static Word generator(AlphabetPtr alphabet, std::size_t gen);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// One token per letter: `s^-1 t t s`. The identity prints as "".
  std::string to_string() const;
  /// Runs collapsed into powers: `s^-1 t^2 s`.
  std::string to_compact_string() const;

  /// The same letters over another alphabet with identical names.
  Word rebind(AlphabetPtr alphabet) const;

  friend bool operator==(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Shortlex order: shorter first, then by letter code.
bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
/// Exponent sum of generator `gen` in `w`.
long long exponent_sum(const Word& w, std::size_t gen);
/// `w^k` for any integer k.
Word power(const Word& w, long long k);

/// Images of every domain generator as words over the codomain.
class GeneratorMap {
 public:
  GeneratorMap(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  static GeneratorMap identity(AlphabetPtr alphabet);
  /// `gen=word` pairs separated by commas, e.g. `s=s,t=t^2`. Every domain
  /// generator must be mapped exactly once.
  static GeneratorMap parse(AlphabetPtr domain, AlphabetPtr codomain,
                            std::string_view text);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  const Word& image(std::size_t gen) const { return images_.at(gen); }
  const std::vector<Word>& images() const { return images_; }

  std::string to_string() const;

  friend bool operator==(const GeneratorMap&, const GeneratorMap&);

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

/// Letterwise substitution, free-reduced.
Word substitute(const Word& w, const GeneratorMap& m);

/// psi after phi: x -> psi(phi(x)).
GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi);

/// Every reduced word exactly once, in shortlex order over the letter order
/// g0, g0^-1, g1, g1^-1, ... (declaration order, each generator followed by
/// its inverse).
class ShortlexStream {
 public:
  explicit ShortlexStream(AlphabetPtr alphabet);

  Word next();
  std::uint64_t emitted() const { return emitted_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::uint32_t> codes_;
  bool started_ = false;
  std::uint64_t emitted_ = 0;
};

/// Random access into the shortlex stream, backed by a growing cache.
class ShortlexIndex {
 public:
  explicit ShortlexIndex(AlphabetPtr alphabet);
  const Word& at(std::size_t index);
  const AlphabetPtr& alphabet() const { return alphabet_; }

 private:
  AlphabetPtr alphabet_;
  ShortlexStream stream_;
  std::vector<Word> cache_;
};

namespace detail {
/// Lexicographically first reduced code sequence of length `len`.
std::vector<std::uint32_t> first_reduced_codes(std::size_t len);
/// Advance to the next reduced code sequence of the same length; false when
/// the last one has been passed.
bool next_reduced_codes(std::vector<std::uint32_t>& codes, std::uint32_t letter_count);
}  // namespace detail

}  // namespace fpw

#endif  // FPW_WORD_HPP
