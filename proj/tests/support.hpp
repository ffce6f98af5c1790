// Shared helpers for the test binaries: seeded generators and small parsers.
#ifndef FPW_TESTS_SUPPORT_HPP
#define FPW_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fpw/fpw.hpp"

namespace fpw::testing {

inline Word st(const std::string& text) { return Word::parse(bs_alphabet(), text); }

/// Uniform random reduced word of exactly `len` letters.
inline Word random_reduced(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * a->size() - 1));
  while (letters.size() < len) {
    Letter l = Letter::from_code(pick(rng));
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word(a, letters);
}

/// Random, possibly unreduced, letter sequence.
inline std::vector<Letter> random_letters(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * a->size() - 1));
  for (std::size_t i = 0; i < len; ++i) letters.push_back(Letter::from_code(pick(rng)));
  return letters;
}

/// Random certificate over `relator_count` relators.
inline TrivialityCertificate random_certificate(std::mt19937_64& rng, const AlphabetPtr& a,
                                                std::size_t relator_count, std::size_t max_factors,
                                                std::size_t max_conj) {
  std::uniform_int_distribution<std::size_t> factors(1, max_factors);
  std::uniform_int_distribution<std::size_t> conj_len(0, max_conj);
  std::uniform_int_distribution<std::size_t> rel(0, relator_count - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  TrivialityCertificate cert;
  std::size_t n = factors(rng);
  for (std::size_t i = 0; i < n; ++i)
    cert.factors.push_back({random_reduced(rng, a, conj_len(rng)), static_cast<std::int64_t>(rel(rng)),
                            coin(rng) ? 1 : -1});
  return cert;
}

/// A random valid Tietze sequence of 1..max_len moves. Moves are kept
/// undoable in stack order: removals only ever undo the latest addition, so
/// each removal has a certificate (or defining relator) by construction.
/// At most one generator is added, with a definition of length <= 2, which
/// keeps the isomorphism search between the ends small.
inline std::vector<TietzeMove> random_tietze_sequence(std::mt19937_64& rng, const FinitePresentation& start,
                                                      std::size_t max_len) {
  std::vector<TietzeMove> moves;
  std::vector<TietzeMove> undo;
  FinitePresentation current = start;
  bool added_generator = false;
  const std::size_t len = 1 + rng() % max_len;
  while (moves.size() < len) {
    const unsigned choice = rng() % 3;
    std::optional<TietzeMove> picked;
    if (choice == 0 && !undo.empty()) {
      picked = undo.back();
      undo.pop_back();
      if (std::holds_alternative<RemoveGenerator>(*picked)) added_generator = false;
    } else if (choice == 1 && !current.relators().empty()) {
      auto cert = random_certificate(rng, current.generators(), current.relators().size(), 2, 1);
      Word w = certificate_word(current, cert);
      if (w.empty()) continue;
      picked = AddRelator{w, cert};
      undo.push_back(RemoveRelator{current.relators().size(), cert});
    } else if (choice == 2 && !added_generator) {
      Word def = random_reduced(rng, current.generators(), 1 + rng() % 2);
      picked = AddGenerator{"y", def};
      undo.push_back(RemoveGenerator{"y", current.relators().size()});
      added_generator = true;
    } else {
      continue;
    }
    current = apply_move(current, *picked);
    moves.push_back(std::move(*picked));
  }
  return moves;
}

}  // namespace fpw::testing

#endif  // FPW_TESTS_SUPPORT_HPP
