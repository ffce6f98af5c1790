#include "doctest.h"
#include "support.hpp"

using namespace fpw;

namespace {

FinitePresentation P(const char* text) { return FinitePresentation::parse(text); }

Word W(const FinitePresentation& p, const char* text) { return Word::parse(p.generators(), text); }

ErrorCode error_of(const FinitePresentation& p, const TietzeMove& mv) {
  try {
    apply_move(p, mv);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("move unexpectedly succeeded");
  return ErrorCode::InvalidArgument;
}

// x^2 . x^2 as two unconjugated copies of relator 0
TrivialityCertificate twice() {
  auto x = make_alphabet({"x"});
  return {{{Word(x), 0, 1}, {Word(x), 0, 1}}};
}

}  // namespace

TEST_CASE("apply_move examples") {
  auto z2 = P("< x | x^2 >");
  auto bigger = apply_move(z2, AddRelator{W(z2, "x^4"), twice()});
  CHECK(bigger == P("< x | x^2, x^4 >"));
  CHECK(apply_move(bigger, RemoveRelator{1, twice()}) == z2);

  auto free1 = P("< x | >");
  auto with_y = apply_move(free1, AddGenerator{"y", W(free1, "x x")});
  CHECK(with_y.to_string() == "< x, y | y x^-1 x^-1 >");
  CHECK(apply_move(with_y, RemoveGenerator{"y", 0}) == free1);
}

TEST_CASE("apply_move errors") {
  auto z2 = P("< x | x^2 >");
  TrivialityCertificate once{{{Word(z2.generators()), 0, 1}}};
  CHECK(error_of(z2, AddRelator{W(z2, "x^4"), once}) == ErrorCode::InvalidCertificate);
  CHECK(error_of(z2, AddRelator{W(z2, "x^4"), std::nullopt}) == ErrorCode::InvalidCertificate);
  TrivialityCertificate dangling{{{Word(z2.generators()), 3, 1}}};
  CHECK(error_of(z2, AddRelator{W(z2, "x^2"), dangling}) == ErrorCode::InvalidCertificate);
  CHECK(error_of(z2, RemoveRelator{1, once}) == ErrorCode::IndexOutOfRange);
  // the only relator cannot be certified by the empty remainder
  CHECK(error_of(z2, RemoveRelator{0, TrivialityCertificate{}}) == ErrorCode::InvalidCertificate);
  CHECK(error_of(z2, AddGenerator{"x", W(z2, "x")}) == ErrorCode::GeneratorNameClash);
  CHECK(error_of(z2, AddGenerator{"y^", W(z2, "x")}) == ErrorCode::InvalidArgument);
  auto two = P("< x, y | y x y, x^2 >");
  CHECK(error_of(two, RemoveGenerator{"y", 0}) == ErrorCode::DefiningRelatorNotFound);
  CHECK(error_of(two, RemoveGenerator{"y", 1}) == ErrorCode::DefiningRelatorNotFound);
  CHECK(error_of(two, RemoveGenerator{"y", 5}) == ErrorCode::IndexOutOfRange);
  CHECK(error_of(two, RemoveGenerator{"z", 0}) == ErrorCode::UnknownGenerator);
  CHECK(error_of(z2, RemoveGenerator{"x", 0}) == ErrorCode::EmptyAlphabet);
}

TEST_CASE("RemoveGenerator substitutes the definition") {
  auto p = P("< a, b, c | c a^-1 b^-1, c^2 b^-1 >");
  // c a^-1 b^-1 = c (b a)^-1 defines c = b a
  auto q = apply_move(p, RemoveGenerator{"c", 0});
  CHECK(q.to_string() == "< a, b | b a b a b^-1 >");
  // inverse orientation w g^-1 is accepted too
  auto r = apply_move(P("< a, b | a b^-1 >"), RemoveGenerator{"b", 0});
  CHECK(r.to_string() == "< a | >");
}

TEST_CASE("apply_sequence") {
  auto z2 = P("< x | x^2 >");
  auto empty = apply_sequence(z2, {});
  CHECK(empty.presentation == z2);
  CHECK(empty.log.empty());

  auto round = apply_sequence(z2, {AddRelator{W(z2, "x^4"), twice()}, RemoveRelator{1, twice()}});
  CHECK(round.presentation == z2);
  REQUIRE(round.log.size() == 2);
  CHECK(round.log[0].before == presentation_hash(z2));
  CHECK(round.log[0].after == round.log[1].before);
  CHECK(round.log[1].after == presentation_hash(z2));
  CHECK(round.log[0].after != round.log[0].before);

  auto gen = apply_sequence(z2, {AddGenerator{"y", W(z2, "x^-1")}, RemoveGenerator{"y", 1}});
  CHECK(gen.presentation == z2);

  try {
    apply_sequence(z2, {AddRelator{W(z2, "x^4"), twice()}, RemoveRelator{7, twice()}});
    FAIL("expected failure");
  } catch (const SequenceError& e) {
    CHECK(e.step() == 1);
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("presentation hash is canonical") {
  CHECK(presentation_hash(P("< x | x^2, x^3 >")) == presentation_hash(P("< x | x^3, x^2 >")));
  CHECK(presentation_hash(P("< x | x^2 >")) != presentation_hash(P("< x | x^3 >")));
  CHECK(presentation_hash(P("< x | x^2 >")).size() == 16);
}

TEST_CASE("check_move examples") {
  auto z2 = P("< x | x^2 >");
  TrivialityCertificate bogus{{{W(z2, "x"), 0, -1}}};
  auto bad = check_move(z2, AddRelator{W(z2, "x^4"), bogus}, 0);
  REQUIRE(std::holds_alternative<MoveInvalid>(bad));
  CHECK(std::get<MoveInvalid>(bad).code == ErrorCode::InvalidCertificate);

  auto with_y = P("< x, y | y x^-2 >");
  CHECK(std::holds_alternative<MoveValid>(check_move(with_y, RemoveGenerator{"y", 0}, 0)));

  auto bigger = P("< x | x^2, x^4 >");
  auto found = check_move(bigger, RemoveRelator{1, std::nullopt}, 1000);
  REQUIRE(std::holds_alternative<MoveValid>(found));
  const auto& cert = std::get<MoveValid>(found).found_certificate;
  REQUIRE(cert.has_value());
  // the found certificate re-verifies against the remaining relators and makes the move apply
  CHECK(certificate_word(z2, *cert) == W(z2, "x^4"));
  CHECK(apply_move(bigger, RemoveRelator{1, cert}) == z2);

  auto cannot = check_move(P("< x | x^2, x^3 >"), RemoveRelator{1, std::nullopt}, 500);
  REQUIRE(std::holds_alternative<MoveUnverifiable>(cannot));
  CHECK(std::get<MoveUnverifiable>(cannot).budget == 500);

  auto add = check_move(z2, AddRelator{W(z2, "x^-2"), std::nullopt}, 100);
  CHECK(std::holds_alternative<MoveValid>(add));
  CHECK(std::holds_alternative<MoveInvalid>(check_move(z2, RemoveRelator{4, std::nullopt}, 10)));
}

TEST_CASE("round trips on random presentations") {
  std::mt19937_64 rng(31);
  auto a = make_alphabet({"a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> rels;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i)
      rels.push_back(fpw::testing::random_reduced(rng, a, 1 + rng() % 6));
    FinitePresentation p(a, rels);
    auto cert = fpw::testing::random_certificate(rng, a, rels.size(), 3, 3);
    Word w = certificate_word(p, cert);
    auto added = apply_move(p, AddRelator{w, cert});
    CHECK(apply_move(added, RemoveRelator{rels.size(), cert}) == p);

    Word def = fpw::testing::random_reduced(rng, a, rng() % 5);
    auto grown = apply_move(p, AddGenerator{"c", def});
    CHECK(apply_move(grown, RemoveGenerator{"c", rels.size()}) == p);
  }
}

TEST_CASE("random sequences are accepted and keep the abelianization") {
  // Abelian invariants are an isomorphism invariant, which gives an
  // independent check next to the isomorphism search used in acceptance.
  std::mt19937_64 rng(37);
  for (const char* start : {"< x | x^2 >", "< x | >", "< x | x^3 >"}) {
    auto p = P(start);
    for (int trial = 0; trial < 30; ++trial) {
      auto moves = fpw::testing::random_tietze_sequence(rng, p, 6);
      auto result = apply_sequence(p, moves);
      CHECK(result.log.size() == moves.size());
      CHECK(abelianization_invariants(result.presentation) == abelianization_invariants(p));
      for (std::size_t i = 1; i < result.log.size(); ++i) CHECK(result.log[i - 1].after == result.log[i].before);
    }
  }
}
