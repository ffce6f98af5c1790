#include "doctest.h"
#include "support.hpp"

#include <map>
#include <set>

using namespace fpw;

namespace {

FinitePresentation P(const char* text) { return FinitePresentation::parse(text); }

ErrorCode parse_error(const char* text) {
  try {
    FinitePresentation::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << text);
  return ErrorCode::InvalidArgument;
}

// A relator source that stalls (Pending) `stalls` times before each relator.
class StallingSource : public RelatorSource {
 public:
  StallingSource(std::vector<Word> words, int stalls) : words_(std::move(words)), stalls_(stalls) {}
  Pull<Word> pull() override {
    if (next_ >= words_.size()) return Pull<Word>::exhausted();
    if (waited_ < stalls_) {
      ++waited_;
      return Pull<Word>::pending();
    }
    waited_ = 0;
    return Pull<Word>::item(words_[next_++]);
  }

 private:
  std::vector<Word> words_;
  int stalls_;
  int waited_ = 0;
  std::size_t next_ = 0;
};

}  // namespace

TEST_CASE("parse_presentation examples") {
  auto bs = P("< s, t | s^-1 t^2 s = t^3 >");
  CHECK(bs.generators()->names() == std::vector<std::string>{"s", "t"});
  REQUIRE(bs.relators().size() == 1);
  CHECK(bs.relators()[0].to_compact_string() == "s^-1 t^2 s t^-3");

  auto free1 = P("< x | >");
  CHECK(free1.generators()->size() == 1);
  CHECK(free1.relators().empty());

  CHECK(P("< x | x x^-1 >").relators().empty());
  CHECK(P("<x,y|x y,x y^-1>").relators().size() == 2);
  CHECK(P("< a | a^2 = >").relators()[0].to_string() == "a a");
  CHECK(P("< s, t | s^-1 t^2 s t^-3 >").to_string() == "< s, t | s^-1 t t s t^-1 t^-1 t^-1 >");
}

TEST_CASE("parse_presentation errors") {
  CHECK(parse_error("< x, x | >") == ErrorCode::DuplicateGenerator);
  CHECK(parse_error("< x | y >") == ErrorCode::UnknownGenerator);
  CHECK(parse_error("x | x >") == ErrorCode::Parse);
  CHECK(parse_error("< x | x ") == ErrorCode::Parse);
  CHECK(parse_error("< | x >") == ErrorCode::Parse);
  CHECK(parse_error("< x | x, >") == ErrorCode::Parse);
  CHECK(parse_error("< x | x = x = x >") == ErrorCode::Parse);
  CHECK(parse_error("< x | x > extra") == ErrorCode::Parse);
  try {
    FinitePresentation::parse("< s, t | s^-1 q >");
  } catch (const Error& e) {
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 14);
  }
}

TEST_CASE("certificate_word examples") {
  auto z2 = P("< x | x^2 >");
  auto x = z2.generators();
  TrivialityCertificate one{{{Word(x), 0, 1}}};
  CHECK(certificate_word(z2, one).to_string() == "x x");
  TrivialityCertificate two{{{Word(x), 0, 1}, {Word(x), 0, 1}}};
  CHECK(certificate_word(z2, two).to_string() == "x x x x");

  auto bs = P("< s, t | s^-1 t^2 s t^-3 >");
  TrivialityCertificate conj{{{Word::parse(bs.generators(), "t"), 0, 1}}};
  CHECK(certificate_word(bs, conj).to_string() == "t s^-1 t t s t^-1 t^-1 t^-1 t^-1");

  TrivialityCertificate bad{{{Word(x), 1, 1}}};
  CHECK_THROWS_AS(certificate_word(z2, bad), Error);
  TrivialityCertificate identity_factor{{{Word::parse(x, "x"), CertificateFactor::kEmptyRelator, 1}}};
  CHECK(certificate_word(z2, identity_factor).empty());
}

TEST_CASE("trivial word stream examples") {
  SUBCASE("Z2 contains x x and the identity") {
    TrivialWordStream s(P("< x | x^2 >"));
    TrivialWord first = s.next();
    CHECK(first.word.empty());
    CHECK(first.certificate.factors.empty());
    CHECK(s.next().word.to_string() == "x x");
  }
  SUBCASE("BS(2,3) emits its relator") {
    auto bs = P("< s, t | s^-1 t^2 s = t^3 >");
    TrivialWordStream s(bs);
    bool seen = false;
    for (int i = 0; i < 10 && !seen; ++i) seen = s.next().word == bs.relators()[0];
    CHECK(seen);
  }
  SUBCASE("free group emits only the identity") {
    TrivialWordStream s(P("< x | >"));
    for (int i = 0; i < 50; ++i) CHECK(s.next().word.empty());
  }
}

TEST_CASE("trivial word stream order within a stage") {
  // Stage 1 of <x | x^2>: (n=1, cost 0, length 0): +r then -r.
  TrivialWordStream s(P("< x | x^2 >"));
  s.next();
  auto a = s.next();
  auto b = s.next();
  CHECK(a.word.to_string() == "x x");
  CHECK(b.word.to_string() == "x^-1 x^-1");
  CHECK(s.stage() == 1);
  // Stage 2 opens with one factor, conjugator x, positive sign.
  auto c = s.next();
  CHECK(s.stage() == 2);
  REQUIRE(c.certificate.factors.size() == 1);
  CHECK(c.certificate.factors[0].conjugator.to_string() == "x");
  CHECK(c.certificate.factors[0].sign == 1);
}

TEST_CASE("soundness: every emission evaluates to its word") {
  for (const char* text : {"< x | x^2 >", "< s, t | s^-1 t^2 s = t^3 >", "< a, b | a b a^-1 b^-1, a^3 >"}) {
    auto p = P(text);
    TrivialWordStream s(p);
    for (int i = 0; i < 3000; ++i) {
      TrivialWord tw = s.next();
      REQUIRE(certificate_word(p, tw.certificate) == tw.word);
    }
  }
}

TEST_CASE("completeness at desk scale: x^(2k) for |k| <= 3 in <x | x^2>") {
  // The stream is deterministic, so first-appearance positions are pinned.
  auto z2 = P("< x | x^2 >");
  constexpr std::uint64_t kBudget = 40;
  const std::map<long long, std::uint64_t> expected{{-6, 39}, {-4, 11}, {-2, 3}, {0, 1}, {2, 2}, {4, 8}, {6, 32}};
  std::map<long long, std::uint64_t> first_seen;
  TrivialWordStream s(z2);
  for (std::uint64_t i = 1; i <= kBudget; ++i) {
    Word w = s.next().word;
    long long e = exponent_sum(w, 0);
    if (static_cast<long long>(w.size()) == (e < 0 ? -e : e) && e % 2 == 0 && !first_seen.count(e))
      first_seen[e] = i;
  }
  for (long long k = -3; k <= 3; ++k) {
    CAPTURE(k);
    REQUIRE(first_seen.count(2 * k));
    CHECK(first_seen[2 * k] == expected.at(2 * k));
  }
}

TEST_CASE("semidecide_trivial") {
  auto z2 = P("< x | x^2 >");
  auto x = z2.generators();
  auto v = semidecide_trivial(z2, Word::parse(x, "x x"), 100);
  REQUIRE(std::holds_alternative<ProvedTrivial>(v));
  CHECK(certificate_word(z2, std::get<ProvedTrivial>(v).certificate).to_string() == "x x");

  for (std::uint64_t budget : {0u, 1u, 10u, 1000u}) {
    auto e = semidecide_trivial(z2, Word::parse(x, "x"), budget);
    REQUIRE(std::holds_alternative<Exhausted>(e));
    CHECK(std::get<Exhausted>(e).steps == budget);
  }

  auto bs = P("< s, t | s^-1 t^2 s = t^3 >");
  auto r = semidecide_trivial(bs, bs.relators()[0], 100);
  REQUIRE(std::holds_alternative<ProvedTrivial>(r));
  CHECK(certificate_word(bs, std::get<ProvedTrivial>(r).certificate) == bs.relators()[0]);

  CHECK(std::holds_alternative<ProvedTrivial>(semidecide_trivial(z2, Word(x), 1)));
  CHECK_THROWS_AS(semidecide_trivial(z2, fpw::testing::st("s"), 10), Error);
}

TEST_CASE("recursive presentations: stalls delay but do not lose relators") {
  auto x = make_alphabet({"x"});
  std::vector<Word> rels{Word::parse(x, "x^4"), Word::parse(x, "x^6")};
  RecursivePresentation slow(x, [rels] { return std::make_unique<StallingSource>(rels, 3); });
  auto prefix = slow.prefix(5);
  CHECK(prefix == rels);

  TrivialWordStream s(slow);
  bool saw_x2 = false;
  for (int i = 0; i < 20000 && !saw_x2; ++i) {
    TrivialWord tw = s.next();
    REQUIRE(certificate_word(x, s.relators(), tw.certificate) == tw.word);
    saw_x2 = tw.word == Word::parse(x, "x^2");
  }
  // x^2 = x^6 x^-4 is a consequence of the two relators
  CHECK(saw_x2);
  CHECK(s.relators().size() == 2);

  auto verdict = semidecide_trivial(slow, Word::parse(x, "x^-2"), 20000);
  CHECK(std::holds_alternative<ProvedTrivial>(verdict));
}

TEST_CASE("distinct wrapper drops repeated words") {
  DistinctTrivialWordStream d(P("< x | x^2 >"));
  std::set<std::string> seen;
  // only x^(2k) are trivial, so seven distinct words cover |k| <= 3
  for (int i = 0; i < 7; ++i) CHECK(seen.insert(d.next().word.to_string()).second);
  CHECK(seen.count("x^-1 x^-1 x^-1 x^-1 x^-1 x^-1"));
  CHECK(d.underlying_emitted() > 7);
}
