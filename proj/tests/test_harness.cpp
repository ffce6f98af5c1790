#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace fpw;

namespace {

std::vector<std::uint64_t> drain(NatStream& s, std::size_t limit, bool* exhausted = nullptr) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < limit; ++i) {
    auto p = s.pull();
    if (p.state == PullState::Exhausted) {
      if (exhausted) *exhausted = true;
      return out;
    }
    if (p.has_value()) out.push_back(*p.value);
  }
  if (exhausted) *exhausted = false;
  return out;
}

// Emits a fixed script of pulls, including Pending stalls.
class ScriptStream : public NatStream {
 public:
  explicit ScriptStream(std::vector<Pull<std::uint64_t>> script) : script_(std::move(script)) {}
  Pull<std::uint64_t> pull() override {
    return next_ < script_.size() ? script_[next_++] : Pull<std::uint64_t>::exhausted();
  }

 private:
  std::vector<Pull<std::uint64_t>> script_;
  std::size_t next_ = 0;
};

}  // namespace

TEST_CASE("cantor pairing") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 0) == 1);
  CHECK(cantor_pair(0, 1) == 2);
  CHECK(cantor_pair(2, 0) == 3);
  CHECK(cantor_pair(13, 13) == 364);
  CHECK(cantor_unpair(364) == std::pair<std::uint64_t, std::uint64_t>{13, 13});

  // pairs with x + y <= 100 fill exactly {0, ..., 5150}
  std::vector<bool> hit(5151, false);
  for (std::uint64_t x = 0; x <= 100; ++x)
    for (std::uint64_t y = 0; x + y <= 100; ++y) {
      std::uint64_t z = cantor_pair(x, y);
      REQUIRE(z < hit.size());
      REQUIRE_FALSE(hit[z]);
      hit[z] = true;
      REQUIRE(cantor_unpair(z) == std::pair{x, y});
    }
  CHECK(std::find(hit.begin(), hit.end(), false) == hit.end());

  CHECK_THROWS_AS(cantor_pair(~0ull, 1), Error);
  CHECK_THROWS_AS(cantor_pair(1ull << 32, 1ull << 32), Error);
  CHECK(cantor_pair(0, 6074000998) == 18446744070963499499ull);
  auto big = cantor_unpair(~0ull);
  CHECK(cantor_pair(big.first, big.second) == ~0ull);
}

TEST_CASE("n-ary pairing folds left") {
  std::vector<std::uint64_t> xs{3, 1, 4};
  CHECK(cantor_pair_n(xs) == cantor_pair(cantor_pair(3, 1), 4));
  std::vector<std::uint64_t> one{7};
  CHECK(cantor_pair_n(one) == 7);
  for (std::uint64_t z = 0; z < 2000; ++z)
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
      auto v = cantor_unpair_n(z, n);
      REQUIRE(v.size() == n);
      REQUIRE(cantor_pair_n(v) == z);
    }
  CHECK_THROWS_AS(cantor_unpair_n(3, 0), Error);
}

TEST_CASE("compress_stream examples") {
  bool done = false;
  auto c = compress_stream(std::make_unique<ListNatStream>(std::vector<std::uint64_t>{5, 3, 5, 9}));
  CHECK(drain(*c, 100, &done) == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(done);

  auto e = compress_stream(std::make_unique<ListNatStream>(std::vector<std::uint64_t>{}));
  CHECK(drain(*e, 100, &done).empty());
  CHECK(done);

  auto n = compress_stream(std::make_unique<NaturalsStream>());
  auto first = drain(*n, 1000, &done);
  CHECK_FALSE(done);
  REQUIRE(first.size() == 1000);
  for (std::uint64_t i = 0; i < 1000; ++i) CHECK(first[i] == i);
}

TEST_CASE("compress_stream passes stalls through and counts distinct inputs") {
  using P = Pull<std::uint64_t>;
  auto c = compress_stream(std::make_unique<ScriptStream>(
      std::vector<P>{P::pending(), P::item(4), P::item(4), P::pending(), P::item(7)}));
  CHECK(c->pull().state == PullState::Pending);
  CHECK(*c->pull().value == 0);
  CHECK(c->pull().state == PullState::Pending);  // the duplicate 4 is skipped silently
  CHECK(*c->pull().value == 1);
  CHECK(c->pull().state == PullState::Exhausted);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> in(rng() % 30);
    for (auto& v : in) v = rng() % 12;
    auto s = compress_stream(std::make_unique<ListNatStream>(in));
    auto out = drain(*s, 1000);
    std::set<std::uint64_t> distinct(in.begin(), in.end());
    REQUIRE(out.size() == distinct.size());
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == i);
  }
}

TEST_CASE("explicit finite sets") {
  CHECK(ExplicitFiniteSet::parse("7,4,7").values() == std::vector<std::uint64_t>{4, 7});
  CHECK(ExplicitFiniteSet::parse("").size() == 0);
  CHECK(ExplicitFiniteSet::parse(" 1 , 2 ").size() == 2);
  CHECK_THROWS_AS(ExplicitFiniteSet::parse("1,,2"), Error);
  CHECK_THROWS_AS(ExplicitFiniteSet::parse("-1"), Error);
  CHECK_THROWS_AS(ExplicitFiniteSet::parse("x"), Error);
}

TEST_CASE("tower oracle") {
  CHECK_FALSE(tower_oracle(0)(w_family(1)));
  CHECK(tower_oracle(1)(w_family(1)));
  CHECK_FALSE(tower_oracle(1)(w_family(2)));
  for (std::uint64_t k = 0; k < 5; ++k) CHECK(tower_oracle(k)(Word(bs_alphabet())));
}

TEST_CASE("quotient tower presentations") {
  SUBCASE("empty W: relator, then only identity-kernel words") {
    auto src = quotient_tower_presentation(ExplicitFiniteSet{}).open();
    auto first = src->pull();
    REQUIRE(first.has_value());
    CHECK(*first.value == bs_presentation(BSParams{}).relators()[0]);
    auto oracle = tower_oracle(0);
    for (int i = 0; i < 60; ++i) {
      auto p = src->pull();
      if (p.has_value()) REQUIRE(oracle(*p.value));
    }
  }
  SUBCASE("W = {4,7}: every emission lies in the kernel of the second iterate") {
    auto src = quotient_tower_presentation(ExplicitFiniteSet::parse("4,7")).open();
    auto oracle = tower_oracle(2);
    bool nontrivial_in_bs = false;
    for (int i = 0; i < 400; ++i) {
      auto p = src->pull();
      REQUIRE(p.state != PullState::Exhausted);
      if (!p.has_value()) continue;
      REQUIRE(oracle(*p.value));
      nontrivial_in_bs = nontrivial_in_bs || !bs_is_trivial(BSParams{}, *p.value);
    }
    CHECK(nontrivial_in_bs);
    // membership of the w-family in the admitted kernel
    CHECK(KernelStream(2).admits(w_family(2)));
    CHECK_FALSE(tower_oracle(2)(w_family(3)));
  }
  SUBCASE("W = {5}: w_1 is emitted, w_2 never qualifies") {
    auto src = quotient_tower_presentation(ExplicitFiniteSet::parse("5")).open();
    bool seen = false;
    for (int i = 0; i < 200000 && !seen; ++i) {
      auto p = src->pull();
      if (!p.has_value()) continue;
      REQUIRE(tower_oracle(1)(*p.value));
      seen = *p.value == w_family(1);
    }
    CHECK(seen);
    CHECK_FALSE(tower_oracle(1)(w_family(2)));
  }
}

TEST_CASE("recover cardinality") {
  CHECK(recover_cardinality(tower_oracle(0), 4) == 0);
  CHECK(recover_cardinality(tower_oracle(2), 4) == 2);
  CHECK(recover_cardinality(tower_oracle(5), 2) == 3);  // capped at k_max + 1

  // every W within {0..9} of size at most 3
  std::size_t sets = 0;
  for (unsigned mask = 0; mask < 1024; ++mask) {
    std::vector<std::uint64_t> v;
    for (unsigned b = 0; b < 10; ++b)
      if (mask >> b & 1) v.push_back(b);
    if (v.size() > 3) continue;
    ExplicitFiniteSet w(v);
    auto compressed = drain(*compress_stream(std::make_unique<ListNatStream>(w.values())), 100);
    REQUIRE(compressed.size() == w.size());
    REQUIRE(recover_cardinality(tower_oracle(compressed.size()), 4) == w.size());
    ++sets;
  }
  CHECK(sets == 176);
}
