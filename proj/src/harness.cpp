#include "fpw/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "fpw/bs.hpp"

namespace fpw {

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  using u128 = unsigned __int128;
  u128 s = static_cast<u128>(x) + y;
  if (s >> 33) throw Error(ErrorCode::Overflow, "Cantor pair exceeds 64 bits");
  u128 z = s * (s + 1) / 2 + y;
  if (z > UINT64_MAX) throw Error(ErrorCode::Overflow, "Cantor pair exceeds 64 bits");
  return static_cast<std::uint64_t>(z);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  using u128 = unsigned __int128;
  // largest w with w(w+1)/2 <= z
  auto w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  auto y = static_cast<std::uint64_t>(z - w * (w + 1) / 2);
  auto x = static_cast<std::uint64_t>(w - y);
  return {x, y};
}

std::uint64_t cantor_pair_n(std::span<const std::uint64_t> xs) {
  if (xs.empty()) throw Error(ErrorCode::InvalidArgument, "cannot pair an empty tuple");
  std::uint64_t z = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) z = cantor_pair(z, xs[i]);
  return z;
}

std::vector<std::uint64_t> cantor_unpair_n(std::uint64_t z, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot unpair into an empty tuple");
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = n; i-- > 1;) {
    auto [rest, last] = cantor_unpair(z);
    out[i] = last;
    z = rest;
  }
  out[0] = z;
  return out;
}

Pull<std::uint64_t> ListNatStream::pull() {
  if (next_ >= values_.size()) return Pull<std::uint64_t>::exhausted();
  return Pull<std::uint64_t>::item(values_[next_++]);
}

Pull<std::uint64_t> CompressStream::pull() {
  for (;;) {
    auto in = input_->pull();
    if (!in.has_value()) return in;
    auto it = std::lower_bound(seen_.begin(), seen_.end(), *in.value);
    if (it != seen_.end() && *it == *in.value) continue;
    seen_.insert(it, *in.value);
    return Pull<std::uint64_t>::item(next_++);
  }
}

std::unique_ptr<NatStream> compress_stream(std::unique_ptr<NatStream> input) {
  return std::make_unique<CompressStream>(std::move(input));
}

ExplicitFiniteSet::ExplicitFiniteSet(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

ExplicitFiniteSet ExplicitFiniteSet::parse(std::string_view text) {
  std::vector<std::uint64_t> values;
  auto is_blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
  };
  if (is_blank(text)) return ExplicitFiniteSet();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::Parse, "expected a natural number at offset " + std::to_string(pos), pos);
    values.push_back(v);
    pos = end + 1;
  }
  return ExplicitFiniteSet(std::move(values));
}

WordOracle tower_oracle(std::uint64_t k) {
  return [k](const Word& w) { return bs_is_trivial(BSParams{2, 3}, apply_f(to_syllables(w), k)); };
}

namespace {

class TowerRelators : public RelatorSource {
 public:
  explicit TowerRelators(std::size_t levels) {
    streams_.emplace_back(0);
    for (std::size_t i = 0; i < levels; ++i) streams_.emplace_back(i + 1);
  }

  Pull<Word> pull() override {
    if (!sent_relator_) {
      sent_relator_ = true;
      return Pull<Word>::item(bs_presentation(BSParams{2, 3}).relators().front());
    }
    KernelStream& ks = streams_[turn_];
    turn_ = (turn_ + 1) % streams_.size();
    return Pull<Word>::item(ks.next());
  }

 private:
  bool sent_relator_ = false;
  std::vector<KernelStream> streams_;
  std::size_t turn_ = 0;
};

}  // namespace

RecursivePresentation quotient_tower_presentation(const ExplicitFiniteSet& w) {
  CompressStream compressed(std::make_unique<ListNatStream>(w.values()));
  std::size_t levels = 0;
  while (compressed.pull().has_value()) ++levels;
  return RecursivePresentation(bs_alphabet(), [levels] { return std::make_unique<TowerRelators>(levels); });
}

std::uint64_t recover_cardinality(const WordOracle& oracle, std::uint64_t k_max) {
  std::uint64_t best = 0;
  for (std::uint64_t j = 0; j <= k_max + 1; ++j)
    if (oracle(w_family(j))) best = j;
  return best;
}

}  // namespace fpw
