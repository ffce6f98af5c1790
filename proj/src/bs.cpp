#include "fpw/bs.hpp"

namespace fpw {

namespace {

// Expanding a syllable word refuses t-runs longer than this.
const BigInt kMaxExpandedRun = BigInt(1) << 26;

void normalize(std::vector<BigInt>& powers, std::vector<int>& signs) {
  // Cancel s^e t^0 s^-e, merging the neighbouring t-runs.
  std::vector<BigInt> p{powers.front()};
  std::vector<int> e;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (!e.empty() && e.back() == -signs[j] && p.back() == 0) {
      e.pop_back();
      p.pop_back();
      p.back() += powers[j + 1];
    } else {
      e.push_back(signs[j]);
      p.push_back(powers[j + 1]);
    }
  }
  powers = std::move(p);
  signs = std::move(e);
}

std::size_t letter_gen(const Word& w, const Letter& l) {
  const std::string& name = w.alphabet()->name(l.gen);
  if (name == "s") return 0;
  if (name == "t") return 1;
  throw Error(ErrorCode::ForeignGenerator, "generator '" + name + "' is not s or t");
}

SyllableWord syllable_inverse(const SyllableWord& sw) {
  std::vector<BigInt> powers(sw.powers().rbegin(), sw.powers().rend());
  for (auto& a : powers) a = -a;
  std::vector<int> signs;
  for (auto it = sw.signs().rbegin(); it != sw.signs().rend(); ++it) signs.push_back(-*it);
  return SyllableWord(std::move(powers), std::move(signs));
}

SyllableWord syllable_concat(const SyllableWord& a, const SyllableWord& b) {
  std::vector<BigInt> powers = a.powers();
  powers.back() += b.powers().front();
  powers.insert(powers.end(), b.powers().begin() + 1, b.powers().end());
  std::vector<int> signs = a.signs();
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  return SyllableWord(std::move(powers), std::move(signs));
}

}  // namespace

BSParams::BSParams(BigInt m_, BigInt n_) : m(std::move(m_)), n(std::move(n_)) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "BS parameters must be >= 1");
}

const AlphabetPtr& bs_alphabet() {
  static const AlphabetPtr alphabet = make_alphabet({"s", "t"});
  return alphabet;
}

FinitePresentation bs_presentation(const BSParams& p) {
  if (p.m > kMaxExpandedRun || p.n > kMaxExpandedRun)
    throw Error(ErrorCode::Overflow, "BS parameters too large to write out as a relator");
  SyllableWord rel({BigInt(0), p.m, -p.n}, {-1, 1});
  return FinitePresentation(bs_alphabet(), {from_syllables(rel)});
}

SyllableWord::SyllableWord() : powers_{BigInt(0)} {}

SyllableWord::SyllableWord(std::vector<BigInt> powers, std::vector<int> signs)
    : powers_(std::move(powers)), signs_(std::move(signs)) {
  if (powers_.size() != signs_.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "syllable word needs one more t-run than s-letters");
  for (int e : signs_)
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "s-letter sign must be +1 or -1");
  normalize(powers_, signs_);
}

std::string SyllableWord::to_string() const {
  std::string out = "t^" + powers_[0].str();
  for (std::size_t j = 0; j < signs_.size(); ++j) {
    out += signs_[j] > 0 ? " s^1" : " s^-1";
    out += " t^" + powers_[j + 1].str();
  }
  return out;
}

SyllableWord to_syllables(const Word& w) {
  // Word length fits in 64 bits, so runs are summed natively.
  std::vector<BigInt> powers;
  std::vector<int> signs;
  std::int64_t run = 0;
  std::vector<std::size_t> role;  // alphabet index -> 0 for s, 1 for t
  for (const Letter& l : w.letters()) {
    if (l.gen >= role.size()) role.resize(l.gen + 1, 2);
    if (role[l.gen] == 2) role[l.gen] = letter_gen(w, l);
    if (role[l.gen] == 1) {
      run += l.sign;
    } else {
      signs.push_back(l.sign);
      powers.emplace_back(run);
      run = 0;
    }
  }
  powers.emplace_back(run);
  return SyllableWord(std::move(powers), std::move(signs));
}

Word from_syllables(const SyllableWord& sw) {
  std::vector<Letter> letters;
  auto emit_run = [&](const BigInt& a) {
    if (abs(a) > kMaxExpandedRun) throw Error(ErrorCode::Overflow, "t-power too large to expand: " + a.str());
    auto k = a.convert_to<long long>();
    Letter t{1, static_cast<std::int8_t>(k > 0 ? 1 : -1)};
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) letters.push_back(t);
  };
  emit_run(sw.powers()[0]);
  for (std::size_t j = 0; j < sw.signs().size(); ++j) {
    letters.push_back({0, static_cast<std::int8_t>(sw.signs()[j])});
    emit_run(sw.powers()[j + 1]);
  }
  return Word(bs_alphabet(), letters);
}

SyllableWord britton_reduce_syllables(const BSParams& p, SyllableWord sw, std::size_t* pinches) {
  auto& powers = sw.powers_;
  auto& signs = sw.signs_;
  std::size_t count = 0;
  std::size_t j = 0;
  while (j + 1 < signs.size()) {
    const BigInt& a = powers[j + 1];
    BigInt replaced;
    if (signs[j] < 0 && signs[j + 1] > 0 && a % p.m == 0) {
      replaced = a / p.m * p.n;
    } else if (signs[j] > 0 && signs[j + 1] < 0 && a % p.n == 0) {
      replaced = a / p.n * p.m;
    } else {
      ++j;
      continue;
    }
    powers[j] += replaced + powers[j + 2];
    powers.erase(powers.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                 powers.begin() + static_cast<std::ptrdiff_t>(j) + 3);
    signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(j),
                signs.begin() + static_cast<std::ptrdiff_t>(j) + 2);
    ++count;
    // the merged run can only create a pinch with the s-letter to its left
    if (j > 0) --j;
  }
  if (pinches) *pinches = count;
  return sw;
}

SyllableWord britton_reduce(const BSParams& p, const Word& w, std::size_t* pinches) {
  return britton_reduce_syllables(p, to_syllables(w), pinches);
}

bool bs_is_trivial(const BSParams& p, const SyllableWord& sw) {
  return britton_reduce_syllables(p, sw).is_identity();
}

bool bs_is_trivial(const BSParams& p, const Word& w) { return bs_is_trivial(p, to_syllables(w)); }

bool bs_equal(const BSParams& p, const Word& u, const Word& v) {
  return bs_is_trivial(p, syllable_concat(to_syllables(u), syllable_inverse(to_syllables(v))));
}

SyllableWord apply_f(const SyllableWord& sw, std::uint64_t i) {
  SyllableWord out = sw;
  if (i == 0) return out;
  BigInt scale = BigInt(1) << i;
  for (auto& a : out.powers_) a *= scale;
  return out;
}

Word apply_f(const Word& w, std::uint64_t i) { return from_syllables(apply_f(to_syllables(w), i)); }

Word w_family(std::uint64_t i) {
  const AlphabetPtr& st = bs_alphabet();
  Word s = Word::generator(st, 0);
  Word t = Word::generator(st, 1);
  if (i == 0) return Word(st);
  Word w = commutator(concat(concat(invert(s), t), s), t);
  GeneratorMap g(st, st, {s, commutator(invert(s), t)});
  for (std::uint64_t k = 2; k <= i; ++k) w = substitute(w, g);
  return w;
}

GeneratorMap f_preimage_witnesses() {
  const AlphabetPtr& st = bs_alphabet();
  return GeneratorMap(st, st, {Word::parse(st, "s"), Word::parse(st, "s^-1 t s t^-1")});
}

KernelStream::KernelStream(std::uint64_t iterate) : iterate_(iterate), words_(bs_alphabet()) {}

bool KernelStream::admits(const Word& w) const {
  return bs_is_trivial(BSParams{2, 3}, apply_f(to_syllables(w), iterate_));
}

Word KernelStream::next() {
  for (;;) {
    Word w = words_.next();
    if (admits(w)) return w;
  }
}

}  // namespace fpw
