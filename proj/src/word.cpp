#include "fpw/word.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <unordered_set>

namespace fpw {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::DuplicateGenerator: return "duplicate generator";
    case ErrorCode::UnknownGenerator: return "unknown generator";
    case ErrorCode::AlphabetMismatch: return "alphabet mismatch";
    case ErrorCode::ForeignGenerator: return "foreign generator";
    case ErrorCode::EmptyAlphabet: return "empty alphabet";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::InvalidCertificate: return "invalid certificate";
    case ErrorCode::GeneratorNameClash: return "generator name clash";
    case ErrorCode::DefiningRelatorNotFound: return "defining relator not found";
    case ErrorCode::ArityMismatch: return "arity mismatch";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown error";
}

namespace {

// Largest |k| accepted in `name^k`; each unit expands to a stored letter.
constexpr long long kMaxPower = 1LL << 24;

bool is_reserved(char c) {
  return c == '^' || c == ',' || c == '|' || c == '<' || c == '>' || c == '=';
}

}  // namespace

bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u > 127 || std::isspace(u) || !std::isprint(u) || is_reserved(c);
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::EmptyAlphabet, "alphabet must have at least one generator");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_generator_name(n))
      throw Error(ErrorCode::Parse, "invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorCode::DuplicateGenerator, "duplicate generator '" + n + "'");
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error(ErrorCode::EmptyAlphabet, "word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::span<const Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(free_reduce(letters)) {
  if (!alphabet_) throw Error(ErrorCode::EmptyAlphabet, "word needs an alphabet");
  for (const Letter& l : letters_) {
    if (l.gen >= alphabet_->size())
      throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorCode::InvalidArgument, "letter sign must be +1 or -1");
  }
}

Word Word::generator(AlphabetPtr alphabet, std::size_t gen) {
  Letter l{static_cast<std::uint32_t>(gen), 1};
  return Word(std::move(alphabet), std::span<const Letter>(&l, 1));
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           !is_reserved(text[i]))
      ++i;
    std::string_view name = text.substr(start, i - start);
    if (name.empty())
      throw Error(ErrorCode::Parse, "expected generator name at offset " + std::to_string(start),
                  start);
    auto gen = alphabet->find(name);
    if (!gen)
      throw Error(ErrorCode::UnknownGenerator,
                  "unknown generator '" + std::string(name) + "' at offset " + std::to_string(start),
                  start);
    long long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t num_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view num = text.substr(num_start, i - num_start);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw Error(ErrorCode::Parse, "bad exponent at offset " + std::to_string(num_start),
                    num_start);
      if (k == 0)
        throw Error(ErrorCode::Parse, "zero exponent at offset " + std::to_string(num_start),
                    num_start);
      if (k > kMaxPower || k < -kMaxPower)
        throw Error(ErrorCode::Overflow, "exponent too large at offset " + std::to_string(num_start),
                    num_start);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::Parse,
                  std::string("unexpected '") + text[i] + "' at offset " + std::to_string(i), i);
    Letter l{static_cast<std::uint32_t>(*gen), static_cast<std::int8_t>(k > 0 ? 1 : -1)};
    for (long long j = 0; j < (k > 0 ? k : -k); ++j) raw.push_back(l);
    skip_ws();
  }
  return Word(std::move(alphabet), raw);
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += alphabet_->name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string Word::to_compact_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long run = static_cast<long long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet_->name(letters_[i].gen);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

Word Word::rebind(AlphabetPtr alphabet) const {
  if (!same_alphabet(alphabet_, alphabet))
    throw Error(ErrorCode::AlphabetMismatch, "cannot rebind word to a different alphabet");
  Word w(std::move(alphabet));
  w.letters_ = letters_;
  return w;
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto la = a.letters(), lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i)
    if (la[i].code() != lb[i].code()) return la[i].code() < lb[i].code();
  return false;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letter codes
  std::uint64_t h = 1469598103934665603ULL;
  for (const Letter& l : w.letters()) {
    h ^= l.code() + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void require_same(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "words are over different alphabets");
}

}  // namespace

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet(), out);
}

Word concat(const Word& u, const Word& v) {
  require_same(u, v);
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), raw);
}

Word commutator(const Word& u, const Word& v) {
  require_same(u, v);
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

long long exponent_sum(const Word& w, std::size_t gen) {
  long long sum = 0;
  for (const Letter& l : w.letters())
    if (l.gen == gen) sum += l.sign;
  return sum;
}

Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  std::vector<Letter> raw;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    raw.insert(raw.end(), base.letters().begin(), base.letters().end());
  return Word(w.alphabet(), raw);
}

GeneratorMap::GeneratorMap(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->size())
    throw Error(ErrorCode::ArityMismatch, "generator map needs one image per domain generator");
  for (const Word& w : images_)
    if (!same_alphabet(w.alphabet(), codomain_))
      throw Error(ErrorCode::AlphabetMismatch, "image word is not over the codomain alphabet");
}

GeneratorMap GeneratorMap::identity(AlphabetPtr alphabet) {
  std::vector<Word> images;
  for (std::size_t g = 0; g < alphabet->size(); ++g) images.push_back(Word::generator(alphabet, g));
  return GeneratorMap(alphabet, alphabet, std::move(images));
}

GeneratorMap GeneratorMap::parse(AlphabetPtr domain, AlphabetPtr codomain, std::string_view text) {
  std::vector<std::optional<Word>> images(domain->size());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view clause = text.substr(pos, end - pos);
    std::size_t eq = clause.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Parse, "expected gen=word at offset " + std::to_string(pos), pos);
    std::string_view lhs = clause.substr(0, eq);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.front()))) lhs.remove_prefix(1);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
    auto gen = domain->find(lhs);
    if (!gen)
      throw Error(ErrorCode::UnknownGenerator,
                  "unmapped or unknown domain generator '" + std::string(lhs) + "'", pos);
    if (images[*gen])
      throw Error(ErrorCode::DuplicateGenerator, "generator '" + std::string(lhs) + "' mapped twice",
                  pos);
    try {
      images[*gen] = Word::parse(codomain, clause.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), pos + eq + 1 + e.position().value_or(0));
    }
    pos = end + 1;
  }
  std::vector<Word> out;
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (!images[g])
      throw Error(ErrorCode::UnknownGenerator, "generator '" + domain->name(g) + "' is unmapped");
    out.push_back(std::move(*images[g]));
  }
  return GeneratorMap(std::move(domain), std::move(codomain), std::move(out));
}

std::string GeneratorMap::to_string() const {
  std::string out;
  for (std::size_t g = 0; g < images_.size(); ++g) {
    if (g) out += ',';
    out += domain_->name(g) + '=' + images_[g].to_compact_string();
  }
  return out;
}

bool operator==(const GeneratorMap& a, const GeneratorMap& b) {
  return same_alphabet(a.domain_, b.domain_) && same_alphabet(a.codomain_, b.codomain_) &&
         a.images_ == b.images_;
}

Word substitute(const Word& w, const GeneratorMap& m) {
  if (!same_alphabet(w.alphabet(), m.domain()))
    throw Error(ErrorCode::UnknownGenerator, "word is not over the map's domain");
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    const Word& img = m.image(l.gen);
    if (l.sign > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        raw.push_back(it->inverse());
    }
  }
  return Word(m.codomain(), raw);
}

GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi) {
  if (!same_alphabet(phi.codomain(), psi.domain()))
    throw Error(ErrorCode::AlphabetMismatch, "maps do not compose");
  std::vector<Word> images;
  for (const Word& w : phi.images()) images.push_back(substitute(w, psi));
  return GeneratorMap(phi.domain(), psi.codomain(), std::move(images));
}

namespace detail {

namespace {

// Smallest code that does not cancel against `prev`.
std::uint32_t first_after(std::optional<std::uint32_t> prev) {
  if (!prev) return 0;
  return (*prev ^ 1u) == 0 ? 1 : 0;
}

}  // namespace

std::vector<std::uint32_t> first_reduced_codes(std::size_t len) {
  std::vector<std::uint32_t> codes;
  for (std::size_t i = 0; i < len; ++i)
    codes.push_back(first_after(i ? std::optional(codes.back()) : std::nullopt));
  return codes;
}

bool next_reduced_codes(std::vector<std::uint32_t>& codes, std::uint32_t letter_count) {
  for (std::size_t i = codes.size(); i-- > 0;) {
    std::uint32_t c = codes[i] + 1;
    if (i > 0 && c == (codes[i - 1] ^ 1u)) ++c;
    if (c < letter_count) {
      codes[i] = c;
      for (std::size_t j = i + 1; j < codes.size(); ++j) codes[j] = first_after(codes[j - 1]);
      return true;
    }
  }
  return false;
}

}  // namespace detail

ShortlexStream::ShortlexStream(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error(ErrorCode::EmptyAlphabet, "shortlex stream needs an alphabet");
}

Word ShortlexStream::next() {
  if (!started_) {
    started_ = true;
  } else if (!detail::next_reduced_codes(codes_, static_cast<std::uint32_t>(2 * alphabet_->size()))) {
    codes_ = detail::first_reduced_codes(codes_.size() + 1);
  }
  ++emitted_;
  std::vector<Letter> letters;
  letters.reserve(codes_.size());
  for (auto c : codes_) letters.push_back(Letter::from_code(c));
  return Word(alphabet_, letters);
}

ShortlexIndex::ShortlexIndex(AlphabetPtr alphabet) : alphabet_(alphabet), stream_(alphabet) {}

const Word& ShortlexIndex::at(std::size_t index) {
  while (cache_.size() <= index) cache_.push_back(stream_.next());
  return cache_[index];
}

}  // namespace fpw
