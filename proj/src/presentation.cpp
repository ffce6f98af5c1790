#include "fpw/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace fpw {

FinitePresentation::FinitePresentation(AlphabetPtr generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  if (!generators_) throw Error(ErrorCode::EmptyAlphabet, "presentation needs generators");
  for (const Word& r : relators_)
    if (!same_alphabet(r.alphabet(), generators_))
      throw Error(ErrorCode::AlphabetMismatch, "relator is not over the presentation's generators");
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  /// Text up to (not including) the first of `stops`.
  std::string_view until_any(std::string_view stops) {
    std::size_t start = pos_;
    while (!at_end() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] static void fail_at(std::size_t at, const std::string& msg) {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(at), at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Word parse_word_at(const AlphabetPtr& gens, std::string_view text, std::size_t offset) {
  try {
    return Word::parse(gens, text);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), offset + e.position().value_or(0));
  }
}

}  // namespace

FinitePresentation FinitePresentation::parse(std::string_view text) {
  Cursor cur(text);
  cur.expect('<');
  std::vector<std::string> names;
  for (;;) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    std::string_view name = trim(cur.until_any(",|>"));
    if (name.empty()) {
      // `< | ... >` is rejected: presentations need at least one generator.
      Cursor::fail_at(at, "expected generator name");
    }
    if (!valid_generator_name(name)) Cursor::fail_at(at, "invalid generator name '" + std::string(name) + "'");
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw Error(ErrorCode::DuplicateGenerator,
                  "duplicate generator '" + std::string(name) + "' at offset " + std::to_string(at), at);
    names.emplace_back(name);
    char c = cur.peek();
    if (c == ',') {
      cur.expect(',');
      continue;
    }
    if (c == '|') break;
    cur.fail("expected ',' or '|'");
  }
  cur.expect('|');
  auto gens = make_alphabet(std::move(names));

  std::vector<Word> relators;
  for (bool first_clause = true;; first_clause = false) {
    std::size_t at = cur.pos();
    std::string_view clause = cur.until_any(",>");
    if (cur.at_end()) cur.fail("expected '>'");
    std::size_t eq = clause.find('=');
    bool last = cur.peek() == '>';
    if (trim(clause).empty()) {
      // Only `< x | >` may have an empty relator section.
      if (!(last && first_clause)) Cursor::fail_at(at, "empty relator clause");
    } else if (eq == std::string_view::npos) {
      Word r = parse_word_at(gens, clause, at);
      if (!r.empty()) relators.push_back(std::move(r));
    } else {
      if (clause.find('=', eq + 1) != std::string_view::npos)
        Cursor::fail_at(at + clause.find('=', eq + 1), "second '=' in relator");
      Word lhs = parse_word_at(gens, clause.substr(0, eq), at);
      Word rhs = parse_word_at(gens, clause.substr(eq + 1), at + eq + 1);
      Word r = concat(lhs, invert(rhs));
      if (!r.empty()) relators.push_back(std::move(r));
    }
    if (last) break;
    cur.expect(',');
  }
  cur.expect('>');
  cur.skip_ws();
  if (!cur.at_end()) cur.fail("trailing characters after '>'");
  return FinitePresentation(std::move(gens), std::move(relators));
}

std::string FinitePresentation::to_string() const {
  std::string out = "< ";
  for (std::size_t g = 0; g < generators_->size(); ++g) {
    if (g) out += ", ";
    out += generators_->name(g);
  }
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i ? ", " : " ";
    out += relators_[i].to_string();
  }
  out += " >";
  return out;
}

std::string FinitePresentation::canonical_string() const {
  std::vector<Word> sorted = relators_;
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  std::string out;
  for (const auto& n : generators_->names()) out += n + ',';
  out += '|';
  for (const Word& r : sorted) out += r.to_string() + ',';
  return out;
}

bool operator==(const FinitePresentation& a, const FinitePresentation& b) {
  return same_alphabet(a.generators_, b.generators_) && a.relators_ == b.relators_;
}

RecursivePresentation::RecursivePresentation(AlphabetPtr generators, Opener opener)
    : generators_(std::move(generators)), opener_(std::move(opener)) {
  if (!generators_) throw Error(ErrorCode::EmptyAlphabet, "presentation needs generators");
}

namespace {

class ListSource : public RelatorSource {
 public:
  explicit ListSource(std::vector<Word> words) : words_(std::move(words)) {}
  Pull<Word> pull() override {
    if (next_ >= words_.size()) return Pull<Word>::exhausted();
    return Pull<Word>::item(words_[next_++]);
  }

 private:
  std::vector<Word> words_;
  std::size_t next_ = 0;
};

}  // namespace

RecursivePresentation RecursivePresentation::from_finite(const FinitePresentation& p) {
  auto relators = p.relators();
  return RecursivePresentation(p.generators(), [relators] {
    return std::make_unique<ListSource>(relators);
  });
}

std::vector<Word> RecursivePresentation::prefix(std::size_t count, std::size_t max_pending) const {
  std::vector<Word> out;
  auto src = open();
  std::size_t stalls = 0;
  while (out.size() < count && stalls < max_pending) {
    auto p = src->pull();
    if (p.state == PullState::Exhausted) break;
    if (p.state == PullState::Pending) {
      ++stalls;
      continue;
    }
    stalls = 0;
    out.push_back(std::move(*p.value));
  }
  return out;
}

Word certificate_word(const AlphabetPtr& generators, std::span<const Word> relators,
                      const TrivialityCertificate& cert) {
  std::vector<Letter> raw;
  for (const CertificateFactor& f : cert.factors) {
    if (f.sign != 1 && f.sign != -1)
      throw Error(ErrorCode::InvalidArgument, "certificate sign must be +1 or -1");
    if (!same_alphabet(f.conjugator.alphabet(), generators))
      throw Error(ErrorCode::AlphabetMismatch, "conjugator is not over the presentation's generators");
    if (f.relator == CertificateFactor::kEmptyRelator) continue;
    if (f.relator < 0 || static_cast<std::size_t>(f.relator) >= relators.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "certificate relator index " + std::to_string(f.relator) + " out of range");
    const Word& r = relators[static_cast<std::size_t>(f.relator)];
    auto c = f.conjugator.letters();
    raw.insert(raw.end(), c.begin(), c.end());
    if (f.sign > 0) {
      raw.insert(raw.end(), r.letters().begin(), r.letters().end());
    } else {
      for (auto it = r.letters().rbegin(); it != r.letters().rend(); ++it) raw.push_back(it->inverse());
    }
    for (auto it = c.rbegin(); it != c.rend(); ++it) raw.push_back(it->inverse());
  }
  return Word(generators, raw);
}

Word certificate_word(const FinitePresentation& p, const TrivialityCertificate& cert) {
  return certificate_word(p.generators(), p.relators(), cert);
}

}  // namespace fpw
