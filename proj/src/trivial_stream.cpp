#include "fpw/trivial_stream.hpp"

#include <algorithm>

namespace fpw {

TrivialWordStream::TrivialWordStream(const FinitePresentation& p)
    : TrivialWordStream(RecursivePresentation::from_finite(p)) {}

TrivialWordStream::TrivialWordStream(const RecursivePresentation& p)
    : generators_(p.generators()), source_(p.open()) {}

TrivialWord TrivialWordStream::next() {
  ++emitted_;
  if (emitted_ == 1) return {Word(generators_), {}};
  if (positioned_ && next_from(kCount)) return build();
  ++stage_;
  begin_stage();
  positioned_ = first_from(kCount);
  if (positioned_) return build();
  return {Word(generators_), {}};
}

void TrivialWordStream::begin_stage() {
  if (source_done_ || relators_.size() >= stage_) return;
  auto pulled = source_->pull();
  switch (pulled.state) {
    case PullState::Item:
      if (!same_alphabet(pulled.value->alphabet(), generators_))
        throw Error(ErrorCode::AlphabetMismatch, "relator source produced a word over another alphabet");
      relators_.push_back(std::move(*pulled.value));
      costs_.push_back(stage_ - 1);
      break;
    case PullState::Pending:
      break;
    case PullState::Exhausted:
      source_done_ = true;
      break;
  }
}

bool TrivialWordStream::first_from(int level) {
  if (!set_first(level)) return false;
  for (;;) {
    if (level == kLevels - 1 || first_from(level + 1)) return true;
    if (!step(level)) return false;
  }
}

bool TrivialWordStream::next_from(int level) {
  if (level < kLevels - 1 && next_from(level + 1)) return true;
  while (step(level)) {
    if (level == kLevels - 1 || first_from(level + 1)) return true;
  }
  return false;
}

bool TrivialWordStream::relators_valid() const {
  std::uint64_t m = 0;
  for (auto r : rels_) m = std::max(m, costs_[r]);
  return m == max_cost_;
}

bool TrivialWordStream::set_first(int level) {
  switch (level) {
    case kCount:
      count_ = 1;
      return stage_ >= 1;
    case kMaxCost:
      max_cost_ = 0;
      return true;
    case kRelators: {
      usable_ = static_cast<std::size_t>(
          std::upper_bound(costs_.begin(), costs_.end(), max_cost_) - costs_.begin());
      if (usable_ == 0 || costs_[usable_ - 1] != max_cost_) return false;
      rels_.assign(count_, 0);
      return relators_valid() || step(kRelators);
    }
    case kLengths:
      lengths_.assign(count_, 0);
      lengths_.back() = stage_ - count_ - max_cost_;
      return true;
    case kConjugators:
      conj_.resize(count_);
      for (std::size_t i = 0; i < count_; ++i) conj_[i] = detail::first_reduced_codes(lengths_[i]);
      return true;
    case kSigns:
      signs_.assign(count_, 1);
      return true;
  }
  return false;
}

bool TrivialWordStream::step(int level) {
  switch (level) {
    case kCount:
      return ++count_ <= stage_;
    case kMaxCost:
      return ++max_cost_ <= stage_ - count_;
    case kRelators:
      for (;;) {
        std::size_t i = count_;
        while (i > 0 && rels_[i - 1] + 1 == usable_) rels_[--i] = 0;
        if (i == 0) return false;
        ++rels_[i - 1];
        if (relators_valid()) return true;
      }
    case kLengths: {
      // next composition of the same total in lexicographic order
      if (count_ < 2) return false;
      std::size_t i = count_ - 1;
      std::size_t rest = 0;
      while (i > 0) {
        --i;
        rest += lengths_[i + 1];
        if (rest > 0) {
          ++lengths_[i];
          for (std::size_t j = i + 1; j < count_; ++j) lengths_[j] = 0;
          lengths_.back() = rest - 1;
          return true;
        }
      }
      return false;
    }
    case kConjugators: {
      auto letters = static_cast<std::uint32_t>(2 * generators_->size());
      for (std::size_t i = count_; i-- > 0;) {
        if (detail::next_reduced_codes(conj_[i], letters)) {
          for (std::size_t j = i + 1; j < count_; ++j) conj_[j] = detail::first_reduced_codes(lengths_[j]);
          return true;
        }
      }
      return false;
    }
    case kSigns:
      for (std::size_t i = count_; i-- > 0;) {
        if (signs_[i] > 0) {
          signs_[i] = -1;
          for (std::size_t j = i + 1; j < count_; ++j) signs_[j] = 1;
          return true;
        }
      }
      return false;
  }
  return false;
}

TrivialWord TrivialWordStream::build() const {
  TrivialityCertificate cert;
  cert.factors.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    std::vector<Letter> letters;
    letters.reserve(conj_[i].size());
    for (auto c : conj_[i]) letters.push_back(Letter::from_code(c));
    cert.factors.push_back(
        {Word(generators_, letters), static_cast<std::int64_t>(rels_[i]), signs_[i]});
  }
  Word w = certificate_word(generators_, relators_, cert);
  return {std::move(w), std::move(cert)};
}

TrivialWord DistinctTrivialWordStream::next() {
  for (;;) {
    TrivialWord tw = stream_.next();
    if (seen_.insert(tw.word).second) return tw;
  }
}

namespace {

template <class P>
TrivialVerdict semidecide(const P& p, const Word& w, std::uint64_t budget) {
  if (!same_alphabet(w.alphabet(), p.generators()))
    throw Error(ErrorCode::AlphabetMismatch, "word is not over the presentation's generators");
  TrivialWordStream stream(p);
  for (std::uint64_t step = 1; step <= budget; ++step) {
    TrivialWord tw = stream.next();
    if (tw.word == w) return ProvedTrivial{std::move(tw.certificate), step};
  }
  return Exhausted{budget};
}

}  // namespace

TrivialVerdict semidecide_trivial(const FinitePresentation& p, const Word& w, std::uint64_t budget) {
  return semidecide(p, w, budget);
}

TrivialVerdict semidecide_trivial(const RecursivePresentation& p, const Word& w,
                                  std::uint64_t budget) {
  return semidecide(p, w, budget);
}

const TrivialWord& TrivialWordCache::at(std::size_t index) {
  while (cache_.size() <= index) cache_.push_back(stream_.next());
  return cache_[index];
}

}  // namespace fpw
