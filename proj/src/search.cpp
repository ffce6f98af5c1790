#include "fpw/search.hpp"

#include <algorithm>

#include "fpw/harness.hpp"

namespace fpw {

namespace {

void require_map(const GeneratorMap& phi, const FinitePresentation& p, const FinitePresentation& q) {
  if (!same_alphabet(phi.domain(), p.generators()) || !same_alphabet(phi.codomain(), q.generators()))
    throw Error(ErrorCode::AlphabetMismatch, "map does not go from P's generators to words over Q's");
}

// Targets that still need a triviality proof; the identity needs none.
void add_target(std::vector<Word>& targets, Word w) {
  if (w.empty()) return;
  if (std::find(targets.begin(), targets.end(), w) == targets.end()) targets.push_back(std::move(w));
}

// Words over P's generators that must be trivial in P for (forward,
// backward) to be mutually inverse homomorphisms, and likewise for Q.
struct IsoTargets {
  std::vector<Word> in_p;
  std::vector<Word> in_q;
};

IsoTargets iso_targets(const FinitePresentation& p, const FinitePresentation& q,
                       const GeneratorMap& forward, const GeneratorMap& backward) {
  IsoTargets t;
  for (const Word& r : p.relators()) add_target(t.in_q, substitute(r, forward));
  for (const Word& r : q.relators()) add_target(t.in_p, substitute(r, backward));
  for (std::size_t x = 0; x < p.generators()->size(); ++x) {
    Word gen = Word::generator(p.generators(), x);
    add_target(t.in_p, concat(substitute(substitute(gen, forward), backward), invert(gen)));
  }
  for (std::size_t y = 0; y < q.generators()->size(); ++y) {
    Word gen = Word::generator(q.generators(), y);
    add_target(t.in_q, concat(substitute(substitute(gen, backward), forward), invert(gen)));
  }
  return t;
}

bool clear_all(const FinitePresentation& p, std::vector<Word> targets, std::uint64_t budget) {
  TrivialWordStream stream(p);
  for (std::uint64_t i = 0; i < budget && !targets.empty(); ++i) {
    Word w = stream.next().word;
    std::erase(targets, w);
  }
  return targets.empty();
}

}  // namespace

HomVerdict semidecide_homomorphism(const GeneratorMap& phi, const FinitePresentation& p,
                                   const FinitePresentation& q, std::uint64_t budget) {
  require_map(phi, p, q);
  std::vector<Word> images;
  std::vector<std::optional<TrivialityCertificate>> certs(p.relators().size());
  std::size_t open = 0;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    images.push_back(substitute(p.relators()[i], phi));
    if (images.back().empty())
      certs[i] = TrivialityCertificate{};
    else
      ++open;
  }
  TrivialWordStream stream(q);
  std::uint64_t steps = 0;
  while (open > 0 && steps < budget) {
    TrivialWord tw = stream.next();
    ++steps;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!certs[i] && images[i] == tw.word) {
        certs[i] = tw.certificate;
        --open;
      }
    }
  }
  if (open > 0) return Exhausted{steps};
  HomProved out;
  out.steps = steps;
  for (auto& c : certs) out.certificates.push_back(std::move(*c));
  return out;
}

bool decide_homomorphism(const GeneratorMap& phi, const FinitePresentation& p,
                         const WordOracle& oracle_q) {
  if (!same_alphabet(phi.domain(), p.generators()))
    throw Error(ErrorCode::AlphabetMismatch, "map domain is not P's generators");
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return oracle_q(substitute(r, phi)); });
}

namespace {

struct Candidate {
  GeneratorMap forward;
  GeneratorMap backward;
  std::uint64_t index;
  std::vector<Word> pending_p;
  std::vector<Word> pending_q;
  std::size_t cursor_p = 0;
  std::size_t cursor_q = 0;
  bool q_turn = false;
};

}  // namespace

struct IsoSearch::State {
  State(FinitePresentation p_, FinitePresentation q_, std::uint64_t max)
      : p(std::move(p_)), q(std::move(q_)), max_candidates(max), p_cache(p), q_cache(q),
        p_words(p.generators()), q_words(q.generators()) {}

  GeneratorMap map_at(std::uint64_t i, const AlphabetPtr& from, ShortlexIndex& to) {
    std::vector<Word> images;
    for (auto idx : cantor_unpair_n(i, from->size())) images.push_back(to.at(idx));
    return GeneratorMap(from, to.alphabet(), std::move(images));
  }

  void admit() {
    auto [i, j] = cantor_unpair(admitted);
    GeneratorMap forward = map_at(i, p.generators(), q_words);
    GeneratorMap backward = map_at(j, q.generators(), p_words);
    IsoTargets t = iso_targets(p, q, forward, backward);
    live.push_back({std::move(forward), std::move(backward), admitted, std::move(t.in_p),
                    std::move(t.in_q)});
    ++admitted;
  }

  FinitePresentation p;
  FinitePresentation q;
  std::uint64_t max_candidates;
  TrivialWordCache p_cache;
  TrivialWordCache q_cache;
  ShortlexIndex p_words;
  ShortlexIndex q_words;
  std::vector<Candidate> live;
  std::size_t turn = 0;
  std::uint64_t admitted = 0;
};

IsoSearch::IsoSearch(FinitePresentation p, FinitePresentation q, std::uint64_t max_candidates)
    : state_(std::make_unique<State>(std::move(p), std::move(q), max_candidates)) {}

IsoSearch::~IsoSearch() = default;
IsoSearch::IsoSearch(IsoSearch&&) noexcept = default;
IsoSearch& IsoSearch::operator=(IsoSearch&&) noexcept = default;

const FinitePresentation& IsoSearch::domain() const { return state_->p; }
const FinitePresentation& IsoSearch::codomain() const { return state_->q; }

IsoSearch::Status IsoSearch::step() {
  if (found_) return Status::Found;
  State& s = *state_;
  if (s.turn == s.live.size()) {
    s.turn = 0;
    if (s.admitted < s.max_candidates) s.admit();
    if (s.live.empty()) return Status::Idle;
  }
  Candidate& c = s.live[s.turn++];
  ++steps_;
  if (!c.pending_p.empty() && (c.pending_q.empty() || !c.q_turn)) {
    std::erase(c.pending_p, s.p_cache.at(c.cursor_p++).word);
  } else if (!c.pending_q.empty()) {
    std::erase(c.pending_q, s.q_cache.at(c.cursor_q++).word);
  }
  c.q_turn = !c.q_turn;
  if (c.pending_p.empty() && c.pending_q.empty()) {
    found_ = IsoFound{IsoWitness{c.forward, c.backward}, steps_, c.index};
    return Status::Found;
  }
  return Status::Progress;
}

IsoVerdict iso_search(const FinitePresentation& p, const FinitePresentation& q,
                      const SearchBudget& budget) {
  IsoSearch search(p, q, budget.max_candidates);
  while (search.steps() < budget.max_stream_steps) {
    auto status = search.step();
    if (status == IsoSearch::Status::Found) return *search.found();
    if (status == IsoSearch::Status::Idle) break;
  }
  return Exhausted{search.steps()};
}

bool verify_iso_witness(const FinitePresentation& p, const FinitePresentation& q,
                        const IsoWitness& witness, std::uint64_t budget) {
  require_map(witness.forward, p, q);
  require_map(witness.backward, q, p);
  IsoTargets t = iso_targets(p, q, witness.forward, witness.backward);
  return clear_all(p, std::move(t.in_p), budget) && clear_all(q, std::move(t.in_q), budget);
}

AlphabetPtr subgroup_alphabet(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("W" + std::to_string(i));
  return make_alphabet(std::move(names));
}

SubgroupVerdict subgroup_presentation_search(const FinitePresentation& p, const WordOracle& oracle_p,
                                             const std::vector<Word>& gens,
                                             const FinitePresentation& q, const SearchBudget& budget) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one subgroup generator");
  for (const Word& g : gens)
    if (!same_alphabet(g.alphabet(), p.generators()))
      throw Error(ErrorCode::AlphabetMismatch, "subgroup generator is not over P's generators");

  AlphabetPtr fresh = subgroup_alphabet(gens.size());
  GeneratorMap lift(fresh, p.generators(), gens);
  ShortlexStream words(fresh);
  words.next();  // the identity is never a relator

  std::vector<Word> relators;
  std::vector<IsoSearch> searches;
  searches.emplace_back(q, FinitePresentation(fresh, {}), budget.max_candidates);

  std::uint64_t steps = 0;
  while (steps < budget.max_stream_steps) {
    Word c = words.next();
    ++steps;
    if (oracle_p(substitute(c, lift))) {
      relators.push_back(c);
      searches.emplace_back(q, FinitePresentation(fresh, relators), budget.max_candidates);
    }
    for (std::size_t k = 0; k < searches.size() && steps < budget.max_stream_steps; ++k) {
      auto status = searches[k].step();
      if (status == IsoSearch::Status::Idle) continue;
      ++steps;
      if (status == IsoSearch::Status::Found) {
        return SubgroupFound{k, searches[k].codomain(), searches[k].found()->witness, steps};
      }
    }
  }
  return Exhausted{steps};
}

HopfianLift hopfian_lift(const std::vector<Word>& gens, const FinitePresentation& p_k,
                         const WordOracle& oracle_p) {
  if (gens.size() != p_k.generators()->size())
    throw Error(ErrorCode::ArityMismatch, "need one subgroup generator per generator of P_k");
  if (gens.empty()) throw Error(ErrorCode::ArityMismatch, "no subgroup generators");
  for (const Word& g : gens)
    if (!same_alphabet(g.alphabet(), gens.front().alphabet()))
      throw Error(ErrorCode::AlphabetMismatch, "subgroup generators use different alphabets");
  GeneratorMap map(p_k.generators(), gens.front().alphabet(), gens);
  HopfianLift out{map, decide_homomorphism(map, p_k, oracle_p), false};
  return out;
}

}  // namespace fpw
