// Budgeted semi-decision procedures over finite presentations:
// homomorphism checking, isomorphism search, subgroup presentation search,
// and the Hopfian lift.
//
// All budgets count elementary checks. One unit is one emission of a
// trivial-word stream compared against the pending targets, or one oracle
// call while enumerating subgroup relators. Scheduling never depends on the
// budget, so a search that succeeds under budget B returns the same answer
// under any larger budget.

#ifndef FPW_SEARCH_HPP
#define FPW_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "fpw/oracle.hpp"
#include "fpw/presentation.hpp"
#include "fpw/trivial_stream.hpp"

namespace fpw {

struct SearchBudget {
  std::uint64_t max_candidates = 100000;
  std::uint64_t max_stream_steps = 1000000;
};

struct HomProved {
  /// One certificate per relator of the domain presentation, against the
  /// codomain presentation.
  std::vector<TrivialityCertificate> certificates;
  std::uint64_t steps = 0;
};

using HomVerdict = std::variant<HomProved, Exhausted>;

/// Proves phi(r) = 1 in Q for every relator r of P by scanning one shared
/// trivial-word stream of Q for all images at once.
HomVerdict semidecide_homomorphism(const GeneratorMap& phi, const FinitePresentation& p,
                                   const FinitePresentation& q, std::uint64_t budget);

/// Same question, answered by a decision procedure for Q's word problem.
bool decide_homomorphism(const GeneratorMap& phi, const FinitePresentation& p,
                         const WordOracle& oracle_q);

struct IsoWitness {
  GeneratorMap forward;   // P -> Q
  GeneratorMap backward;  // Q -> P
};

struct IsoFound {
  IsoWitness witness;
  std::uint64_t steps = 0;
  std::uint64_t candidate = 0;  // index of the (forward, backward) pair
};

using IsoVerdict = std::variant<IsoFound, Exhausted>;

/// Steppable isomorphism search. Candidate k is the pair (forward map i,
/// backward map j) with k = <i, j>; map i sends the generators of the domain
/// to the shortlex words whose indices are cantor_unpair_n(i, |X|). Each round
/// admits the next candidate and then gives every live candidate one unit.
class IsoSearch {
 public:
  IsoSearch(FinitePresentation p, FinitePresentation q, std::uint64_t max_candidates);
  ~IsoSearch();
  IsoSearch(IsoSearch&&) noexcept;
  IsoSearch& operator=(IsoSearch&&) noexcept;

  enum class Status { Progress, Found, Idle };

  /// Spend one unit. Idle means there is nothing left to try (no live
  /// candidates and none left to admit); no unit is spent then.
  Status step();

  const std::optional<IsoFound>& found() const { return found_; }
  std::uint64_t steps() const { return steps_; }
  const FinitePresentation& domain() const;
  const FinitePresentation& codomain() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
  std::optional<IsoFound> found_;
  std::uint64_t steps_ = 0;
};

IsoVerdict iso_search(const FinitePresentation& p, const FinitePresentation& q,
                      const SearchBudget& budget);

/// Re-check a witness from scratch: both maps are homomorphisms and both
/// composites fix every generator, each side proved within `budget` units.
bool verify_iso_witness(const FinitePresentation& p, const FinitePresentation& q,
                        const IsoWitness& witness, std::uint64_t budget);

struct SubgroupFound {
  std::size_t k = 0;                 // number of relators c_1..c_k used
  FinitePresentation presentation;   // < W1..Wn | c_1..c_k >
  IsoWitness witness;                // Q -> presentation and back
  std::uint64_t steps = 0;
};

using SubgroupVerdict = std::variant<SubgroupFound, Exhausted>;

/// Fresh generator names W1..Wn for the subgroup presentations.
AlphabetPtr subgroup_alphabet(std::size_t n);

/// Enumerates words c over W1..Wn (shortlex, nonempty) whose image under
/// Wi -> gens[i] the oracle calls trivial, forms P_k = < W | c_1..c_k > as
/// each one appears, and interleaves iso_search(Q, P_k) over all k found so
/// far. Each round spends one unit on the c-enumeration and one on every
/// running isomorphism search.
SubgroupVerdict subgroup_presentation_search(const FinitePresentation& p, const WordOracle& oracle_p,
                                             const std::vector<Word>& gens,
                                             const FinitePresentation& q, const SearchBudget& budget);

struct HopfianLift {
  GeneratorMap map;                   // Wi -> gens[i]
  bool homomorphism_verified = false; // every relator of P_k maps to a trivial word
  /// Never set: injectivity of the lift cannot be certified in general. It
  /// holds when the subgroup is Hopfian.
  bool injectivity_certified = false;
};

HopfianLift hopfian_lift(const std::vector<Word>& gens, const FinitePresentation& p_k,
                         const WordOracle& oracle_p);

}  // namespace fpw

#endif  // FPW_SEARCH_HPP
