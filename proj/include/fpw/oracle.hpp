#ifndef FPW_ORACLE_HPP
#define FPW_ORACLE_HPP

#include <functional>

#include "fpw/bs.hpp"
#include "fpw/word.hpp"

namespace fpw {

/// A total decision procedure for the word problem of some presented group:
/// true iff the word is trivial there.
using WordOracle = std::function<bool(const Word&)>;

/// Britton reduction in BS(m, n).
WordOracle bs_oracle(const BSParams& p);

/// <x | x^order> on a one-letter alphabet: trivial iff the exponent sum is
/// divisible by `order` (order 0 is the free cyclic group).
WordOracle cyclic_oracle(unsigned long long order);

}  // namespace fpw

#endif  // FPW_ORACLE_HPP
