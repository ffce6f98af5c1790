#include "fpw/oracle.hpp"

namespace fpw {

WordOracle bs_oracle(const BSParams& p) {
  return [p](const Word& w) { return bs_is_trivial(p, w); };
}

WordOracle cyclic_oracle(unsigned long long order) {
  return [order](const Word& w) {
    if (w.alphabet()->size() != 1)
      throw Error(ErrorCode::AlphabetMismatch, "cyclic oracle needs a one-generator alphabet");
    long long sum = exponent_sum(w, 0);
    if (order == 0) return sum == 0;
    return sum % static_cast<long long>(order) == 0;
  };
}

}  // namespace fpw
