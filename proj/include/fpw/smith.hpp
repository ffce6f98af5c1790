// Integer matrices, Smith normal form, and abelianization of finite
// presentations.

#ifndef FPW_SMITH_HPP
#define FPW_SMITH_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpw/presentation.hpp"

namespace fpw {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// D = U * A * V with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row i, column j: exponent sum of generator j in relator i.
IntMatrix exponent_matrix(const FinitePresentation& p);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, in divisibility order

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization_invariants(const FinitePresentation& p);

/// The abelianization is trivial. Decidable for finite presentations.
bool is_perfect(const FinitePresentation& p);

}  // namespace fpw

#endif  // FPW_SMITH_HPP
