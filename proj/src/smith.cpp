#include "fpw/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace fpw {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).str();
    }
    out += ']';
  }
  return out + ']';
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not multiply");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    std::size_t n = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_block(t)) break;
    }
    return {std::move(u_), std::move(d_), std::move(v_)};
  }

 private:
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) += k * d_(j, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) += k * u_(j, c);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, i) += k * d_(r, j);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, i) += k * v_(r, j);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(i, c), d_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, i), d_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) = -d_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
  }

  // Move the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < d_.rows(); ++r)
      for (std::size_t c = t; c < d_.cols(); ++c) {
        if (d_(r, c) == 0) continue;
        if (!best || abs(d_(r, c)) < abs(d_(best->first, best->second))) best = {r, c};
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  bool reduce_block(std::size_t t) {
    if (!place_pivot(t)) return false;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < d_.rows(); ++r) {
        if (d_(r, t) == 0) continue;
        BigInt q = d_(r, t) / d_(t, t);
        if (q != 0) add_row(r, t, -q);
        if (d_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d_.cols(); ++c) {
        if (d_(t, c) == 0) continue;
        BigInt q = d_(t, c) / d_(t, t);
        if (q != 0) add_col(c, t, -q);
        if (d_(t, c) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(t);
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < d_.rows() && !bad_row; ++r)
        for (std::size_t c = t + 1; c < d_.cols(); ++c)
          if (d_(r, c) % d_(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      add_row(t, *bad_row, 1);
    }
    if (d_(t, t) < 0) negate_row(t);
    return true;
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

IntMatrix exponent_matrix(const FinitePresentation& p) {
  IntMatrix m(p.relators().size(), p.generators()->size());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Letter& l : p.relators()[i].letters()) m(i, l.gen) += l.sign;
  return m;
}

AbelianInvariants abelianization_invariants(const FinitePresentation& p) {
  SmithForm snf = smith_normal_form(exponent_matrix(p));
  AbelianInvariants out;
  std::size_t rank = 0;
  std::size_t n = std::min(snf.D.rows(), snf.D.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& d = snf.D(i, i);
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = p.generators()->size() - rank;
  return out;
}

bool is_perfect(const FinitePresentation& p) {
  AbelianInvariants inv = abelianization_invariants(p);
  return inv.free_rank == 0 && inv.torsion.empty();
}

}  // namespace fpw
