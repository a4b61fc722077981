#pragma once

#include <Eigen/Dense>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace torelli {

using Int = long long;
template <typename Scalar> using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar> using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using IntMat = MatX<Int>;
using IntVec = VecX<Int>;

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
template <typename Scalar> Scalar checked_mul(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in lattice reduction");
  return r;
}
template <typename Scalar> Scalar checked_sub(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in lattice reduction");
  return r;
}
template <typename Scalar> Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}
} // namespace detail

// Diagonalize in place by unimodular row/column operations; returns the
// nonzero diagonal, not yet normalized into a divisibility chain.
template <typename Scalar> std::vector<Scalar> diagonalize(MatX<Scalar> &A) {
  using detail::checked_mul;
  using detail::checked_sub;
  const Eigen::Index m = A.rows(), n = A.cols();
  std::vector<Scalar> diag;
  Eigen::Index t = 0;
  while (t < m && t < n) {
    // smallest nonzero in the remaining block
    Eigen::Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Eigen::Index j = t; j < n; ++j)
      for (Eigen::Index i = t; i < m; ++i) {
        Scalar v = A(i, j) < 0 ? -A(i, j) : A(i, j);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
          if (best == 1)
            break;
        }
      }
    if (pr < 0)
      break;
    A.row(t).swap(A.row(pr));
    A.col(t).swap(A.col(pc));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0)
          continue;
        Scalar q = detail::floor_div(A(i, t), A(t, t));
        for (Eigen::Index j = t; j < n; ++j)
          if (A(t, j) != 0)
            A(i, j) = checked_sub(A(i, j), checked_mul(q, A(t, j)));
        if (A(i, t) != 0) {
          A.row(t).swap(A.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0)
          continue;
        Scalar q = detail::floor_div(A(t, j), A(t, t));
        for (Eigen::Index i = t; i < m; ++i)
          if (A(i, t) != 0)
            A(i, j) = checked_sub(A(i, j), checked_mul(q, A(i, t)));
        if (A(t, j) != 0) {
          A.col(t).swap(A.col(j));
          clean = false;
        }
      }
    }
    diag.push_back(A(t, t) < 0 ? -A(t, t) : A(t, t));
    ++t;
  }
  return diag;
}

// Invariant factors d1 | d2 | ... of the nonzero part.
template <typename Derived>
std::vector<typename Derived::Scalar> invariant_factors(const Eigen::MatrixBase<Derived> &M) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> A = M;
  std::vector<Scalar> d = diagonalize<Scalar>(A);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Scalar g = std::gcd(d[i], d[j]);
      Scalar l = detail::checked_mul(d[i] / g, d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

template <typename Derived> Eigen::Index integer_rank(const Eigen::MatrixBase<Derived> &M) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> A = M;
  return static_cast<Eigen::Index>(diagonalize<Scalar>(A).size());
}

// Rows span a rank-(rows) direct summand of Z^cols.
template <typename Derived> bool rows_span_summand(const Eigen::MatrixBase<Derived> &M) {
  auto d = invariant_factors(M);
  if (static_cast<Eigen::Index>(d.size()) != M.rows())
    return false;
  for (auto x : d)
    if (x != 1)
      return false;
  return true;
}

// Row-echelon basis of the lattice spanned by the rows.
template <typename Derived>
MatX<typename Derived::Scalar> lattice_basis(const Eigen::MatrixBase<Derived> &M) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> A = M;
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (A(i, c) != 0 && (piv < 0 || std::abs(A(i, c)) < std::abs(A(piv, c))))
          piv = i;
      if (piv < 0)
        break;
      A.row(r).swap(A.row(piv));
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (A(i, c) == 0)
          continue;
        Scalar q = detail::floor_div(A(i, c), A(r, c));
        for (Eigen::Index j = c; j < n; ++j)
          A(i, j) = detail::checked_sub(A(i, j), detail::checked_mul(q, A(r, j)));
        if (A(i, c) != 0)
          done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  return A.topRows(r);
}

// Coefficients c with sum c_i v_i = gcd(v); returns the gcd (nonnegative).
template <typename Scalar> Scalar extended_gcd(const std::vector<Scalar> &v, std::vector<Scalar> &coef) {
  coef.assign(v.size(), 0);
  Scalar g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    // g = s*g + t*v[i]
    Scalar a = g, b = v[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      Scalar q = detail::floor_div(a, b);
      Scalar tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (a < 0) {
      a = -a;
      s0 = -s0;
      t0 = -t0;
    }
    for (std::size_t k = 0; k < i; ++k)
      coef[k] = detail::checked_mul(coef[k], s0);
    coef[i] = t0;
    g = a;
  }
  return g;
}

} // namespace torelli
