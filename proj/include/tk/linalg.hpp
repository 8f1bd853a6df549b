// Exact integer linear algebra on dense Eigen matrices: Smith normal form,
// column echelon (Hermite) form, kernels, and sublattices of Z^n.
//
// Everything here is templated on the scalar type, which must model an
// exact Euclidean ring with truncating `/` and `%` (arbitrary-precision
// integers in practice).
#pragma once

#include "tk/errors.hpp"
#include "tk/numeric.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace tk {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using Index = Eigen::Index;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Floor division.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
/// Nearest-integer quotient, so the remainder is at most |b|/2.
template <typename Scalar>
Scalar round_div(const Scalar& a, const Scalar& b) {
  const Scalar q = floor_div(Scalar(2 * a + b), Scalar(2 * b));
  return q;
}

template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Scalar q = a / b;
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar nx = x0 - q * x1;
    Scalar ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) return {Scalar(-a), Scalar(-x0), Scalar(-y0)};
  return {a, x0, y0};
}

}  // namespace detail

/// S = U * A * V with U, V unimodular and S diagonal, d_1 | d_2 | ... >= 0.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> S;
  Matrix<Scalar> V;
  Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

/// A * V = H with V unimodular and H in column echelon form: the first
/// `rank` columns have strictly increasing leading rows with positive
/// leading entries, entries left of each pivot reduced into [0, pivot),
/// and the remaining columns zero.
template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> H;
  Matrix<Scalar> V;
  std::vector<Index> pivot_rows;
  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

template <typename Derived>
EchelonForm<typename Derived::Scalar> column_echelon(const Eigen::MatrixBase<Derived>& a,
                                                     bool with_transform = true) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> f;
  f.H = a;
  const Index m = a.rows();
  const Index n = a.cols();
  if (with_transform) f.V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& H = f.H;
  Index p = 0;
  for (Index r = 0; r < m && p < n; ++r) {
    // Euclid along row r with the smallest entry as pivot and rounded
    // quotients; this keeps multipliers small on sparse inputs.
    bool found = false;
    for (;;) {
      Index best = -1;
      for (Index j = p; j < n; ++j)
        if (H(r, j) != 0 && (best < 0 || detail::abs_value(Scalar(H(r, j))) < detail::abs_value(Scalar(H(r, best)))))
          best = j;
      if (best < 0) break;
      found = true;
      if (best != p) {
        H.col(p).swap(H.col(best));
        if (with_transform) f.V.col(p).swap(f.V.col(best));
      }
      bool clear = true;
      const Scalar a0 = H(r, p);
      for (Index j = p + 1; j < n; ++j) {
        if (H(r, j) == 0) continue;
        const Scalar q = detail::round_div(Scalar(H(r, j)), a0);
        H.col(j) -= q * H.col(p);
        if (with_transform) f.V.col(j) -= q * f.V.col(p);
        if (H(r, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!found) continue;
    if (H(r, p) < 0) {
      H.col(p) = -H.col(p);
      if (with_transform) f.V.col(p) = -f.V.col(p);
    }
    for (Index k = 0; k < p; ++k) {
      const Scalar q = detail::floor_div(Scalar(H(r, k)), Scalar(H(r, p)));
      if (q != 0) {
        H.col(k) -= q * H.col(p);
        if (with_transform) f.V.col(k) -= q * f.V.col(p);
      }
    }
    f.pivot_rows.push_back(r);
    ++p;
  }
  return f;
}

namespace detail {

/// True when every row and every column has at most one nonzero entry.
template <typename Scalar>
bool is_monomial(const Matrix<Scalar>& s) {
  for (Index i = 0; i < s.rows(); ++i) {
    Index count = 0;
    for (Index j = 0; j < s.cols(); ++j) count += s(i, j) != 0;
    if (count > 1) return false;
  }
  for (Index j = 0; j < s.cols(); ++j) {
    Index count = 0;
    for (Index i = 0; i < s.rows(); ++i) count += s(i, j) != 0;
    if (count > 1) return false;
  }
  return true;
}

}  // namespace detail

/// Alternating reduced column and row echelon forms until each row and
/// column has a single nonzero entry, then the 2x2 gcd/lcm step for the
/// divisibility chain. Echelon reduction keeps intermediate entries (and
/// the transforms) from swelling.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index m = a.rows();
  const Index n = a.cols();
  SmithForm<Scalar> f;
  f.S = a;
  f.U = Matrix<Scalar>::Identity(m, m);
  f.V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& S = f.S;

  for (bool columns = true; !detail::is_monomial(S); columns = !columns) {
    if (columns) {
      auto e = column_echelon(S, true);
      S = e.H;
      f.V = (f.V * e.V).eval();
    } else {
      Matrix<Scalar> st = S.transpose();
      auto e = column_echelon(st, true);
      S = e.H.transpose();
      f.U = (e.V.transpose() * f.U).eval();
    }
  }

  // Move the surviving entries onto the diagonal, in column order.
  std::vector<std::pair<Index, Index>> cells;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i)
      if (S(i, j) != 0) cells.emplace_back(i, j);
  {
    Eigen::PermutationMatrix<Eigen::Dynamic> rows(m), cols(n);
    std::vector<bool> row_used(m, false), col_used(n, false);
    std::vector<Index> row_order, col_order;
    for (const auto& [i, j] : cells) {
      row_order.push_back(i);
      col_order.push_back(j);
      row_used[i] = col_used[j] = true;
    }
    for (Index i = 0; i < m; ++i)
      if (!row_used[i]) row_order.push_back(i);
    for (Index j = 0; j < n; ++j)
      if (!col_used[j]) col_order.push_back(j);
    Matrix<Scalar> s2(m, n), u2(m, m), v2(n, n);
    for (Index i = 0; i < m; ++i) {
      s2.row(i) = S.row(row_order[i]);
      u2.row(i) = f.U.row(row_order[i]);
    }
    S = s2;
    f.U = u2;
    for (Index j = 0; j < n; ++j) {
      s2.col(j) = S.col(col_order[j]);
      v2.col(j) = f.V.col(col_order[j]);
    }
    S = s2;
    f.V = v2;
  }
  const Index r = static_cast<Index>(cells.size());
  f.rank = r;

  // diag(a, b) -> diag(gcd, lcm) with U2 = [[s, t], [-b/g, a/g]] and
  // V2 = [[1, -t b/g], [1, s a/g]], both of determinant 1.
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j) {
      const Scalar x = S(i, i), y = S(j, j);
      if (y % x == 0) continue;
      auto [g, s, t] = detail::extended_gcd(x, y);
      const Scalar xg = x / g, yg = y / g;
      Matrix<Scalar> ui = f.U.row(i), uj = f.U.row(j);
      f.U.row(i) = s * ui + t * uj;
      f.U.row(j) = -yg * ui + xg * uj;
      Vector<Scalar> vi = f.V.col(i), vj = f.V.col(j);
      f.V.col(i) = vi + vj;
      f.V.col(j) = -t * yg * vi + s * xg * vj;
      S(i, i) = g;
      S(j, j) = x * yg;
    }
  for (Index i = 0; i < r; ++i)
    if (S(i, i) < 0) {
      S(i, i) = -S(i, i);
      f.U.row(i) = -f.U.row(i);
    }
  return f;
}

/// a * b, skipping zero entries. The matrices met in resolutions are
/// mostly zero, where this beats the dense product by a wide margin.
template <typename Scalar>
Matrix<Scalar> product(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  std::vector<std::vector<Index>> nonzero(static_cast<std::size_t>(a.cols()));
  for (Index k = 0; k < a.cols(); ++k)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, k) != 0) nonzero[static_cast<std::size_t>(k)].push_back(i);
  Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < b.rows(); ++k) {
      if (b(k, j) == 0) continue;
      for (Index i : nonzero[static_cast<std::size_t>(k)]) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// A Z-basis (as columns) of the lattice spanned by the columns of `gens`,
/// in column echelon form.
template <typename Derived>
Matrix<typename Derived::Scalar> lattice_basis(const Eigen::MatrixBase<Derived>& gens) {
  auto f = column_echelon(gens, false);
  return f.H.leftCols(f.rank());
}

/// A Z-basis (as columns, echelon form) of {x : A x = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto f = column_echelon(a, true);
  const Index nullity = a.cols() - f.rank();
  Matrix<Scalar> k = f.V.rightCols(nullity);
  return lattice_basis(k);
}

/// Coordinates y with basis * y = v, for `basis` in column echelon form
/// (as produced by lattice_basis); nullopt when v is not in the lattice.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_in_lattice(const Matrix<Scalar>& basis, Vector<Scalar> v) {
  Vector<Scalar> y = Vector<Scalar>::Zero(basis.cols());
  Index row = 0;
  for (Index k = 0; k < basis.cols(); ++k) {
    while (row < basis.rows() && basis(row, k) == 0) {
      if (v(row) != 0) return std::nullopt;
      ++row;
    }
    if (row == basis.rows()) break;
    if (v(row) % basis(row, k) != 0) return std::nullopt;
    y(k) = v(row) / basis(row, k);
    if (y(k) != 0) v -= y(k) * basis.col(k);
    ++row;
  }
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return std::nullopt;
  return y;
}

/// Solves basis * Y = rhs column by column; throws ConsistencyError when a
/// column lies outside the lattice.
template <typename Scalar>
Matrix<Scalar> solve_in_lattice(const Matrix<Scalar>& basis, const Matrix<Scalar>& rhs) {
  Matrix<Scalar> y(basis.cols(), rhs.cols());
  for (Index j = 0; j < rhs.cols(); ++j) {
    auto c = solve_in_lattice<Scalar>(basis, Vector<Scalar>(rhs.col(j)));
    if (!c) throw ConsistencyError("vector outside lattice");
    y.col(j) = *c;
  }
  return y;
}

/// A Z-basis of {x in Z^n : A x in L}, where L is spanned by the columns
/// of `relations` (same row count as A).
template <typename Scalar>
Matrix<Scalar> preimage_basis(const Matrix<Scalar>& a, const Matrix<Scalar>& relations) {
  if (relations.cols() == 0) return kernel_basis(a);
  Matrix<Scalar> joined(a.rows(), a.cols() + relations.cols());
  joined << a, -relations;
  Matrix<Scalar> k = kernel_basis(joined);
  return lattice_basis(Matrix<Scalar>(k.topRows(a.cols())));
}

/// Inverse of a unimodular matrix: its reduced column echelon form is the
/// identity, so the echelon transform is the inverse. ConsistencyError
/// otherwise.
template <typename Scalar>
Matrix<Scalar> unimodular_inverse(const Matrix<Scalar>& a) {
  auto f = column_echelon(a, true);
  if (a.rows() != a.cols() || f.H != Matrix<Scalar>::Identity(a.rows(), a.cols()))
    throw ConsistencyError("matrix is not unimodular");
  return f.V;
}

/// Bareiss fraction-free determinant.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  if (n != a.cols()) throw Error("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace tk
