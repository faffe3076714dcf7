#pragma once

#include <Eigen/SparseCore>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "uqcentral/scalars.hpp"

namespace uqc {

using Index = Eigen::Index;

template <typename Scalar>
using SparseMat = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

using QMatrix = SparseMat<QScalar>;

template <typename Scalar>
bool isZeroScalar(const Scalar& x) {
  if constexpr (requires { x.isZero(); }) {
    return x.isZero();
  } else {
    return x == Scalar(0);
  }
}

// Removes stored entries that are exactly zero (Eigen keeps cancellations).
template <typename Scalar>
SparseMat<Scalar>& prune(SparseMat<Scalar>& m) {
  m.prune([](const Index&, const Index&, const Scalar& v) { return !isZeroScalar(v); });
  m.makeCompressed();
  return m;
}

template <typename Scalar, typename Expr>
SparseMat<Scalar> pruned(const Expr& e) {
  SparseMat<Scalar> m = e;
  return prune(m);
}

template <typename Scalar>
SparseMat<Scalar> identity(Index n) {
  SparseMat<Scalar> m(n, n);
  m.setIdentity();
  return m;
}

template <typename Scalar>
SparseMat<Scalar> matrixUnit(Index n, Index row, Index col) {
  SparseMat<Scalar> m(n, n);
  m.insert(row, col) = Scalar(1);
  m.makeCompressed();
  return m;
}

template <typename Scalar>
SparseMat<Scalar> diagonal(const std::vector<Scalar>& d) {
  const Index n = static_cast<Index>(d.size());
  std::vector<Eigen::Triplet<Scalar>> t;
  t.reserve(d.size());
  for (Index k = 0; k < n; ++k)
    if (!isZeroScalar(d[k])) t.emplace_back(k, k, d[k]);
  SparseMat<Scalar> m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

template <typename Scalar>
SparseMat<Scalar> scaled(SparseMat<Scalar> m, const Scalar& c) {
  if (isZeroScalar(c)) return SparseMat<Scalar>(m.rows(), m.cols());
  for (Index i = 0; i < m.outerSize(); ++i)
    for (typename SparseMat<Scalar>::InnerIterator it(m, i); it; ++it) it.valueRef() = it.value() * c;
  return prune(m);
}

template <typename Scalar>
SparseMat<Scalar> kron(const SparseMat<Scalar>& a, const SparseMat<Scalar>& b) {
  std::vector<Eigen::Triplet<Scalar>> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index i = 0; i < a.outerSize(); ++i)
    for (typename SparseMat<Scalar>::InnerIterator ia(a, i); ia; ++ia)
      for (Index k = 0; k < b.outerSize(); ++k)
        for (typename SparseMat<Scalar>::InnerIterator ib(b, k); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SparseMat<Scalar> m(a.rows() * b.rows(), a.cols() * b.cols());
  m.setFromTriplets(t.begin(), t.end());
  return prune(m);
}

template <typename Scalar>
SparseMat<Scalar> kron(const std::vector<SparseMat<Scalar>>& factors) {
  SparseMat<Scalar> r = identity<Scalar>(1);
  for (const auto& f : factors) r = kron(r, f);
  return r;
}

template <typename Scalar>
SparseMat<Scalar> product(const SparseMat<Scalar>& a, const SparseMat<Scalar>& b) {
  return pruned<Scalar>(a * b);
}

template <typename Scalar>
SparseMat<Scalar> commutator(const SparseMat<Scalar>& a, const SparseMat<Scalar>& b) {
  return pruned<Scalar>(SparseMat<Scalar>(a * b) - SparseMat<Scalar>(b * a));
}

template <typename Scalar>
SparseMat<Scalar> power(const SparseMat<Scalar>& a, int n) {
  SparseMat<Scalar> r = identity<Scalar>(a.rows());
  for (int k = 0; k < n; ++k) r = product(r, a);
  return r;
}

template <typename Scalar>
struct Entry {
  Index row;
  Index col;
  Scalar value;
};

// First nonzero entry in row-major order, if any.
template <typename Scalar>
std::optional<Entry<Scalar>> firstNonzero(const SparseMat<Scalar>& m) {
  for (Index i = 0; i < m.outerSize(); ++i)
    for (typename SparseMat<Scalar>::InnerIterator it(m, i); it; ++it)
      if (!isZeroScalar(it.value())) return Entry<Scalar>{it.row(), it.col(), it.value()};
  return std::nullopt;
}

template <typename Scalar>
bool isZeroMatrix(const SparseMat<Scalar>& m) {
  return !firstNonzero(m).has_value();
}

template <typename Scalar>
bool equal(const SparseMat<Scalar>& a, const SparseMat<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return isZeroMatrix<Scalar>(SparseMat<Scalar>(a - b));
}

// The c with m == c * Id, or nullopt (with the offending entry) otherwise.
template <typename Scalar>
struct ScalarMatch {
  std::optional<Scalar> value;
  std::optional<Entry<Scalar>> witness;
};

template <typename Scalar>
ScalarMatch<Scalar> scalarMultipleOfIdentity(const SparseMat<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return {};
  const Scalar c = m.coeff(0, 0);
  for (Index i = 0; i < m.outerSize(); ++i)
    for (typename SparseMat<Scalar>::InnerIterator it(m, i); it; ++it)
      if (it.row() != it.col() && !isZeroScalar(it.value()))
        return {std::nullopt, Entry<Scalar>{it.row(), it.col(), it.value()}};
  for (Index i = 0; i < m.rows(); ++i) {
    Scalar d = m.coeff(i, i);
    if (!(d == c)) return {std::nullopt, Entry<Scalar>{i, i, d}};
  }
  return {c, std::nullopt};
}

// Fraction-free (Bareiss) determinant; exactQuotient is found by lookup on Scalar.
template <typename Scalar>
Scalar determinant(const SparseMat<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar(0)));
  for (Index i = 0; i < m.outerSize(); ++i)
    for (typename SparseMat<Scalar>::InnerIterator it(m, i); it; ++it) a[it.row()][it.col()] = it.value();
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (isZeroScalar(a[k][k])) {
      Index p = k + 1;
      while (p < n && isZeroScalar(a[p][k])) ++p;
      if (p == n) return Scalar(0);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) a[i][j] = exactQuotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Scalar(0);
    }
    prev = a[k][k];
  }
  return negate ? Scalar(0) - a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace uqc
