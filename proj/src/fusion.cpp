#include "uqcentral/fusion.hpp"

namespace uqc {

namespace {

QMatrix sum(const QMatrix& a, const QMatrix& b) { return pruned<QScalar>(a + b); }

QMatrix quantumLeg(int k, int m, int N, int row, int col) {
  std::vector<QMatrix> f;
  for (int v = 1; v <= m; ++v)
    f.push_back(v == k ? matrixUnit<QScalar>(N + 1, row, col) : identity<QScalar>(N + 1));
  return kron(f);
}

}  // namespace

std::vector<int> qTraceWeights(const RepSpace& quantum) {
  std::vector<int> w;
  for (const auto& label : quantum.labels) {
    if (quantum.kind == RepSpace::Kind::SymmetricPower) {
      w.push_back(rhoPairing(label, quantum.N));
    } else {
      int e = 0;
      for (int j : label) e += 2 * j - quantum.N;
      w.push_back(e);
    }
  }
  return w;
}

QMatrix rLeg(const Representation& W, int k, int m, bool transposed) {
  const int N = W.N;
  if (k < 1 || k > m) throw std::out_of_range("rLeg: slot outside 1..m");
  Evaluator ev(W);
  Index qd = 1;
  for (int v = 0; v < m; ++v) qd *= N + 1;
  QMatrix acc(W.dim() * qd, W.dim() * qd);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= i; ++j) {
      const QMatrix& e = transposed ? ev.rootVector(j, i, RootVariant::Hatted) : ev.rootVector(i, j, RootVariant::Hatted);
      const QMatrix leg = transposed ? quantumLeg(k, m, N, i, j) : quantumLeg(k, m, N, j, i);
      acc = sum(acc, kron(e, leg));
    }
  return acc;
}

BipartiteOperator rMatrix(const Representation& W, bool transposed) {
  return {W.space, tensorSpace(W.N, 1), rLeg(W, 1, 1, transposed)};
}

BipartiteOperator fusedRFull(const Representation& W, int m, bool transposed) {
  if (m < 1) throw std::invalid_argument("fusedR: m must be >= 1");
  QMatrix acc = rLeg(W, transposed ? 1 : m, m, transposed);
  for (int s = 2; s <= m; ++s) acc = product(acc, rLeg(W, transposed ? s : m + 1 - s, m, transposed));
  return {W.space, tensorSpace(W.N, m), acc};
}

BipartiteOperator fusedR(const Representation& W, int m, bool transposed) {
  const BipartiteOperator full = fusedRFull(W, m, transposed);
  const SymBasis b = symBasis(m, W.N);
  return {W.space, symmetricSpace(W.N, m), restrictToSym(full.matrix, b, W.dim())};
}

BipartiteOperator factoredFusedR(const Representation& W, int m) {
  const int N = W.N;
  Evaluator ev(W);
  Index qd = 1;
  for (int v = 0; v < m; ++v) qd *= N + 1;
  QMatrix acc(W.dim() * qd, W.dim() * qd);
  const auto idx = enumerateW(m, N);
  for (const auto& i : idx)
    for (const auto& j : idx) {
      const AlgebraExpr e = tildeE(i, j, Sign::Plus);
      if (e.isZero()) continue;
      acc = sum(acc, kron(ev(e), coreOperator(j, i, N)));
    }
  return {W.space, symmetricSpace(N, m), restrictToSym(acc, symBasis(m, N), W.dim())};
}

BipartiteOperator gamma(const Representation& W, int m) {
  const BipartiteOperator r = fusedR(W, m, false), rt = fusedR(W, m, true);
  return {r.aux, r.quantum, product(rt.matrix, r.matrix)};
}

QMatrix qTracePartial(const BipartiteOperator& A) {
  const Index a = A.auxDim(), d = A.quantumDim();
  if (A.matrix.rows() != a * d || A.matrix.cols() != a * d)
    throw std::invalid_argument("qTracePartial: dimension mismatch");
  const std::vector<int> w = qTraceWeights(A.quantum);
  std::vector<Eigen::Triplet<QScalar>> t;
  for (Index r = 0; r < A.matrix.outerSize(); ++r)
    for (QMatrix::InnerIterator it(A.matrix, r); it; ++it) {
      const Index c = r % d;
      if (it.col() % d != c) continue;
      t.emplace_back(r / d, it.col() / d, it.value() * QScalar::qPower(w[c]));
    }
  QMatrix out(a, a);
  out.setFromTriplets(t.begin(), t.end());
  return prune(out);
}

QMatrix drinfeldCentral(const Representation& W, int m) { return qTracePartial(gamma(W, m)); }

QMatrix symProjection(const SymBasis& basis) {
  const Index n = basis.vectors.rows();
  std::vector<Eigen::Triplet<QScalar>> t;
  const QMatrix cols = QMatrix(basis.vectors.transpose());
  for (Index c = 0; c < basis.dim(); ++c)
    for (QMatrix::InnerIterator it(cols, c); it; ++it) t.emplace_back(it.col(), basis.leadRows[c], it.value());
  QMatrix p(n, n);
  p.setFromTriplets(t.begin(), t.end());
  return prune(p);
}

QMatrix drinfeldCentralTensorBasis(const Representation& W, int m) {
  const QMatrix r = fusedRFull(W, m, false).matrix, rt = fusedRFull(W, m, true).matrix;
  const QMatrix proj = kron(identity<QScalar>(W.dim()), symProjection(symBasis(m, W.N)));
  return qTracePartial({W.space, tensorSpace(W.N, m), product(product(rt, r), proj)});
}

QMatrix bipartiteAction(const GenSymbol& g, const Representation& W, const Representation& Q, bool reversed) {
  return tensorProduct(W, Q, reversed).generator(g);
}

}  // namespace uqc
