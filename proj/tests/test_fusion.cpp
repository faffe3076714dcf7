#include "doctest.h"
#include "uqcentral/fusion.hpp"

using namespace uqc;

namespace {

bool intertwines(const BipartiteOperator& R, const Representation& W, const Representation& Q, bool transposed) {
  for (const auto& [g, unused] : W.generators()) {
    const QMatrix lhs = product(R.matrix, bipartiteAction(g, W, Q, transposed));
    const QMatrix rhs = product(bipartiteAction(g, W, Q, !transposed), R.matrix);
    if (!equal(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("R-matrix on V (x) V for N = 1") {
  const Representation V = definingRep(1);
  const QScalar inv = QScalar::invQMinusQinvPower(1);
  const QMatrix e00 = matrixUnit<QScalar>(2, 0, 0), e11 = matrixUnit<QScalar>(2, 1, 1);
  const QMatrix e01 = matrixUnit<QScalar>(2, 0, 1), e10 = matrixUnit<QScalar>(2, 1, 0);
  const QMatrix hat00 = diagonal<QScalar>({QScalar::qPower(1) * inv, inv});
  const QMatrix hat11 = diagonal<QScalar>({inv, QScalar::qPower(1) * inv});
  const QMatrix R = pruned<QScalar>(kron(hat00, e00) + kron(hat11, e11) + kron(e10, e01));
  const QMatrix RT = pruned<QScalar>(kron(hat00, e00) + kron(hat11, e11) + kron(e01, e10));
  CHECK(equal(rMatrix(V).matrix, R));
  CHECK(equal(rMatrix(V, true).matrix, RT));
  CHECK(equal(product(fusedRFull(V, 1, true).matrix, fusedRFull(V, 1).matrix), product(RT, R)));
  CHECK(equal(gamma(V, 1).matrix, restrictToSym(product(RT, R), symBasis(1, 1), 2)));
  for (Index r = 0; r < 4; ++r)
    for (Index c = r + 1; c < 4; ++c) CHECK(rMatrix(V).matrix.coeff(r, c).isZero());
}

TEST_CASE("R-matrix intertwines the coproduct and its reverse") {
  for (int N = 1; N <= 3; ++N) {
    const Representation V = definingRep(N);
    CHECK(intertwines(rMatrix(V), V, V, false));
    CHECK(intertwines(rMatrix(V, true), V, V, true));
  }
}

TEST_CASE("fused R-matrix intertwines on the symmetric span") {
  for (int N = 1; N <= 2; ++N)
    for (int m = 1; m <= 3; ++m) {
      const Representation V = definingRep(N), S = symmetricPowerRep(N, m);
      CHECK(intertwines(fusedR(V, m), V, S, false));
      CHECK(intertwines(fusedR(V, m, true), V, S, true));
    }
  CHECK(equal(fusedRFull(definingRep(2), 1).matrix, rMatrix(definingRep(2)).matrix));
}

TEST_CASE("printed descending order for the transposed fusion leaves the span") {
  const Representation V = definingRep(2);
  const QMatrix descending = product(rLeg(V, 2, 2, true), rLeg(V, 1, 2, true));
  CHECK_THROWS_AS(restrictToSym(descending, symBasis(2, 2), V.dim()), NotInvariant);
}

TEST_CASE("fused R-matrix equals its factored form") {
  const Representation V = definingRep(2);
  CHECK(equal(factoredFusedR(V, 2).matrix, fusedR(V, 2).matrix));
  CHECK(equal(factoredFusedR(definingRep(3), 1).matrix, fusedR(definingRep(3), 1).matrix));
}

TEST_CASE("gamma commutes with the coproduct") {
  for (int N = 1; N <= 2; ++N)
    for (int m = 1; m <= 2; ++m) {
      const Representation V = definingRep(N), S = symmetricPowerRep(N, m);
      const BipartiteOperator G = gamma(V, m);
      for (const auto& [g, unused] : V.generators())
        CHECK(isZeroMatrix(commutator(G.matrix, bipartiteAction(g, V, S, false))));
    }
}

TEST_CASE("gamma is invertible at m = 1") {
  for (int N = 1; N <= 2; ++N) CHECK_FALSE(determinant(gamma(definingRep(N), 1).matrix).isZero());
  QMatrix singular(2, 2);
  singular.insert(0, 0) = QScalar::qPower(1);
  singular.insert(0, 1) = QScalar(1);
  singular.insert(1, 0) = QScalar::qPower(2);
  singular.insert(1, 1) = QScalar::qPower(1);
  CHECK(determinant(singular).isZero());
}

TEST_CASE("partial quantum trace") {
  const Representation V = definingRep(2);
  const BipartiteOperator id{V.space, tensorSpace(2, 1), identity<QScalar>(9)};
  const QScalar geometric = QScalar::qPower(-2) + QScalar(1) + QScalar::qPower(2);
  CHECK(equal(qTracePartial(id), scaled(identity<QScalar>(3), geometric)));
  CHECK(qTraceWeights(symmetricSpace(3, 2)).back() == -6);
  const BipartiteOperator a = gamma(V, 2), b = fusedR(V, 2);
  CHECK(equal(qTracePartial({a.aux, a.quantum, pruned<QScalar>(a.matrix + b.matrix)}),
              pruned<QScalar>(qTracePartial(a) + qTracePartial(b))));
}

TEST_CASE("Drinfeld construction reproduces the closed form") {
  for (int N = 1; N <= 3; ++N) {
    const Representation V = definingRep(N);
    CHECK(equal(drinfeldCentral(V, 1), evaluateCentral(centralElement(1, N), V)));
    CHECK(equal(drinfeldCentral(V, 2), evaluateCentral(centralElement(2, N), V)));
  }
  const Representation V2 = tensorPowerRep(2, 2);
  CHECK(equal(drinfeldCentral(V2, 2), evaluateCentral(centralElement(2, 2), V2)));
}

TEST_CASE("tensor-basis trace agrees with the symmetric-basis trace") {
  const Representation V = definingRep(2);
  CHECK(equal(drinfeldCentralTensorBasis(V, 2), drinfeldCentral(V, 2)));
  const SymBasis b = symBasis(2, 2);
  const QMatrix p = symProjection(b);
  CHECK(equal(product(p, p), p));
  CHECK(equal(product(p, b.vectors), b.vectors));
}
