#include "doctest.h"
#include "uqcentral/representations.hpp"
#include "uqcentral/serialization.hpp"

using namespace uqc;

namespace {

QMatrix column(const SymBasis& b, const Composition& mu) {
  return QMatrix(b.vectors.col(b.position(mu)));
}

QMatrix mOf(const MultiIndex& sorted, int N) {
  const int m = static_cast<int>(sorted.size());
  return column(symBasis(m, N), muOf(sorted, N));
}

// (q^{h_i} - q^{-h_i}) / (q - q^{-1})
QMatrix cartanBracket(const Representation& r, int i) {
  return scaled(QMatrix(r.cartanH(i, 2) - r.cartanH(i, -2)), QScalar::invQMinusQinvPower(1));
}

}  // namespace

TEST_CASE("Chevalley relations on tensor powers") {
  for (bool reversed : {false, true})
    for (int N = 1; N <= 3; ++N)
      for (int k = 1; k <= 3; ++k) {
        const Representation r = tensorPowerRep(N, k, reversed);
        for (int i = 1; i <= N; ++i)
          for (int j = 1; j <= N; ++j) {
            const QMatrix c = commutator(r.ePlus[i], r.eMinus[j]);
            if (i == j) CHECK(equal(c, cartanBracket(r, i)));
            else CHECK(isZeroMatrix(c));
          }
      }
}

TEST_CASE("coproduct matrices agree with iterated tensor products") {
  for (bool reversed : {false, true}) {
    const Representation r = tensorPowerRep(2, 3, reversed);
    for (int i = 1; i <= 2; ++i) {
      CHECK(equal(coproductMatrix(GenSymbol::ePlus(i), 3, 2, reversed), r.ePlus[i]));
      CHECK(equal(coproductMatrix(GenSymbol::eMinus(i), 3, 2, reversed), r.eMinus[i]));
    }
    CHECK(equal(coproductMatrix(GenSymbol::eps(1, -1), 3, 2, reversed), r.cartan(1, -1)));
  }
  CHECK_THROWS_AS(coproductMatrix(GenSymbol::ePlus(3), 2, 2), std::out_of_range);
  CHECK_THROWS_AS(slotMatrix(GenSymbol::ePlus(1), 4, 3, 2), std::out_of_range);
}

TEST_CASE("permutation matrices give a left action") {
  const Permutation a = Permutation::fromCycles(3, {{1, 2, 3}}), b = Permutation::transposition(3, 1, 2);
  CHECK(equal(permutationMatrix(a * b, 2), product(permutationMatrix(a, 2), permutationMatrix(b, 2))));
  const QMatrix p = permutationMatrix(b, 2);
  CHECK(p.coeff(wordIndex({1, 0, 2}, 2), wordIndex({0, 1, 2}, 2)) == QScalar(1));
}

TEST_CASE("symmetric basis") {
  const SymBasis b = symBasis(2, 3);
  CHECK(b.dim() == 10);
  CHECK(b.vectors.rows() == 16);
  const QMatrix m01 = column(b, {1, 1, 0, 0});
  CHECK(m01.coeff(wordIndex({0, 1}, 3), 0) == QScalar(1));
  CHECK(m01.coeff(wordIndex({1, 0}, 3), 0) == QScalar::qPower(-1));
  CHECK(symBasis(3, 2).dim() == 10);
  CHECK_THROWS_AS(restrictToSym(unitTensor({0, 1}, {0, 1}, 3), b), NotInvariant);
  CHECK(equal(restrictToSym(identity<QScalar>(32), b, 2), identity<QScalar>(20)));
}

TEST_CASE("lowering operator on M(mu)") {
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 3; ++N) {
      const SymBasis b = symBasis(m, N);
      for (int i = 1; i <= N; ++i) {
        const QMatrix f = coproductMatrix(GenSymbol::eMinus(i), m, N);
        for (const auto& mu : b.labels) {
          const QMatrix lhs = product(f, column(b, mu));
          auto nu = lowered(mu, i);
          if (!nu) {
            CHECK(isZeroMatrix(lhs));
            continue;
          }
          QScalar series;
          for (int k = 0; k <= mu[i]; ++k) series += QScalar::qPower(-2 * k);
          const QScalar c = QScalar::sPower(mu[i - 1] + mu[i] - 1) * series;
          CHECK(equal(lhs, scaled(column(b, *nu), c)));
        }
      }
    }
}

TEST_CASE("normalized basis conjugates the restriction to closed forms") {
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 3; ++N) {
      const Representation sym = symmetricPowerRep(N, m), ex = exRep(N, m);
      const std::vector<QScalar> c = tildeBasisScalars(m, N);
      std::vector<QScalar> cinv;
      for (const auto& x : c) cinv.push_back(x.inverseMonomial());
      const QMatrix C = diagonal(c), Cinv = diagonal(cinv);
      for (int i = 1; i <= N; ++i) {
        CHECK(equal(product(product(Cinv, sym.ePlus[i]), C), ex.ePlus[i]));
        CHECK(equal(product(product(Cinv, sym.eMinus[i]), C), ex.eMinus[i]));
      }
      for (int i = 0; i <= N; ++i) CHECK(equal(sym.cartan(i, 1), ex.cartan(i, 1)));
    }
}

TEST_CASE("closed-form module satisfies the Chevalley relations") {
  const Representation ex = exRep(3, 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(equal(commutator(ex.ePlus[i], ex.eMinus[i]), cartanBracket(ex, i)));
    CHECK(equal(exRepGenerator(GenSymbol::eps(i, 1), 3, 3), ex.cartan(i, 1)));
  }
  CHECK(tildeBasisScalars(2, 1) == std::vector<QScalar>{QScalar(1), QScalar::sPower(1), QScalar(1)});
}

TEST_CASE("unit tensors carry M(i) to M(j)") {
  const QMatrix first = pruned<QScalar>(unitTensor({1, 2}, {0, 0}, 2) +
                                        QMatrix(scaled(unitTensor({2, 1}, {0, 0}, 2), QScalar::qPower(-1))));
  CHECK(equal(product(first, mOf({0, 0}, 2)), mOf({1, 2}, 2)));
  CHECK(equal(first, coreOperator({1, 2}, {0, 0}, 2)));
  CHECK(equal(product(unitTensor({2, 2}, {0, 1}, 2), mOf({0, 1}, 2)), mOf({2, 2}, 2)));
  const QMatrix third = pruned<QScalar>(unitTensor({2, 3}, {0, 1}, 3) + unitTensor({3, 2}, {1, 0}, 3));
  CHECK(equal(product(third, mOf({0, 1}, 3)), mOf({2, 3}, 3)));
}

TEST_CASE("core operator identities") {
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 3; ++N) {
      const SymBasis b = symBasis(m, N);
      const auto W = enumerateW(m, N);
      for (const auto& i : W)
        for (const auto& j : W) {
          CHECK(equal(product(coreOperator(j, i, N), mOf(i, N)), mOf(j, N)));
          const auto Di = cosetReps(i).reps;
          for (const auto& zeta : cosetReps(j).reps)
            for (const auto& tau : Di) {
              const QMatrix diff =
                  pruned<QScalar>(QMatrix(scaled(unitTensor(act(zeta, j), act(tau, i), N), QScalar::qPower(inversions(tau)))) -
                                  QMatrix(scaled(unitTensor(act(zeta, j), i, N), QScalar(1))));
              CHECK(isZeroMatrix(product(diff, b.vectors)));
            }
        }
    }
}

TEST_CASE("C_1 acts on V by a scalar") {
  for (int N = 1; N <= 3; ++N) {
    const QMatrix c = evaluateCentral(centralElement(1, N), definingRep(N));
    CHECK(scalarMultipleOfIdentity(c).value.has_value());
    CHECK(equal(c, evaluate(centralElement(1, N).expr(), definingRep(N))));
  }
}

TEST_CASE("matrix json round trip") {
  const Representation r = symmetricPowerRep(2, 2);
  const RepMatrix m{r.space, r.eMinus[1]};
  const Json j = toJson(m);
  CHECK(j["space"] == "sym:2");
  CHECK(equal(matrixFromJson(Json::parse(j.dump()), r.dim()), m.matrix));
}
