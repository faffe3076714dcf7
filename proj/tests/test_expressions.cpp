#include <algorithm>
#include <random>

#include "doctest.h"
#include "uqcentral/expressions.hpp"
#include "uqcentral/serialization.hpp"

using namespace uqc;

namespace {

std::string squash(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

Word hats(std::initializer_list<std::pair<int, int>> ij) {
  Word w;
  for (auto [i, j] : ij) w.push_back(RootSymbol::hat(i, j));
  return w;
}

}  // namespace

TEST_CASE("formal sums merge like words and drop zeros") {
  AlgebraExpr a = AlgebraExpr::letter(GenSymbol::ePlus(1));
  AlgebraExpr b = AlgebraExpr::letter(GenSymbol::ePlus(2));
  AlgebraExpr ab = a * b, ba = b * a;
  CHECK(ab.size() == 1);
  CHECK_FALSE(ab == ba);
  CHECK((ab + ab).coeff(ab.terms()[0].word) == QScalar(2));
  CHECK((ab - ab).isZero());
  AlgebraExpr s = ab + ba - ab;
  CHECK(s == ba);
  CHECK(s.terms()[0].word == ba.terms()[0].word);
}

TEST_CASE("root vector expansion") {
  CHECK(rootVectorExpand(0, 1, RootVariant::Modified) == AlgebraExpr::letter(GenSymbol::ePlus(1)));
  CHECK(rootVectorExpand(2, 1, RootVariant::Modified) == AlgebraExpr::letter(GenSymbol::eMinus(2)));
  AlgebraExpr e02 = rootVectorExpand(0, 2, RootVariant::Modified);
  AlgebraExpr expected = AlgebraExpr::monomial({GenSymbol::ePlus(1), GenSymbol::ePlus(2)}) +
                         AlgebraExpr::monomial({GenSymbol::ePlus(2), GenSymbol::ePlus(1)}, -QScalar::qPower(-1));
  CHECK(e02 == expected);
  CHECK(rootVectorExpand(0, 3, RootVariant::Modified).size() == 4);
  CHECK(rootVectorExpand(3, 0, RootVariant::Primed).size() == 4);
  AlgebraExpr p02 = rootVectorExpand(0, 2, RootVariant::Primed);
  CHECK(p02.coeff({GenSymbol::ePlus(2), GenSymbol::ePlus(1)}) == -QScalar::qPower(1));
  CHECK_THROWS_AS(rootVectorExpand(1, 1, RootVariant::Modified), std::invalid_argument);
  CHECK_THROWS_AS(rootVectorExpand(0, 3, RootVariant::Modified, 0), std::invalid_argument);
}

TEST_CASE("hatted root vectors") {
  CHECK(hatE(2, 2) == AlgebraExpr::monomial({GenSymbol::eps(2, 2)}, QScalar::invQMinusQinvPower(1)));
  CHECK(hatE(0, 1) ==
        AlgebraExpr::monomial({GenSymbol::eps(0, 1), GenSymbol::eps(1, 1), GenSymbol::ePlus(1)}, QScalar::sPower(-1)));
  CHECK(hatE(1, 0) ==
        AlgebraExpr::monomial({GenSymbol::eps(1, 1), GenSymbol::eps(0, 1), GenSymbol::eMinus(1)}, QScalar::sPower(-1)));
  CHECK(serialize(hatE(1, 1), Format::Text) == "q^{ε_1}/(q-q^{-1})");
}

TEST_CASE("tilde-E displayed examples") {
  AlgebraExpr m = tildeE({0, 1}, {2, 3}, Sign::Minus);
  CHECK(m == AlgebraExpr::monomial(hats({{1, 3}, {0, 2}})) +
                 AlgebraExpr::monomial(hats({{0, 3}, {1, 2}}), QScalar::qPower(1)));
  CHECK(squash(serialize(m, Format::Latex)) == squash("\\hat{E}_{13}\\hat{E}_{02} + q \\hat{E}_{03}\\hat{E}_{12}"));
  AlgebraExpr p = tildeE({2, 3}, {0, 1}, Sign::Plus);
  CHECK(p == AlgebraExpr::monomial(hats({{3, 1}, {2, 0}})) +
                 AlgebraExpr::monomial(hats({{2, 1}, {3, 0}}), QScalar::qPower(-1)));
  CHECK(squash(serialize(p, Format::Latex)) == squash("\\hat{E}_{31}\\hat{E}_{20} + q^{-1}\\hat{E}_{21}\\hat{E}_{30}"));
  CHECK(tildeE({0, 2}, {1, 1}, Sign::Plus).isZero());
  CHECK(tildeE({1, 1}, {0, 2}, Sign::Plus).isZero());
  CHECK(tildeE({0, 2}, {1, 1}, Sign::Minus).isZero());
  CHECK(tildeE({1, 1}, {0, 2}, Sign::Minus).isZero());
  CHECK_THROWS_AS(tildeE({1, 0}, {0, 2}, Sign::Plus), std::invalid_argument);
}

TEST_CASE("literal and corrected tilde-E differ only by q^{P(j)-P(i)} on the minus side") {
  auto pairs = [](const MultiIndex& x) {
    int n = 0;
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b) n += x[a] != x[b];
    return n;
  };
  for (const auto& i : enumerateW(3, 2))
    for (const auto& j : enumerateW(3, 2)) {
      CHECK(tildeE(i, j, Sign::Plus, TildeForm::Literal) == tildeE(i, j, Sign::Plus));
      CHECK(tildeE(i, j, Sign::Minus) ==
            QScalar::qPower(pairs(j) - pairs(i)) * tildeE(i, j, Sign::Minus, TildeForm::Literal));
    }
}

TEST_CASE("C_2 term census") {
  CentralElement c = centralElement(2, 3);
  CHECK(termCount(c) == 50);
  TermCensus t = termCensus(c);
  CHECK(t.bothConstant == 10);
  CHECK(t.oneConstant == 20);
  CHECK(t.interleaved == 15);
  CHECK(t.separated == 5);
  std::vector<std::pair<MultiIndex, MultiIndex>> expected{
      {{0, 2}, {1, 1}}, {{0, 3}, {2, 2}}, {{0, 3}, {1, 1}}, {{1, 3}, {2, 2}}, {{0, 3}, {1, 2}}};
  auto norm = [](std::vector<std::pair<MultiIndex, MultiIndex>> v) {
    for (auto& [a, b] : v)
      if (b < a) std::swap(a, b);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(norm(t.vanishingSets) == norm(expected));
}

TEST_CASE("C_1 term count") {
  for (int N = 1; N <= 5; ++N) CHECK(termCount(centralElement(1, N)) == (N + 1) * (N + 2) / 2);
  CHECK(termCount(CentralElement{}) == 0);
  CHECK_THROWS_AS(centralElement(1, 0), std::invalid_argument);
}

TEST_CASE("Cartan letters move to the front exactly") {
  // e_{+,1} q^{eps_0/2} = q^{-1/2} q^{eps_0/2} e_{+,1}
  AlgebraExpr e = AlgebraExpr::monomial({GenSymbol::ePlus(1), GenSymbol::eps(0, 1)});
  CHECK(cartanToFront(e) == AlgebraExpr::monomial({GenSymbol::eps(0, 1), GenSymbol::ePlus(1)}, QScalar::sPower(-1)));
  AlgebraExpr f = AlgebraExpr::monomial({GenSymbol::eMinus(2), GenSymbol::eps(2, 2), GenSymbol::eps(2, -2)});
  CHECK(cartanToFront(f) == AlgebraExpr::letter(GenSymbol::eMinus(2)));
}

TEST_CASE("serialization formats") {
  CHECK(serialize(AlgebraExpr{}, Format::Text) == "0");
  CHECK(parseFormat("latex") == Format::Latex);
  CHECK_THROWS_AS(parseFormat("xml"), std::invalid_argument);
  AlgebraExpr c1 = centralElement(1, 1).expr();
  CHECK(serialize(c1, Format::Text) == serialize(c1, Format::Text));
  CHECK(parseExprJson(serialize(c1, Format::Json)) == c1);
}

TEST_CASE("json round trip of random expressions") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> idx(0, 3), len(0, 4), nt(0, 5), kind(0, 4), ex(-5, 5), den(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraExpr e;
    const int n = nt(rng);
    for (int t = 0; t < n; ++t) {
      Word w;
      const int l = len(rng);
      for (int k = 0; k < l; ++k) {
        switch (kind(rng)) {
          case 0: w.push_back(GenSymbol::ePlus(1 + idx(rng))); break;
          case 1: w.push_back(GenSymbol::eMinus(1 + idx(rng))); break;
          case 2: w.push_back(GenSymbol::eps(idx(rng), ex(rng))); break;
          case 3: w.push_back(RootSymbol::hat(idx(rng), idx(rng))); break;
          default: w.push_back(RootSymbol{idx(rng), idx(rng), RootVariant::Primed}); break;
        }
      }
      LaurentPoly p({{ex(rng), Rational(ex(rng), 3)}, {ex(rng), Rational(1)}});
      e.add(w, QScalar(p, den(rng)));
    }
    const std::string s = serialize(e, Format::Json);
    AlgebraExpr back = parseExprJson(s);
    CHECK(back == e);
    CHECK(serialize(back, Format::Json) == s);
  }
}
