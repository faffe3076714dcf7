#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "uqcentral/combinatorics.hpp"

using namespace uqc;

namespace {

// Scans all of S_m: sigma is a representative iff no element of sigma*H_A has fewer inversions.
std::vector<Permutation> scanCosetReps(const MultiIndex& A) {
  std::vector<Permutation> H = stabilizer(A), out;
  for (const auto& s : allPermutations(static_cast<int>(A.size()))) {
    bool minimal = true;
    for (const auto& h : H)
      if (inversions(s * h) < inversions(s)) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

MultiIndex randomIndex(std::mt19937& rng, int m, int maxLevel) {
  std::uniform_int_distribution<int> d(0, maxLevel);
  MultiIndex x(m);
  for (auto& v : x) v = d(rng);
  return x;
}

}  // namespace

TEST_CASE("action on sequences") {
  MultiIndex A{3, 3, 3, 2, 2, 1};
  CHECK(act(Permutation::transposition(6, 3, 4), A) == MultiIndex{3, 3, 2, 3, 2, 1});
  CHECK(act(Permutation::transposition(6, 3, 5), A) == MultiIndex{3, 3, 2, 2, 3, 1});
  CHECK(act(Permutation::identity(6), A) == A);
  CHECK_THROWS_AS(act(Permutation::identity(3), A), std::invalid_argument);
}

TEST_CASE("product makes act a left action") {
  std::mt19937 rng(3);
  auto perms = allPermutations(4);
  for (int t = 0; t < 50; ++t) {
    const auto& a = perms[rng() % perms.size()];
    const auto& b = perms[rng() % perms.size()];
    MultiIndex x = randomIndex(rng, 4, 5);
    CHECK(act(a * b, x) == act(a, act(b, x)));
    CHECK((a * a.inverse()).isIdentity());
  }
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(5)) == 0);
  CHECK(inversions(Permutation::transposition(5, 2, 3)) == 1);
  for (int m = 1; m <= 6; ++m)
    for (const auto& s : allPermutations(m)) CHECK(inversions(s.reversed()) == m * (m - 1) / 2 - inversions(s));
}

TEST_CASE("coset representatives of the displayed example") {
  MultiIndex A{3, 3, 3, 2, 2, 1};
  CosetSystem cs = cosetReps(A);
  CHECK(cs.contains(Permutation::transposition(6, 3, 4)));
  // (35) itself carries 3 inversions; its coset's minimal element is the 3-cycle (345).
  Permutation c345 = Permutation::fromCycles(6, {{3, 4, 5}});
  CHECK(act(c345, A) == MultiIndex{3, 3, 2, 2, 3, 1});
  CHECK(cs.contains(c345));
  CHECK_FALSE(cs.contains(Permutation::transposition(6, 3, 5)));
  CHECK(inversions(c345) < inversions(Permutation::transposition(6, 3, 5)));
  Permutation c134 = Permutation::fromCycles(6, {{1, 3, 4}});
  CHECK_FALSE(cs.contains(c134));
  CHECK(act(c134, A) == act(Permutation::transposition(6, 3, 4), A));
  CHECK(cs.reps.size() * cs.stabilizerOrder == factorial(6));
}

TEST_CASE("coset representatives agree with a scan of S_m") {
  CHECK(cosetReps({1, 1, 2}).reps.size() == 3);
  CHECK(cosetReps({0, 1, 2, 3}).reps.size() == 24);
  std::mt19937 rng(17);
  for (int m = 1; m <= 5; ++m)
    for (int t = 0; t < 12; ++t) {
      MultiIndex A = randomIndex(rng, m, 2);
      CosetSystem cs = cosetReps(A);
      CHECK(cs.reps == scanCosetReps(A));
      CHECK(static_cast<std::int64_t>(cs.reps.size()) * cs.stabilizerOrder == factorial(m));
      std::set<MultiIndex> orbit;
      for (const auto& s : cs.reps) orbit.insert(act(s, A));
      CHECK(orbit.size() == cs.reps.size());
    }
}

TEST_CASE("inversions add across D_A and H_A for sorted A") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& A : enumerateW(m, 2)) {
      CosetSystem cs = cosetReps(A);
      for (const auto& s : cs.reps)
        for (const auto& h : stabilizer(A)) CHECK(inversions(s * h) == inversions(s) + inversions(h));
    }
  // Without sorting, H_A is not a parabolic subgroup and additivity can fail.
  MultiIndex A{1, 2, 1};
  Permutation s = Permutation::identity(3), h = Permutation::transposition(3, 1, 3);
  CHECK(act(h, A) == A);
  CHECK(inversions(s * h) != inversions(s) + 1);
}

TEST_CASE("decomposition tau = sigma xi") {
  Decomposition d0 = decompose(Permutation::identity(3), {0, 1, 1});
  CHECK(d0.sigma.isIdentity());
  CHECK(d0.xi.isIdentity());
  CHECK(d0.d == 0);
  Decomposition d1 = decompose(Permutation::transposition(2, 1, 2), {1, 1});
  CHECK(d1.sigma.isIdentity());
  CHECK(d1.xi == Permutation::transposition(2, 1, 2));
  CHECK(d1.d == 1);
  for (const MultiIndex& I : enumerateW(4, 2)) {
    CosetSystem cs = cosetReps(I);
    auto H = stabilizer(I);
    for (const auto& r : cs.reps) CHECK(decompose(r, I).xi.isIdentity());
    for (const auto& tau : allPermutations(4)) {
      Decomposition d = decompose(tau, I);
      CHECK(d.sigma * d.xi == tau);
      CHECK(cs.contains(d.sigma));
      CHECK(act(d.xi, I) == I);
      CHECK(d.d == inversions(d.xi));
      int count = 0;
      for (const auto& s : cs.reps)
        for (const auto& h : H)
          if (s * h == tau) ++count;
      CHECK(count == 1);
    }
  }
}

TEST_CASE("transposition paths") {
  MultiIndex A{0, 1, 2};
  Permutation t = Permutation({3, 2, 1});
  CHECK(transpositionPath(t, t, A).size() == 1);
  // From the identity the path is s_1, s_2 s_1, ... for a reduced word of t.
  auto path = transpositionPath(t, Permutation::identity(3), A);
  CHECK(path.size() == static_cast<std::size_t>(inversions(t) + 1));
  for (std::size_t j = 0; j < path.size(); ++j) CHECK(inversions(path[j]) == static_cast<int>(j));
  CHECK_THROWS_AS(transpositionPath(Permutation({2, 1, 3}), Permutation::identity(3), {1, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("compositions and multi-indices") {
  CHECK(muOf({2, 3}, 3) == Composition{0, 0, 1, 1});
  CHECK(muOf({0, 0, 0}, 2) == Composition{3, 0, 0});
  CHECK_THROWS_AS(muOf({0, 4}, 3), std::out_of_range);
  for (int N = 0; N <= 3; ++N)
    for (const auto& I : enumerateW(3, N)) CHECK(indexOf(muOf(I, N)) == I);
  CHECK(enumerateW(2, 3).size() == 10);
  CHECK(enumerateB(2, 3).size() == 10);
  for (int m = 1; m <= 4; ++m)
    for (int N = 0; N <= 4; ++N) {
      auto W = enumerateW(m, N);
      auto B = enumerateB(m, N);
      CHECK(static_cast<std::int64_t>(B.size()) == binomial(m + N, N));
      CHECK(W.size() == B.size());
      CHECK(std::is_sorted(W.begin(), W.end()));
      CHECK(std::is_sorted(B.begin(), B.end()));
      CHECK(std::adjacent_find(W.begin(), W.end()) == W.end());
    }
  auto W1 = enumerateW(1, 3);
  CHECK(W1 == std::vector<MultiIndex>{{0}, {1}, {2}, {3}});
}

TEST_CASE("rho pairing") {
  CHECK(rhoPairing({0, 0, 1, 1}, 3) == 4);
  CHECK(rhoPairing({3, 0, 0}, 2) == -6);
  for (int N = 0; N <= 4; ++N)
    for (const auto& I : enumerateW(3, N)) {
      int s = 0;
      for (int v : I) s += v;
      CHECK(rhoPairing(muOf(I, N), N) == -N * 3 + 2 * s);
    }
}
