#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uqc {

// (i_1, ..., i_m); entries are levels 0..N.
using MultiIndex = std::vector<int>;
// (mu_0, ..., mu_N), occupation numbers.
using Composition = std::vector<int>;

bool isWeaklyIncreasing(const MultiIndex& x);

// A bijection of {1..m} in one-line notation.
//
// The action on sequences is act(s, x)_k = x_{s(k)}, and the product is chosen
// so that this is a left action: act(a * b, x) = act(a, act(b, x)), i.e.
// (a * b)(k) = b(a(k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  // Swaps a and b (1-based).
  static Permutation transposition(int m, int a, int b);
  // Product of cycles written as in (1 3 4): 1 -> 3 -> 4 -> 1.
  static Permutation fromCycles(int m, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool isIdentity() const;

  Permutation inverse() const;
  // k -> s(m + 1 - k); act(reversed(), x) is act(*this, x) read backwards.
  Permutation reversed() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::string toText(const Permutation& p);

MultiIndex act(const Permutation& s, const MultiIndex& x);

// #{a < b : s(a) > s(b)}
int inversions(const Permutation& s);
// #{a < b : w_a > w_b}
int wordInversions(const MultiIndex& w);

struct CosetSystem {
  MultiIndex base;
  std::int64_t stabilizerOrder = 1;
  // One minimal-inversion representative per distinct rearrangement of base,
  // sorted lexicographically.
  std::vector<Permutation> reps;

  bool contains(const Permutation& s) const;
};

// The unique minimal-inversion s with act(s, A) == w.
Permutation minimalRepresentative(const MultiIndex& A, const MultiIndex& w);
CosetSystem cosetReps(const MultiIndex& A);
std::vector<Permutation> stabilizer(const MultiIndex& A);
std::vector<Permutation> allPermutations(int m);

struct Decomposition {
  Permutation sigma;
  Permutation xi;
  int d = 0;
};

// tau = sigma * xi with sigma in D_i, xi in H_i, d = inv(xi).
Decomposition decompose(const Permutation& tau, const MultiIndex& sortedIndex);

// tau_0 = from, ..., tau_l = to; consecutive quotients are transpositions and
// every step stays in D_A. Throws std::invalid_argument if an endpoint is not in D_A.
std::vector<Permutation> transpositionPath(const Permutation& to, const Permutation& from,
                                           const MultiIndex& A);
bool isTransposition(const Permutation& s);

Composition muOf(const MultiIndex& sortedIndex, int N);
MultiIndex indexOf(const Composition& mu);

std::vector<MultiIndex> enumerateW(int m, int N);
std::vector<Composition> enumerateB(int m, int N);

// sum_k (2k - N) mu_k
int rhoPairing(const Composition& mu, int N);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

}  // namespace uqc
