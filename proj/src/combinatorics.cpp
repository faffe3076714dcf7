#include "uqcentral/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uqc {

bool isWeaklyIncreasing(const MultiIndex& x) { return std::is_sorted(x.begin(), x.end()); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
  return p;
}

Permutation Permutation::fromCycles(int m, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(m);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p.images_.at(c[k] - 1) = c[(k + 1) % c.size()];
  return Permutation(p.images_);
}

bool Permutation::isIdentity() const {
  for (int k = 0; k < size(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int k = 0; k < size(); ++k) im[images_[k] - 1] = k + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::reversed() const {
  std::vector<int> im(images_.rbegin(), images_.rend());
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<int> im(a.size());
  for (int k = 1; k <= a.size(); ++k) im[k - 1] = b(a(k));
  return Permutation(std::move(im));
}

std::string toText(const Permutation& p) {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < p.size(); ++k) os << (k ? " " : "") << p.images()[k];
  os << "]";
  return os.str();
}

MultiIndex act(const Permutation& s, const MultiIndex& x) {
  if (static_cast<int>(x.size()) != s.size()) throw std::invalid_argument("act: length mismatch");
  MultiIndex r(x.size());
  for (int k = 1; k <= s.size(); ++k) r[k - 1] = x[s(k) - 1];
  return r;
}

int inversions(const Permutation& s) {
  int n = 0;
  for (int a = 1; a <= s.size(); ++a)
    for (int b = a + 1; b <= s.size(); ++b)
      if (s(a) > s(b)) ++n;
  return n;
}

int wordInversions(const MultiIndex& w) {
  int n = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++n;
  return n;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

bool CosetSystem::contains(const Permutation& s) const {
  return std::binary_search(reps.begin(), reps.end(), s);
}

Permutation minimalRepresentative(const MultiIndex& A, const MultiIndex& w) {
  if (A.size() != w.size()) throw std::invalid_argument("minimalRepresentative: length mismatch");
  // Equal values keep their relative order, which is what minimizes inversions.
  std::map<int, std::vector<int>> positions;
  for (std::size_t k = 0; k < A.size(); ++k) positions[A[k]].push_back(static_cast<int>(k) + 1);
  std::map<int, std::size_t> used;
  std::vector<int> im(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto it = positions.find(w[k]);
    std::size_t& u = used[w[k]];
    if (it == positions.end() || u >= it->second.size())
      throw std::invalid_argument("minimalRepresentative: not a rearrangement");
    im[k] = it->second[u++];
  }
  return Permutation(std::move(im));
}

CosetSystem cosetReps(const MultiIndex& A) {
  CosetSystem cs;
  cs.base = A;
  std::map<int, int> mult;
  for (int v : A) ++mult[v];
  for (const auto& [v, c] : mult) cs.stabilizerOrder *= factorial(c);
  MultiIndex w = A;
  std::sort(w.begin(), w.end());
  do {
    cs.reps.push_back(minimalRepresentative(A, w));
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(cs.reps.begin(), cs.reps.end());
  return cs;
}

std::vector<Permutation> allPermutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> stabilizer(const MultiIndex& A) {
  std::vector<Permutation> out;
  for (auto& s : allPermutations(static_cast<int>(A.size())))
    if (act(s, A) == A) out.push_back(std::move(s));
  return out;
}

Decomposition decompose(const Permutation& tau, const MultiIndex& sortedIndex) {
  if (!isWeaklyIncreasing(sortedIndex)) throw std::invalid_argument("decompose: index not sorted");
  Decomposition d;
  d.sigma = minimalRepresentative(sortedIndex, act(tau, sortedIndex));
  d.xi = d.sigma.inverse() * tau;
  d.d = inversions(d.xi);
  return d;
}

bool isTransposition(const Permutation& s) {
  int moved = 0;
  for (int k = 1; k <= s.size(); ++k)
    if (s(k) != k) ++moved;
  return moved == 2 && (s * s).isIdentity();
}

namespace {

// Adjacent swaps of the one-line form that remove one inversion at a time,
// ending at the identity. Each step is t * current for an adjacent t.
std::vector<Permutation> bubbleToIdentity(const Permutation& s) {
  std::vector<Permutation> path{s};
  Permutation cur = s;
  const int m = s.size();
  for (;;) {
    int k = 1;
    while (k < m && cur(k) < cur(k + 1)) ++k;
    if (k >= m) break;
    cur = Permutation::transposition(m, k, k + 1) * cur;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::vector<Permutation> transpositionPath(const Permutation& to, const Permutation& from,
                                           const MultiIndex& A) {
  const CosetSystem cs = cosetReps(A);
  if (!cs.contains(to) || !cs.contains(from))
    throw std::invalid_argument("transpositionPath: endpoint not in D_A");
  if (to == from) return {to};
  std::vector<Permutation> path = bubbleToIdentity(from);
  std::vector<Permutation> up = bubbleToIdentity(to);
  path.insert(path.end(), up.rbegin() + 1, up.rend());
  return path;
}

Composition muOf(const MultiIndex& sortedIndex, int N) {
  Composition mu(N + 1, 0);
  for (int v : sortedIndex) {
    if (v < 0 || v > N) throw std::out_of_range("muOf: index exceeds N");
    ++mu[v];
  }
  return mu;
}

MultiIndex indexOf(const Composition& mu) {
  MultiIndex x;
  for (std::size_t k = 0; k < mu.size(); ++k) x.insert(x.end(), mu[k], static_cast<int>(k));
  return x;
}

std::vector<MultiIndex> enumerateW(int m, int N) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  if (m <= 0) return out;
  for (;;) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[k] == N) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < m; ++j) cur[j] = cur[k];
  }
  return out;
}

std::vector<Composition> enumerateB(int m, int N) {
  std::vector<Composition> out;
  Composition cur(N + 1, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == N) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (m >= 1 && N >= 0) rec(rec, 0, m);
  return out;
}

int rhoPairing(const Composition& mu, int N) {
  int r = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) r += (2 * static_cast<int>(k) - N) * mu[k];
  return r;
}

}  // namespace uqc
