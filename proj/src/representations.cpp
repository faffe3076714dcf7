#include "uqcentral/representations.hpp"

#include <deque>
#include <unordered_map>

namespace uqc {

namespace {

using Triplets = std::vector<Eigen::Triplet<QScalar>>;

QMatrix fromTriplets(Index rows, Index cols, const Triplets& t) {
  QMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  return prune(m);
}

QMatrix sum(const QMatrix& a, const QMatrix& b) { return pruned<QScalar>(a + b); }

void checkGeneratorIndex(const GenSymbol& g, int N) {
  const bool cartan = g.kind == GenSymbol::Kind::CartanEps;
  if (cartan ? (g.i < 0 || g.i > N) : (g.i < 1 || g.i > N))
    throw std::out_of_range("generator index " + std::to_string(g.i) + " outside gl(" + std::to_string(N + 1) + ")");
}

QMatrix definingGenerator(const GenSymbol& g, int N) {
  const Index n = N + 1;
  switch (g.kind) {
    case GenSymbol::Kind::EPlus: return matrixUnit<QScalar>(n, g.i - 1, g.i);
    case GenSymbol::Kind::EMinus: return matrixUnit<QScalar>(n, g.i, g.i - 1);
    case GenSymbol::Kind::CartanEps: {
      std::vector<QScalar> d(n, QScalar(1));
      d[g.i] = QScalar::sPower(g.half);
      return diagonal(d);
    }
  }
  return {};
}

// q^{half h_i / 2} on V
QMatrix definingK(int i, int half, int N) {
  std::vector<QScalar> d(N + 1, QScalar(1));
  d[i - 1] = QScalar::sPower(half);
  d[i] = QScalar::sPower(-half);
  return diagonal(d);
}

}  // namespace

std::string RepSpace::describe() const {
  switch (kind) {
    case Kind::TensorPower: return "tensor:" + std::to_string(k);
    case Kind::SymmetricPower: return "sym:" + std::to_string(k);
    case Kind::Trivial: return "trivial";
  }
  return "";
}

RepSpace tensorSpace(int N, int k) {
  RepSpace s{RepSpace::Kind::TensorPower, N, k, {}};
  s.labels.push_back({});
  for (int r = 0; r < k; ++r) {
    std::vector<MultiIndex> next;
    for (const auto& w : s.labels)
      for (int l = 0; l <= N; ++l) {
        MultiIndex x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    s.labels = std::move(next);
  }
  return s;
}

RepSpace symmetricSpace(int N, int m) { return RepSpace{RepSpace::Kind::SymmetricPower, N, m, enumerateB(m, N)}; }

QMatrix Representation::cartan(int i, int half) const {
  checkGeneratorIndex(GenSymbol::eps(i, half), N);
  std::vector<QScalar> d;
  d.reserve(weights.size());
  for (const auto& w : weights) d.push_back(QScalar::sPower(half * w[i]));
  return diagonal(d);
}

QMatrix Representation::cartanH(int i, int half) const {
  checkGeneratorIndex(GenSymbol::ePlus(i), N);
  std::vector<QScalar> d;
  d.reserve(weights.size());
  for (const auto& w : weights) d.push_back(QScalar::sPower(half * (w[i - 1] - w[i])));
  return diagonal(d);
}

QMatrix Representation::generator(const GenSymbol& g) const {
  checkGeneratorIndex(g, N);
  switch (g.kind) {
    case GenSymbol::Kind::EPlus: return ePlus[g.i];
    case GenSymbol::Kind::EMinus: return eMinus[g.i];
    case GenSymbol::Kind::CartanEps: return cartan(g.i, g.half);
  }
  return {};
}

std::vector<std::pair<GenSymbol, QMatrix>> Representation::generators() const {
  std::vector<std::pair<GenSymbol, QMatrix>> out;
  for (int i = 1; i <= N; ++i) {
    out.emplace_back(GenSymbol::ePlus(i), ePlus[i]);
    out.emplace_back(GenSymbol::eMinus(i), eMinus[i]);
  }
  for (int i = 0; i <= N; ++i)
    for (int h : {1, -1}) out.emplace_back(GenSymbol::eps(i, h), cartan(i, h));
  return out;
}

Representation definingRep(int N) {
  if (N < 1) throw std::invalid_argument("definingRep: N must be >= 1");
  Representation r;
  r.space = tensorSpace(N, 1);
  r.N = N;
  r.ePlus.resize(N + 1);
  r.eMinus.resize(N + 1);
  for (int i = 1; i <= N; ++i) {
    r.ePlus[i] = definingGenerator(GenSymbol::ePlus(i), N);
    r.eMinus[i] = definingGenerator(GenSymbol::eMinus(i), N);
  }
  for (int l = 0; l <= N; ++l) {
    std::vector<int> w(N + 1, 0);
    w[l] = 1;
    r.weights.push_back(w);
  }
  return r;
}

Representation trivialRep(int N) {
  if (N < 1) throw std::invalid_argument("trivialRep: N must be >= 1");
  Representation r;
  r.space = RepSpace{RepSpace::Kind::Trivial, N, 0, {{}}};
  r.N = N;
  r.ePlus.assign(N + 1, QMatrix(1, 1));
  r.eMinus.assign(N + 1, QMatrix(1, 1));
  r.weights.assign(1, std::vector<int>(N + 1, 0));
  return r;
}

Representation tensorProduct(const Representation& a, const Representation& b, bool reversed) {
  if (a.N != b.N) throw std::invalid_argument("tensorProduct: rank mismatch");
  const int N = a.N;
  Representation r;
  r.N = N;
  r.space = a.space;
  r.space.kind = RepSpace::Kind::TensorPower;
  r.space.k = a.space.k + b.space.k;
  r.space.labels.clear();
  for (const auto& x : a.space.labels)
    for (const auto& y : b.space.labels) {
      MultiIndex z = x;
      z.insert(z.end(), y.begin(), y.end());
      r.space.labels.push_back(std::move(z));
    }
  for (const auto& x : a.weights)
    for (const auto& y : b.weights) {
      std::vector<int> w(N + 1);
      for (int l = 0; l <= N; ++l) w[l] = x[l] + y[l];
      r.weights.push_back(std::move(w));
    }
  const int sign = reversed ? -1 : 1;
  r.ePlus.resize(N + 1);
  r.eMinus.resize(N + 1);
  for (int i = 1; i <= N; ++i) {
    const QMatrix kLeft = a.cartanH(i, sign), kRight = b.cartanH(i, -sign);
    r.ePlus[i] = sum(kron(a.ePlus[i], kRight), kron(kLeft, b.ePlus[i]));
    r.eMinus[i] = sum(kron(a.eMinus[i], kRight), kron(kLeft, b.eMinus[i]));
  }
  return r;
}

Representation tensorPowerRep(int N, int k, bool reversed) {
  if (k < 1) throw std::invalid_argument("tensorPowerRep: k must be >= 1");
  const Representation v = definingRep(N);
  Representation r = v;
  for (int s = 1; s < k; ++s) r = tensorProduct(r, v, reversed);
  return r;
}

QMatrix slotMatrix(const GenSymbol& g, int slot, int m, int N, bool reversed) {
  checkGeneratorIndex(g, N);
  if (slot < 1 || slot > m) throw std::out_of_range("slotMatrix: slot outside 1..m");
  if (g.kind == GenSymbol::Kind::CartanEps) throw std::invalid_argument("slotMatrix: Cartan elements are grouplike");
  const int sign = reversed ? -1 : 1;
  std::vector<QMatrix> f;
  for (int v = 1; v <= m; ++v) {
    if (v < slot) f.push_back(definingK(g.i, sign, N));
    else if (v == slot) f.push_back(definingGenerator(g, N));
    else f.push_back(definingK(g.i, -sign, N));
  }
  return kron(f);
}

QMatrix coproductMatrix(const GenSymbol& g, int m, int N, bool reversed) {
  checkGeneratorIndex(g, N);
  if (m < 1) throw std::invalid_argument("coproductMatrix: m must be >= 1");
  if (g.kind == GenSymbol::Kind::CartanEps) return kron(std::vector<QMatrix>(m, definingGenerator(g, N)));
  QMatrix acc = slotMatrix(g, 1, m, N, reversed);
  for (int v = 2; v <= m; ++v) acc = sum(acc, slotMatrix(g, v, m, N, reversed));
  return acc;
}

Index wordIndex(const MultiIndex& w, int N) {
  Index r = 0;
  for (int x : w) {
    if (x < 0 || x > N) throw std::out_of_range("wordIndex: letter outside 0..N");
    r = r * (N + 1) + x;
  }
  return r;
}

QMatrix permutationMatrix(const Permutation& s, int N) {
  const RepSpace sp = tensorSpace(N, s.size());
  Triplets t;
  for (Index c = 0; c < sp.dim(); ++c) t.emplace_back(wordIndex(act(s, sp.labels[c]), N), c, QScalar(1));
  return fromTriplets(sp.dim(), sp.dim(), t);
}

QMatrix unitTensor(const MultiIndex& a, const MultiIndex& b, int N) {
  if (a.size() != b.size()) throw std::invalid_argument("unitTensor: length mismatch");
  std::vector<QMatrix> f;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < 0 || a[k] > N || b[k] < 0 || b[k] > N) throw std::out_of_range("unitTensor: index outside 0..N");
    f.push_back(matrixUnit<QScalar>(N + 1, a[k], b[k]));
  }
  return kron(f);
}

const QMatrix& Evaluator::rootVector(int i, int j, RootVariant variant) {
  const RootSymbol key{i, j, variant};
  if (auto it = roots_.find(key); it != roots_.end()) return it->second;
  if (std::max(i, j) > rep_.N) throw std::out_of_range("root vector index exceeds N");
  const AlgebraExpr e = variant == RootVariant::Hatted ? hatE(i, j) : rootVectorExpand(i, j, variant);
  return roots_.emplace(key, (*this)(e)).first->second;
}

QMatrix Evaluator::letter(const Letter& l) {
  if (const auto* g = std::get_if<GenSymbol>(&l)) return rep_.generator(*g);
  const auto& r = std::get<RootSymbol>(l);
  return rootVector(r.i, r.j, r.variant);
}

QMatrix Evaluator::word(const Word& w) {
  QMatrix acc = identity<QScalar>(rep_.dim());
  for (const auto& l : w) {
    acc = product(acc, letter(l));
    if (acc.nonZeros() == 0) break;
  }
  return acc;
}

QMatrix Evaluator::operator()(const AlgebraExpr& e) {
  QMatrix acc(rep_.dim(), rep_.dim());
  for (const auto& t : e.terms()) acc = sum(acc, scaled(word(t.word), t.coeff));
  return acc;
}

QMatrix evaluate(const AlgebraExpr& e, const Representation& rep) { return Evaluator(rep)(e); }

QMatrix evaluate(const AlgebraExpr& e, int m, int N, bool reversed) {
  return evaluate(e, tensorPowerRep(N, m, reversed));
}

QMatrix evaluateCentral(const CentralElement& c, const Representation& rep) {
  if (c.N != rep.N) throw std::invalid_argument("evaluateCentral: rank mismatch");
  Evaluator ev(rep);
  QMatrix acc(rep.dim(), rep.dim());
  for (const auto& s : c.summands) acc = sum(acc, scaled(product(ev(s.minus), ev(s.plus)), s.weight));
  return acc;
}

MultiIndex sortedWord(const Composition& mu) { return indexOf(mu); }

Index SymBasis::position(const Composition& mu) const {
  for (Index k = 0; k < dim(); ++k)
    if (labels[k] == mu) return k;
  throw std::out_of_range("SymBasis: composition not in basis");
}

SymBasis symBasis(int m, int N) {
  if (m < 1 || N < 1) throw std::invalid_argument("symBasis: need m >= 1 and N >= 1");
  SymBasis b;
  b.m = m;
  b.N = N;
  b.labels = enumerateB(m, N);
  Index rows = 1;
  for (int k = 0; k < m; ++k) rows *= N + 1;
  Triplets t;
  for (Index c = 0; c < b.dim(); ++c) {
    const MultiIndex v = sortedWord(b.labels[c]);
    b.leadRows.push_back(wordIndex(v, N));
    for (const auto& s : cosetReps(v).reps) t.emplace_back(wordIndex(act(s, v), N), c, QScalar::qPower(-inversions(s)));
  }
  b.vectors = fromTriplets(rows, b.dim(), t);
  return b;
}

QMatrix symEmbedding(const SymBasis& basis, Index auxDim) {
  return kron(identity<QScalar>(auxDim), basis.vectors);
}

QMatrix restrictToSym(const QMatrix& A, const SymBasis& basis, Index auxDim) {
  const Index d = basis.dim(), full = basis.vectors.rows();
  if (A.rows() != auxDim * full || A.cols() != auxDim * full)
    throw std::invalid_argument("restrictToSym: matrix does not act on aux (x) V^{(x)m}");
  const QMatrix B = symEmbedding(basis, auxDim);
  const QMatrix image = product(A, B);
  std::unordered_map<Index, Index> lead;
  for (Index c = 0; c < d; ++c) lead.emplace(basis.leadRows[c], c);
  Triplets t;
  for (Index r = 0; r < image.outerSize(); ++r) {
    auto it = lead.find(r % full);
    if (it == lead.end()) continue;
    for (QMatrix::InnerIterator e(image, r); e; ++e) t.emplace_back((r / full) * d + it->second, e.col(), e.value());
  }
  QMatrix R = fromTriplets(auxDim * d, auxDim * d, t);
  const QMatrix defect = pruned<QScalar>(image - QMatrix(B * R));
  if (auto w = firstNonzero(defect))
    throw NotInvariant("restrictToSym: image leaves the symmetric span at (" + std::to_string(w->row) + ", " +
                           std::to_string(w->col) + ")",
                       w->row, w->col);
  return R;
}

Representation symmetricPowerRep(int N, int m) {
  const Representation full = tensorPowerRep(N, m);
  const SymBasis b = symBasis(m, N);
  Representation r;
  r.space = symmetricSpace(N, m);
  r.N = N;
  r.ePlus.resize(N + 1);
  r.eMinus.resize(N + 1);
  for (int i = 1; i <= N; ++i) {
    r.ePlus[i] = restrictToSym(full.ePlus[i], b);
    r.eMinus[i] = restrictToSym(full.eMinus[i], b);
  }
  for (const auto& mu : b.labels) r.weights.push_back(mu);
  return r;
}

std::optional<Composition> lowered(const Composition& mu, int i) {
  if (i < 1 || i >= static_cast<int>(mu.size()) || mu[i - 1] == 0) return std::nullopt;
  Composition r = mu;
  --r[i - 1];
  ++r[i];
  return r;
}

std::optional<Composition> raised(const Composition& mu, int i) {
  if (i < 1 || i >= static_cast<int>(mu.size()) || mu[i] == 0) return std::nullopt;
  Composition r = mu;
  ++r[i - 1];
  --r[i];
  return r;
}

std::vector<QScalar> tildeBasisScalars(int m, int N) {
  const std::vector<Composition> labels = enumerateB(m, N);
  std::map<Composition, QScalar> c;
  Composition top(N + 1, 0);
  top[0] = m;
  c.emplace(top, QScalar(1));
  std::deque<Composition> queue{top};
  while (!queue.empty()) {
    const Composition mu = queue.front();
    queue.pop_front();
    for (int i = 1; i <= N; ++i) {
      auto nu = lowered(mu, i);
      if (!nu) continue;
      const QScalar value = c.at(mu) * QScalar::sPower(mu[i - 1] - mu[i] - 1);
      auto [it, inserted] = c.emplace(*nu, value);
      if (inserted) queue.push_back(*nu);
      else if (it->second != value) throw PathDependent("tildeBasisScalars: lowering paths disagree");
    }
  }
  std::vector<QScalar> out;
  for (const auto& mu : labels) out.push_back(c.at(mu));
  return out;
}

QMatrix exRepGenerator(const GenSymbol& g, int m, int N) {
  checkGeneratorIndex(g, N);
  const std::vector<Composition> labels = enumerateB(m, N);
  std::map<Composition, Index> pos;
  for (Index k = 0; k < static_cast<Index>(labels.size()); ++k) pos.emplace(labels[k], k);
  Triplets t;
  for (Index c = 0; c < static_cast<Index>(labels.size()); ++c) {
    const Composition& mu = labels[c];
    switch (g.kind) {
      case GenSymbol::Kind::EPlus:
        if (auto nu = raised(mu, g.i)) t.emplace_back(pos.at(*nu), c, qInteger(mu[g.i - 1] + 1));
        break;
      case GenSymbol::Kind::EMinus:
        if (auto nu = lowered(mu, g.i)) t.emplace_back(pos.at(*nu), c, qInteger(mu[g.i] + 1));
        break;
      case GenSymbol::Kind::CartanEps: t.emplace_back(c, c, QScalar::sPower(g.half * mu[g.i])); break;
    }
  }
  return fromTriplets(static_cast<Index>(labels.size()), static_cast<Index>(labels.size()), t);
}

Representation exRep(int N, int m) {
  if (m < 1 || N < 1) throw std::invalid_argument("exRep: need m >= 1 and N >= 1");
  Representation r;
  r.space = symmetricSpace(N, m);
  r.N = N;
  r.ePlus.resize(N + 1);
  r.eMinus.resize(N + 1);
  for (int i = 1; i <= N; ++i) {
    r.ePlus[i] = exRepGenerator(GenSymbol::ePlus(i), m, N);
    r.eMinus[i] = exRepGenerator(GenSymbol::eMinus(i), m, N);
  }
  for (const auto& mu : r.space.labels) r.weights.push_back(mu);
  return r;
}

QMatrix coreOperator(const MultiIndex& j, const MultiIndex& i, int N) {
  if (i.size() != j.size()) throw std::invalid_argument("coreOperator: length mismatch");
  if (!isWeaklyIncreasing(i) || !isWeaklyIncreasing(j)) throw std::invalid_argument("coreOperator: indices must be sorted");
  Index n = 1;
  for (std::size_t k = 0; k < i.size(); ++k) n *= N + 1;
  QMatrix acc(n, n);
  for (const auto& tau : cosetReps(j).reps) {
    const int d = decompose(tau, i).d;
    acc = sum(acc, scaled(unitTensor(act(tau, j), act(tau, i), N), QScalar::qPower(-d)));
  }
  return acc;
}

}  // namespace uqc
