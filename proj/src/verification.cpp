#include "uqcentral/verification.hpp"

#include <algorithm>

namespace uqc {

namespace {

Json entryJson(const Entry<QScalar>& e) {
  return Json{{"row", e.row}, {"col", e.col}, {"value", toText(e.value)}};
}

Json genName(const GenSymbol& g) { return toText(Letter{g}); }

QMatrix sum(const QMatrix& a, const QMatrix& b) { return pruned<QScalar>(a + b); }
QMatrix diff(const QMatrix& a, const QMatrix& b) { return pruned<QScalar>(a - b); }
QMatrix mul(const QMatrix& a, const QMatrix& b) { return product(a, b); }

const char* signName(int s) { return s > 0 ? "+" : "-"; }

QMatrix chevalley(const Representation& r, int sign, int i) { return sign > 0 ? r.ePlus[i] : r.eMinus[i]; }

int cartanEntry(int i, int j) {
  if (i == j) return 2;
  if (std::abs(i - j) == 1) return -1;
  return 0;
}

int pad(const MultiIndex& y, int p, int i) {
  auto h = [i](int level) { return (level == i - 1 ? 1 : 0) - (level == i ? 1 : 0); };
  int e = 0;
  for (int k = 1; k <= static_cast<int>(y.size()); ++k) {
    if (k < p) e += h(y[k - 1]);
    if (k > p) e -= h(y[k - 1]);
  }
  return e;
}

}  // namespace

Json toJson(const VerificationReport& r) {
  Json j{{"check", r.check}, {"params", r.params}, {"pass", r.pass}, {"witness", r.witness}};
  if (!r.info.is_null()) j["info"] = r.info;
  return j;
}

std::string toJsonLine(const VerificationReport& r) { return toJson(r).dump(); }

bool allPass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

void sortReports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
}

VerificationReport summarize(const std::string& check, Json params, const std::vector<VerificationReport>& parts) {
  VerificationReport r{check, std::move(params)};
  for (const auto& p : parts)
    if (!p.pass) {
      r.pass = false;
      r.witness = Json{{"check", p.check}, {"params", p.params}, {"witness", p.witness}};
      break;
    }
  r.info = Json{{"instances", parts.size()}};
  return r;
}

VerificationReport matrixCheck(const std::string& check, Json params, const QMatrix& lhs, const QMatrix& rhs) {
  VerificationReport r{check, std::move(params)};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.pass = false;
    r.witness = Json{{"shape", "mismatch"}};
    return r;
  }
  if (auto w = firstNonzero<QScalar>(diff(lhs, rhs))) {
    r.pass = false;
    r.witness = entryJson(*w);
  }
  return r;
}

VerificationReport checkCentrality(const QMatrix& C, const Representation& W, Json params) {
  VerificationReport r{"centrality", std::move(params)};
  for (const auto& [g, m] : W.generators())
    if (auto w = firstNonzero(commutator(C, m))) {
      r.pass = false;
      r.witness = entryJson(*w);
      r.witness["generator"] = genName(g);
      break;
    }
  return r;
}

QScalar checkScalar(const QMatrix& C) {
  const ScalarMatch<QScalar> s = scalarMultipleOfIdentity(C);
  if (s.value) return *s.value;
  if (s.witness) throw NotScalar("checkScalar: not a multiple of the identity", *s.witness);
  throw NotScalar("checkScalar: matrix is empty or not square", Entry<QScalar>{0, 0, QScalar{}});
}

WeightConvention parseWeightConvention(const std::string& s) {
  if (s == "highest") return WeightConvention::Highest;
  if (s == "lowest") return WeightConvention::Lowest;
  throw std::invalid_argument("unknown weight convention: " + s);
}

std::string name(WeightConvention c) { return c == WeightConvention::Highest ? "highest" : "lowest"; }

WeightVector longestWeylImage(const WeightVector& w) { return WeightVector(w.rbegin(), w.rend()); }

WeightVector conventionWeight(const WeightVector& highest, WeightConvention c) {
  return c == WeightConvention::Lowest ? longestWeylImage(highest) : highest;
}

WeightVector symmetricPowerWeight(int N, int k, WeightConvention c) {
  WeightVector w(N + 1, 0);
  w[0] = k;
  return conventionWeight(w, c);
}

QScalar eigenvalueFormula(int m, int N, const WeightVector& lambda) {
  if (static_cast<int>(lambda.size()) != N + 1) throw std::invalid_argument("eigenvalueFormula: Lambda needs N+1 entries");
  QScalar acc;
  for (const auto& i : enumerateW(m, N)) {
    const Composition mu = muOf(i, N);
    int e = -N * m;
    for (int v : i) e += 2 * v;
    for (int k = 0; k <= N; ++k) e += 2 * mu[k] * lambda[k];
    acc += QScalar::qPower(e);
  }
  return acc * QScalar::invQMinusQinvPower(2 * m);
}

QScalar highestWeightEigenvalue(int m, int N, const WeightVector& lambda) {
  if (static_cast<int>(lambda.size()) != N + 1) throw std::invalid_argument("Lambda needs N+1 entries");
  QScalar acc;
  for (const auto& mu : enumerateB(m, N)) {
    int e = 0;
    for (int k = 0; k <= N; ++k) e += (N - 2 * k) * mu[k] + 2 * lambda[k] * mu[k];
    acc += QScalar::qPower(e);
  }
  return acc;
}

std::vector<VerificationReport> uqglRelations(const Representation& rep) {
  std::vector<VerificationReport> out;
  const int N = rep.N;
  const Json base{{"rep", rep.space.describe()}, {"N", N}};
  const QMatrix one = identity<QScalar>(rep.dim());
  auto params = [&](Json extra) {
    Json p = base;
    for (auto& [k, v] : extra.items()) p[k] = v;
    return p;
  };
  for (int i = 0; i <= N; ++i)
    out.push_back(matrixCheck("uqgl.cartan_inverse", params({{"i", i}}), mul(rep.cartan(i, 1), rep.cartan(i, -1)), one));
  for (int i = 1; i <= N; ++i)
    out.push_back(matrixCheck("uqgl.h_from_eps", params({{"i", i}}), rep.cartanH(i, 2),
                              mul(rep.cartan(i - 1, 2), rep.cartan(i, -2))));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int s : {1, -1}) {
        const QMatrix e = chevalley(rep, s, j);
        out.push_back(matrixCheck("uqgl.cartan_conjugation", params({{"i", i}, {"j", j}, {"sign", signName(s)}}),
                                  mul(mul(rep.cartanH(i, 1), e), rep.cartanH(i, -1)),
                                  scaled(e, QScalar::sPower(s * cartanEntry(i, j)))));
      }
  for (int i = 0; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int s : {1, -1}) {
        const QMatrix e = chevalley(rep, s, j);
        const int h = (i == j - 1 ? 1 : 0) - (i == j ? 1 : 0);
        out.push_back(matrixCheck("uqgl.eps_conjugation", params({{"i", i}, {"j", j}, {"sign", signName(s)}}),
                                  mul(mul(rep.cartan(i, 1), e), rep.cartan(i, -1)), scaled(e, QScalar::sPower(s * h))));
      }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      QMatrix rhs(rep.dim(), rep.dim());
      if (i == j)
        rhs = scaled(diff(rep.cartanH(i, 2), rep.cartanH(i, -2)), QScalar::invQMinusQinvPower(1));
      out.push_back(matrixCheck("uqgl.commutator", params({{"i", i}, {"j", j}}), commutator(rep.ePlus[i], rep.eMinus[j]), rhs));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 2; j <= N; ++j)
      for (int s : {1, -1})
        out.push_back(matrixCheck("uqgl.far_commute", params({{"i", i}, {"j", j}, {"sign", signName(s)}}),
                                  commutator(chevalley(rep, s, i), chevalley(rep, s, j)), QMatrix(rep.dim(), rep.dim())));
  const QScalar qq = QScalar::qPower(1) + QScalar::qPower(-1);
  for (int i = 1; i <= N; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > N) continue;
      for (int s : {1, -1}) {
        const QMatrix a = chevalley(rep, s, i), b = chevalley(rep, s, j);
        const QMatrix aa = mul(a, a);
        const QMatrix serre = diff(sum(mul(aa, b), mul(b, aa)), scaled(mul(mul(a, b), a), qq));
        out.push_back(matrixCheck("uqgl.serre", params({{"i", i}, {"j", j}, {"sign", signName(s)}}), serre,
                                  QMatrix(rep.dim(), rep.dim())));
      }
    }
  QMatrix total = one;
  for (int i = 0; i <= N; ++i) total = mul(total, rep.cartan(i, 2));
  VerificationReport c = checkCentrality(total, rep, base);
  c.check = "uqgl.total_eps_central";
  out.push_back(c);
  return out;
}

std::vector<VerificationReport> relationSuite(int N, int k) {
  const Representation rep = tensorPowerRep(N, k);
  std::vector<VerificationReport> out = uqglRelations(rep);
  Evaluator ev(rep);
  auto E = [&](int a, int b) -> const QMatrix& { return ev.rootVector(a, b, RootVariant::Modified); };
  auto H = [&](int a, int b) -> const QMatrix& { return ev.rootVector(a, b, RootVariant::Hatted); };
  const QScalar q = QScalar::qPower(1), qi = QScalar::qPower(-1), gap = q - qi;
  const Json base{{"rep", rep.space.describe()}, {"N", N}};
  auto params = [&](int i, int j, int l, int kk) {
    Json p = base;
    p["i"] = i;
    p["j"] = j;
    p["l"] = l;
    p["k"] = kk;
    return p;
  };
  for (int i = 0; i <= N; ++i)
    for (int l = i + 1; l <= N; ++l)
      for (int j = 0; j <= N; ++j)
        for (int kk = j + 1; kk <= N; ++kk) {
          std::optional<std::pair<QMatrix, QMatrix>> c, c1;
          if ((i < j && j < kk && kk < l) || (l < j)) {
            c.emplace(mul(E(i, l), E(j, kk)), mul(E(j, kk), E(i, l)));
            c1.emplace(mul(E(l, i), E(kk, j)), mul(E(kk, j), E(l, i)));
          } else if (i == j && kk < l) {
            c.emplace(mul(E(i, l), E(j, kk)), scaled(mul(E(j, kk), E(i, l)), qi));
            c1.emplace(mul(E(l, i), E(kk, j)), scaled(mul(E(kk, j), E(l, i)), q));
          } else if (i < j && j < kk && kk == l) {
            c.emplace(mul(E(i, l), E(j, kk)), scaled(mul(E(j, kk), E(i, l)), q));
            c1.emplace(mul(E(l, i), E(kk, j)), scaled(mul(E(kk, j), E(l, i)), qi));
          } else if (i < j && j < l && l < kk) {
            c.emplace(mul(E(i, l), E(j, kk)), sum(mul(E(j, kk), E(i, l)), scaled(mul(E(j, l), E(i, kk)), gap)));
            c1.emplace(mul(E(l, i), E(kk, j)), diff(mul(E(kk, j), E(l, i)), scaled(mul(E(l, j), E(kk, i)), gap)));
            out.push_back(matrixCheck("comm2", params(i, j, l, kk), sum(mul(H(i, l), H(j, kk)), scaled(mul(H(i, kk), H(j, l)), qi)),
                                      sum(mul(H(j, kk), H(i, l)), scaled(mul(H(j, l), H(i, kk)), q))));
            out.push_back(matrixCheck("comm3", params(i, j, l, kk), sum(mul(H(l, i), H(kk, j)), scaled(mul(H(kk, i), H(l, j)), q)),
                                      sum(mul(H(kk, j), H(l, i)), scaled(mul(H(l, j), H(kk, i)), qi))));
          }
          if (c) out.push_back(matrixCheck("comm", params(i, j, l, kk), c->first, c->second));
          if (c1) out.push_back(matrixCheck("comm1", params(i, j, l, kk), c1->first, c1->second));
        }
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (std::abs(i - j) < 2) continue;
      for (RootVariant v : {RootVariant::Modified, RootVariant::Primed}) {
        const QMatrix& ref = ev.rootVector(i, j, v);
        for (int p = std::min(i, j) + 1; p < std::max(i, j); ++p) {
          Json prm = base;
          prm["i"] = i;
          prm["j"] = j;
          prm["pivot"] = p;
          prm["variant"] = v == RootVariant::Primed ? "primed" : "modified";
          out.push_back(matrixCheck("pivot_independence", prm, ev(rootVectorExpand(i, j, v, p)), ref));
        }
      }
    }
  return out;
}

std::vector<VerificationReport> wellDefinednessSuite(int m, int N, int k) {
  const Representation rep = tensorPowerRep(N, k);
  Evaluator ev(rep);
  std::vector<VerificationReport> out;
  const auto idx = enumerateW(m, N);
  const QMatrix zero(rep.dim(), rep.dim());
  auto hatWord = [&](const MultiIndex& a, const MultiIndex& b, Sign sign) -> std::optional<QMatrix> {
    auto w = hatProduct(a, b, sign);
    if (!w) return std::nullopt;
    return ev.word(*w);
  };
  for (const auto& A : idx)
    for (const auto& B : idx)
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const int s = sign == Sign::Plus ? 1 : -1;
        const auto DA = cosetReps(A).reps, DB = cosetReps(B).reps;
        for (int part : {1, 2}) {
          const auto& outer = part == 1 ? DA : DB;
          const auto& inner = part == 1 ? DB : DA;
          std::optional<QMatrix> first;
          VerificationReport r{"prop1", Json{{"rep", rep.space.describe()}, {"N", N}, {"A", A}, {"B", B},
                                             {"sign", signName(s)}, {"part", part}}};
          for (const auto& o : outer) {
            QMatrix acc = zero;
            for (const auto& in : inner) {
              const Permutation& tau = part == 1 ? o : in;
              const Permutation& sigma = part == 1 ? in : o;
              auto M = hatWord(act(tau, A), act(sigma, B), sign);
              if (!M) continue;
              const int e = part == 1 ? s * (inversions(sigma) - inversions(tau)) : s * (inversions(tau) - inversions(sigma));
              acc = sum(acc, scaled(*M, QScalar::qPower(e)));
            }
            if (!first) {
              first = acc;
            } else if (auto w = firstNonzero<QScalar>(diff(acc, *first))) {
              r.pass = false;
              r.witness = entryJson(*w);
              r.witness["representative"] = toText(o);
              break;
            }
          }
          out.push_back(r);
        }
      }
  return out;
}

std::vector<VerificationReport> intertwiningSuite(int m, int N) {
  const Representation V = definingRep(N), S = symmetricPowerRep(N, m);
  const BipartiteOperator R = fusedR(V, m), RT = fusedR(V, m, true);
  std::vector<VerificationReport> out;
  for (const auto& [g, unused] : V.generators()) {
    const QMatrix d = bipartiteAction(g, V, S, false), db = bipartiteAction(g, V, S, true);
    const Json p{{"m", m}, {"N", N}, {"W", "tensor:1"}, {"generator", genName(g)}};
    out.push_back(matrixCheck("intertwining.R", p, mul(R.matrix, d), mul(db, R.matrix)));
    out.push_back(matrixCheck("intertwining.RT", p, mul(RT.matrix, db), mul(d, RT.matrix)));
  }
  return out;
}

std::vector<VerificationReport> basisSuite(int m, int N) {
  std::vector<VerificationReport> out;
  const Json p{{"m", m}, {"N", N}};
  const SymBasis b = symBasis(m, N);
  auto col = [&](const Composition& mu) { return QMatrix(b.vectors.col(b.position(mu))); };

  std::vector<VerificationReport> parts;
  for (int i = 1; i <= N; ++i) {
    const QMatrix f = coproductMatrix(GenSymbol::eMinus(i), m, N);
    for (const auto& mu : b.labels) {
      QMatrix rhs(b.vectors.rows(), 1);
      if (auto nu = lowered(mu, i)) {
        QScalar series;
        for (int k = 0; k <= mu[i]; ++k) series += QScalar::qPower(-2 * k);
        rhs = scaled(col(*nu), QScalar::sPower(mu[i - 1] + mu[i] - 1) * series);
      }
      parts.push_back(matrixCheck("lowering", Json{{"i", i}, {"mu", mu}}, mul(f, col(mu)), rhs));
    }
  }
  out.push_back(summarize("basis.lowering", p, parts));

  try {
    const Representation sym = symmetricPowerRep(N, m), ex = exRep(N, m);
    std::vector<QScalar> c = tildeBasisScalars(m, N), ci;
    for (const auto& x : c) ci.push_back(x.inverseMonomial());
    const QMatrix C = diagonal(c), Ci = diagonal(ci);
    std::vector<VerificationReport> raise, lower, cartan;
    for (int i = 1; i <= N; ++i) {
      raise.push_back(matrixCheck("raise", Json{{"i", i}}, mul(mul(Ci, sym.ePlus[i]), C), ex.ePlus[i]));
      lower.push_back(matrixCheck("lower", Json{{"i", i}}, mul(mul(Ci, sym.eMinus[i]), C), ex.eMinus[i]));
      for (int h : {1, -1})
        cartan.push_back(matrixCheck("cartan", Json{{"i", i}, {"sign", signName(h)}}, mul(mul(Ci, sym.cartanH(i, h)), C),
                                     ex.cartanH(i, h)));
    }
    out.push_back(summarize("basis.normalized_raise", p, raise));
    out.push_back(summarize("basis.normalized_lower", p, lower));
    out.push_back(summarize("basis.normalized_cartan", p, cartan));
    out.push_back(summarize("basis.uqgl_sym", p, uqglRelations(sym)));
    out.push_back(summarize("basis.uqgl_normalized", p, uqglRelations(ex)));
  } catch (const std::exception& e) {
    out.push_back(VerificationReport{"basis.normalized", p, false, Json{{"error", e.what()}}});
  }
  out.push_back(summarize("basis.uqgl_tensor", p, uqglRelations(tensorPowerRep(N, m))));

  parts.clear();
  int literalFailures = 0;
  for (const auto& s : allPermutations(m)) {
    const QMatrix P = permutationMatrix(s, N);
    for (int a = 1; a <= m; ++a) {
      const int target = s.inverse()(a);
      for (const auto& mu : b.labels) {
        const MultiIndex v = sortedWord(mu), sv = act(s, v);
        QMatrix ev(b.vectors.rows(), 1), esv(b.vectors.rows(), 1);
        ev.insert(wordIndex(v, N), 0) = QScalar(1);
        esv.insert(wordIndex(sv, N), 0) = QScalar(1);
        for (int i = 1; i <= N; ++i)
          for (int sg : {1, -1}) {
            const GenSymbol g = sg > 0 ? GenSymbol::ePlus(i) : GenSymbol::eMinus(i);
            const QMatrix lhs = mul(P, mul(slotMatrix(g, a, m, N), ev));
            const QMatrix plain = mul(slotMatrix(g, target, m, N), esv);
            if (!equal(lhs, plain)) ++literalFailures;
            const QMatrix rhs = scaled(plain, QScalar::sPower(pad(v, a, i) - pad(sv, target, i)));
            parts.push_back(matrixCheck("permutation", Json{{"sigma", toText(s)}, {"a", a}, {"mu", mu}, {"i", i},
                                                            {"sign", signName(sg)}},
                                        lhs, rhs));
          }
      }
    }
  }
  VerificationReport brief = summarize("basis.permutation_identity", p, parts);
  brief.info["unpadded_failures"] = literalFailures;
  out.push_back(brief);

  std::vector<VerificationReport> part1, part2;
  for (const auto& i : enumerateW(m, N))
    for (const auto& j : enumerateW(m, N)) {
      part2.push_back(matrixCheck("core2", Json{{"i", i}, {"j", j}}, mul(coreOperator(j, i, N), col(muOf(i, N))),
                                  col(muOf(j, N))));
      for (const auto& zeta : cosetReps(j).reps) {
        const auto Di = cosetReps(i).reps;
        for (const auto& tau : Di)
          for (const auto& sigma : Di) {
            if (!(tau < sigma)) continue;
            const QMatrix d = diff(scaled(unitTensor(act(zeta, j), act(tau, i), N), QScalar::qPower(inversions(tau))),
                                   scaled(unitTensor(act(zeta, j), act(sigma, i), N), QScalar::qPower(inversions(sigma))));
            part1.push_back(matrixCheck("core1", Json{{"i", i}, {"j", j}, {"zeta", toText(zeta)}, {"tau", toText(tau)},
                                                      {"sigma", toText(sigma)}},
                                        mul(d, b.vectors), QMatrix(b.vectors.rows(), b.dim())));
          }
      }
    }
  out.push_back(summarize("basis.core_part1", p, part1));
  out.push_back(summarize("basis.core_part2", p, part2));
  return out;
}

std::vector<VerificationReport> coreExamples() {
  auto M = [](const MultiIndex& sorted, int N) {
    const SymBasis b = symBasis(static_cast<int>(sorted.size()), N);
    return QMatrix(b.vectors.col(b.position(muOf(sorted, N))));
  };
  std::vector<VerificationReport> out;
  const QMatrix a = sum(unitTensor({1, 2}, {0, 0}, 2), scaled(unitTensor({2, 1}, {0, 0}, 2), QScalar::qPower(-1)));
  out.push_back(matrixCheck("core_example", Json{{"example", 1}, {"N", 2}}, mul(a, M({0, 0}, 2)), M({1, 2}, 2)));
  out.push_back(matrixCheck("core_example", Json{{"example", 2}, {"N", 2}}, mul(unitTensor({2, 2}, {0, 1}, 2), M({0, 1}, 2)),
                            M({2, 2}, 2)));
  const QMatrix c = sum(unitTensor({2, 3}, {0, 1}, 3), unitTensor({3, 2}, {1, 0}, 3));
  out.push_back(matrixCheck("core_example", Json{{"example", 3}, {"N", 3}}, mul(c, M({0, 1}, 3)), M({2, 3}, 3)));
  return out;
}

VerificationReport transpositionPathCheck(const MultiIndex& A) {
  VerificationReport r{"transposition_path", Json{{"A", A}}};
  const CosetSystem cs = cosetReps(A);
  std::size_t paths = 0;
  for (const auto& to : cs.reps)
    for (const auto& from : cs.reps) {
      const auto path = transpositionPath(to, from, A);
      ++paths;
      bool ok = !path.empty() && path.front() == from && path.back() == to;
      for (std::size_t s = 0; ok && s < path.size(); ++s) {
        ok = cs.contains(path[s]);
        if (ok && s + 1 < path.size()) ok = isTransposition(path[s + 1] * path[s].inverse());
      }
      if (!ok) {
        r.pass = false;
        r.witness = Json{{"to", toText(to)}, {"from", toText(from)}};
        return r;
      }
    }
  r.info = Json{{"paths", paths}};
  return r;
}

VerificationReport weightSumCheck(int m, int N) {
  VerificationReport r{"weight_sum", Json{{"m", m}, {"N", N}}};
  for (const auto& i : enumerateW(m, N)) {
    const Composition mu = muOf(i, N);
    int lhs = 0, rhs = -N * m;
    for (int k = 0; k <= N; ++k) lhs += (2 * k - N) * mu[k];
    for (int v : i) rhs += 2 * v;
    if (lhs != rhs) {
      r.pass = false;
      r.witness = Json{{"i", i}, {"lhs", lhs}, {"rhs", rhs}};
      break;
    }
  }
  return r;
}

VerificationReport eigenvalueCheck(int m, int N, int k, WeightConvention c) {
  VerificationReport r{"eigenvalue", Json{{"m", m}, {"N", N}, {"rep", "sym:" + std::to_string(k)},
                                          {"weight_convention", name(c)}}};
  const QMatrix C = evaluateCentral(centralElement(m, N), symmetricPowerRep(N, k));
  const QScalar predicted = eigenvalueFormula(m, N, symmetricPowerWeight(N, k, c));
  try {
    const QScalar actual = checkScalar(C);
    r.pass = actual == predicted;
    r.info = Json{{"scalar", toText(actual)}, {"formula", toText(predicted)}};
    if (!r.pass) r.witness = r.info;
  } catch (const NotScalar& e) {
    r.pass = false;
    r.witness = entryJson(e.witness);
  }
  return r;
}

VerificationReport eigenvalueBridgeCheck(int m, int N, const WeightVector& lambda) {
  VerificationReport r{"eigenvalue_bridge", Json{{"m", m}, {"N", N}, {"Lambda", lambda}}};
  const QScalar lhs = eigenvalueFormula(m, N, longestWeylImage(lambda));
  const QScalar rhs = QScalar::invQMinusQinvPower(2 * m) * highestWeightEigenvalue(m, N, lambda);
  r.pass = lhs == rhs;
  const QScalar printed = QScalar::invQMinusQinvPower(2 * m) * QScalar::qPower(-N * m) * highestWeightEigenvalue(m, N, lambda);
  r.info = Json{{"with_extra_q^{-Nm}", eigenvalueFormula(m, N, lambda) == printed}};
  if (!r.pass) r.witness = Json{{"lhs", toText(lhs)}, {"rhs", toText(rhs)}};
  return r;
}

VerificationReport oracleCheck(const Representation& W, int m) {
  const QMatrix a = drinfeldCentral(W, m), b = evaluateCentral(centralElement(m, W.N), W);
  return matrixCheck("oracle", Json{{"m", m}, {"N", W.N}, {"rep", W.space.describe()}}, a, b);
}

}  // namespace uqc
