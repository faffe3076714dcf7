#include "uqcentral/expressions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uqcentral/serialization.hpp"

namespace uqc {

AlgebraExpr AlgebraExpr::monomial(Word w, const QScalar& c) {
  AlgebraExpr e;
  e.add(w, c);
  return e;
}

void AlgebraExpr::add(const Word& w, const QScalar& c) {
  if (c.isZero()) return;
  auto it = index_.find(w);
  if (it == index_.end()) {
    index_.emplace(w, terms_.size());
    terms_.push_back({c, w});
    return;
  }
  const std::size_t k = it->second;
  terms_[k].coeff += c;
  if (!terms_[k].coeff.isZero()) return;
  terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(k));
  index_.erase(it);
  for (auto& [word, pos] : index_)
    if (pos > k) --pos;
}

QScalar AlgebraExpr::coeff(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? QScalar(0) : terms_[it->second].coeff;
}

AlgebraExpr& AlgebraExpr::operator+=(const AlgebraExpr& o) {
  for (const auto& t : o.terms_) add(t.word, t.coeff);
  return *this;
}

AlgebraExpr& AlgebraExpr::operator-=(const AlgebraExpr& o) {
  for (const auto& t : o.terms_) add(t.word, -t.coeff);
  return *this;
}

AlgebraExpr& AlgebraExpr::operator*=(const QScalar& c) {
  if (c.isZero()) return *this = AlgebraExpr{};
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

AlgebraExpr operator*(const AlgebraExpr& a, const AlgebraExpr& b) {
  AlgebraExpr r;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      r.add(w, ta.coeff * tb.coeff);
    }
  return r;
}

bool operator==(const AlgebraExpr& a, const AlgebraExpr& b) {
  if (a.size() != b.size()) return false;
  for (const auto& t : a.terms_)
    if (b.coeff(t.word) != t.coeff) return false;
  return true;
}

namespace {

AlgebraExpr expandRecursive(int i, int j, RootVariant variant, std::optional<int> pivot) {
  if (j == i + 1) return AlgebraExpr::letter(GenSymbol::ePlus(j));
  if (j == i - 1) return AlgebraExpr::letter(GenSymbol::eMinus(i));
  const int k = pivot ? *pivot : (i < j ? j - 1 : j + 1);
  if (!(std::min(i, j) < k && k < std::max(i, j)))
    throw std::invalid_argument("rootVectorExpand: pivot must lie strictly between i and j");
  QScalar c = QScalar::qPower(-1);
  if (variant == RootVariant::Primed && i < j) c = QScalar::qPower(1);
  AlgebraExpr a = expandRecursive(i, k, variant, std::nullopt);
  AlgebraExpr b = expandRecursive(k, j, variant, std::nullopt);
  return a * b - c * (b * a);
}

}  // namespace

AlgebraExpr rootVectorExpand(int i, int j, RootVariant variant) {
  if (i == j) throw std::invalid_argument("rootVectorExpand: diagonal root vector");
  if (i < 0 || j < 0) throw std::invalid_argument("rootVectorExpand: negative index");
  if (variant == RootVariant::Hatted) return hatE(i, j);
  return expandRecursive(i, j, variant, std::nullopt);
}

AlgebraExpr rootVectorExpand(int i, int j, RootVariant variant, int pivot) {
  if (i == j) throw std::invalid_argument("rootVectorExpand: diagonal root vector");
  if (variant == RootVariant::Hatted) throw std::invalid_argument("rootVectorExpand: use hatE");
  if (std::abs(i - j) == 1) return expandRecursive(i, j, variant, std::nullopt);
  return expandRecursive(i, j, variant, pivot);
}

AlgebraExpr hatE(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("hatE: negative index");
  if (i == j) return AlgebraExpr::monomial({GenSymbol::eps(i, 2)}, QScalar::invQMinusQinvPower(1));
  AlgebraExpr pre = AlgebraExpr::monomial({GenSymbol::eps(i, 1), GenSymbol::eps(j, 1)}, QScalar::sPower(-1));
  return pre * rootVectorExpand(i, j, RootVariant::Modified);
}

AlgebraExpr expandRootSymbols(const AlgebraExpr& e) {
  AlgebraExpr out;
  for (const auto& t : e.terms()) {
    AlgebraExpr acc = AlgebraExpr::scalar(t.coeff);
    for (const auto& l : t.word) {
      if (const auto* g = std::get_if<GenSymbol>(&l)) {
        acc = acc * AlgebraExpr::letter(*g);
      } else {
        const auto& r = std::get<RootSymbol>(l);
        acc = acc * (r.variant == RootVariant::Hatted ? hatE(r.i, r.j) : rootVectorExpand(r.i, r.j, r.variant));
      }
    }
    out += acc;
  }
  return out;
}

AlgebraExpr cartanToFront(const AlgebraExpr& e) {
  AlgebraExpr expanded = expandRootSymbols(e);
  AlgebraExpr out;
  for (const auto& t : expanded.terms()) {
    std::map<int, int> cartan;
    Word rest;
    int sShift = 0;
    for (const auto& l : t.word) {
      const auto& g = std::get<GenSymbol>(l);
      if (g.kind != GenSymbol::Kind::CartanEps) {
        rest.push_back(g);
        continue;
      }
      // Moving q^{h eps_i/2} left past e_{+-,k} costs q^{-+h(d_{i,k-1} - d_{i,k})/2}.
      for (const auto& pl : rest) {
        const auto& p = std::get<GenSymbol>(pl);
        const int delta = (g.i == p.i - 1 ? 1 : 0) - (g.i == p.i ? 1 : 0);
        sShift += (p.kind == GenSymbol::Kind::EPlus ? -1 : 1) * g.half * delta;
      }
      cartan[g.i] += g.half;
    }
    Word w;
    for (const auto& [i, h] : cartan)
      if (h != 0) w.push_back(GenSymbol::eps(i, h));
    w.insert(w.end(), rest.begin(), rest.end());
    out.add(w, t.coeff * QScalar::sPower(sShift));
  }
  return out;
}

std::optional<Word> hatProduct(const MultiIndex& a, const MultiIndex& b, Sign sign) {
  if (a.size() != b.size()) throw std::invalid_argument("hatProduct: length mismatch");
  Word w;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int d = sign == Sign::Plus ? a[k] - b[k] : b[k] - a[k];
    if (d < 0) return std::nullopt;
    w.push_back(RootSymbol::hat(a[k], b[k]));
  }
  return w;
}

AlgebraExpr tildeE(const MultiIndex& i, const MultiIndex& j, Sign sign, TildeForm form,
                   const std::optional<Permutation>& tau) {
  if (i.size() != j.size()) throw std::invalid_argument("tildeE: length mismatch");
  if (!isWeaklyIncreasing(i) || !isWeaklyIncreasing(j)) throw std::invalid_argument("tildeE: indices must be sorted");
  const int m = static_cast<int>(i.size());
  const Permutation t = tau ? *tau : Permutation::identity(m);
  if (!cosetReps(j).contains(t)) throw std::invalid_argument("tildeE: tau not in D_j");
  const MultiIndex tj = act(t, j);
  const MultiIndex b(tj.rbegin(), tj.rend());
  AlgebraExpr out;
  for (const auto& zeta : cosetReps(i).reps) {
    const MultiIndex zi = act(zeta, i);
    const MultiIndex a(zi.rbegin(), zi.rend());
    auto w = hatProduct(a, b, sign);
    if (!w) continue;
    int e = 0;
    if (form == TildeForm::Literal) {
      e = inversions(t) - inversions(zeta);
      if (sign == Sign::Minus) e = -e;
    } else if (sign == Sign::Plus) {
      e = wordInversions(tj) - wordInversions(zi);
    } else {
      e = wordInversions(b) - wordInversions(a);
    }
    out.add(*w, QScalar::qPower(e));
  }
  return out;
}

AlgebraExpr CentralElement::expr() const {
  AlgebraExpr out;
  for (const auto& s : summands) out += s.weight * (s.minus * s.plus);
  return out;
}

CentralElement centralElement(int m, int N, TildeForm form) {
  if (m < 1 || N < 1) throw std::invalid_argument("centralElement: need m >= 1 and N >= 1");
  CentralElement c;
  c.m = m;
  c.N = N;
  const auto W = enumerateW(m, N);
  for (const auto& i : W)
    for (const auto& j : W) {
      AlgebraExpr plus = tildeE(i, j, Sign::Plus, form);
      if (plus.isZero()) continue;
      AlgebraExpr minus = tildeE(j, i, Sign::Minus, form);
      if (minus.isZero()) continue;
      int s = 0;
      for (int v : i) s += v;
      c.summands.push_back({i, j, QScalar::qPower(2 * s - N * m), std::move(minus), std::move(plus)});
    }
  return c;
}

int termCount(const CentralElement& c) { return static_cast<int>(c.summands.size()); }

TermCensus termCensus(const CentralElement& c) {
  if (c.m != 2) throw std::invalid_argument("termCensus: defined for m = 2");
  TermCensus t;
  t.total = termCount(c);
  std::set<std::pair<MultiIndex, MultiIndex>> present;
  for (const auto& s : c.summands) {
    present.emplace(s.i, s.j);
    const bool ci = s.i[0] == s.i[1], cj = s.j[0] == s.j[1];
    if (ci && cj) {
      ++t.bothConstant;
    } else if (ci || cj) {
      ++t.oneConstant;
    } else if (s.i[0] < s.j[1]) {
      ++t.interleaved;
    } else {
      ++t.separated;
    }
  }
  const auto W = enumerateW(2, c.N);
  for (std::size_t a = 0; a < W.size(); ++a)
    for (std::size_t b = a + 1; b < W.size(); ++b)
      if (!present.count({W[a], W[b]}) && !present.count({W[b], W[a]})) t.vanishingSets.emplace_back(W[a], W[b]);
  return t;
}

Format parseFormat(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unsupported format: " + s);
}

namespace {

std::string indexPair(int i, int j) {
  if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

std::string epsExponent(int i, int half, bool latex) {
  const std::string eps = latex ? "\\epsilon_{" + std::to_string(i) + "}" : "ε_" + std::to_string(i);
  std::string sign = half < 0 ? "-" : "";
  const int h = std::abs(half);
  if (h % 2 == 0) return sign + (h == 2 ? "" : std::to_string(h / 2)) + eps;
  return sign + (h == 1 ? "" : std::to_string(h)) + eps + "/2";
}

std::string wordText(const Word& w, bool latex) {
  std::string s;
  for (const auto& l : w) s += latex ? toLatex(l) : toText(l);
  return s;
}

bool isOne(const LaurentPoly& p) { return p == LaurentPoly(1); }

std::string termText(const AlgebraExpr::Term& t) {
  const LaurentPoly& num = t.coeff.numerator();
  const int k = t.coeff.denomPower();
  if (t.word.empty()) return toText(t.coeff);
  std::string lead;
  if (isOne(num)) {
    lead = "";
  } else if (num == LaurentPoly(-1)) {
    lead = "-";
  } else if (num.isMonomial()) {
    lead = toText(num) + " ";
  } else {
    lead = "(" + toText(num) + ")";
  }
  std::string s = lead + wordText(t.word, false);
  if (k > 0) s += "/(q-q^{-1})" + (k > 1 ? "^{" + std::to_string(k) + "}" : std::string());
  return s;
}

std::string termLatex(const AlgebraExpr::Term& t) {
  if (t.word.empty()) return toLatex(t.coeff);
  std::string c;
  if (t.coeff == QScalar(1)) {
    c = "";
  } else if (t.coeff == QScalar(-1)) {
    c = "-";
  } else if (t.coeff.denomPower() == 0 && !t.coeff.numerator().isMonomial()) {
    c = "\\left(" + toLatex(t.coeff) + "\\right) ";
  } else {
    c = toLatex(t.coeff) + " ";
  }
  return c + wordText(t.word, true);
}

template <typename F>
std::string joinTerms(const AlgebraExpr& e, F termFn) {
  if (e.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    std::string s = termFn(t);
    if (first) {
      out = s;
    } else if (!s.empty() && s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string toText(const Letter& l) {
  if (const auto* g = std::get_if<GenSymbol>(&l)) {
    switch (g->kind) {
      case GenSymbol::Kind::EPlus: return "ê_{+," + std::to_string(g->i) + "}";
      case GenSymbol::Kind::EMinus: return "ê_{-," + std::to_string(g->i) + "}";
      case GenSymbol::Kind::CartanEps: return "q^{" + epsExponent(g->i, g->half, false) + "}";
    }
  }
  const auto& r = std::get<RootSymbol>(l);
  const std::string ij = "_{" + indexPair(r.i, r.j) + "}";
  switch (r.variant) {
    case RootVariant::Hatted: return "Ê" + ij;
    case RootVariant::Modified: return "E" + ij;
    case RootVariant::Primed: return "E'" + ij;
  }
  return {};
}

std::string toLatex(const Letter& l) {
  if (const auto* g = std::get_if<GenSymbol>(&l)) {
    switch (g->kind) {
      case GenSymbol::Kind::EPlus: return "\\hat{e}_{+," + std::to_string(g->i) + "}";
      case GenSymbol::Kind::EMinus: return "\\hat{e}_{-," + std::to_string(g->i) + "}";
      case GenSymbol::Kind::CartanEps: return "q^{" + epsExponent(g->i, g->half, true) + "}";
    }
  }
  const auto& r = std::get<RootSymbol>(l);
  const std::string ij = "_{" + indexPair(r.i, r.j) + "}";
  switch (r.variant) {
    case RootVariant::Hatted: return "\\hat{E}" + ij;
    case RootVariant::Modified: return "E" + ij;
    case RootVariant::Primed: return "E'" + ij;
  }
  return {};
}

std::string serialize(const AlgebraExpr& e, Format format) {
  switch (format) {
    case Format::Text: return joinTerms(e, termText);
    case Format::Latex: return joinTerms(e, termLatex);
    case Format::Json: return toJson(e).dump();
  }
  throw std::invalid_argument("serialize: unsupported format");
}

AlgebraExpr parseExprJson(const std::string& json) { return exprFromJson(Json::parse(json)); }

}  // namespace uqc
