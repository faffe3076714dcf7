#include "uqcentral/scalars.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace uqc {

namespace {

std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Rational(-ib->second));
      ++ib;
    } else {
      Rational c = sign > 0 ? Rational(ia->second + ib->second) : Rational(ia->second - ib->second);
      if (sgn(c) != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Dense coefficient vector of a nonzero polynomial in s, lowest degree first.
std::vector<Rational> dense(const LaurentPoly& p) {
  std::vector<Rational> c(p.maxExp() - p.minExp() + 1);
  for (const auto& [e, v] : p.terms()) c[e - p.minExp()] = v;
  return c;
}

LaurentPoly fromDense(const std::vector<Rational>& c, int lowExp) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0) terms.emplace_back(lowExp + static_cast<int>(k), c[k]);
  return LaurentPoly(std::move(terms));
}

const LaurentPoly& qMinusQinvPower(int k) {
  thread_local std::vector<LaurentPoly> cache{LaurentPoly(1)};
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * LaurentPoly::qMinusQinv());
  return cache[k];
}

std::string rationalText(const Rational& c) { return c.get_str(); }

// "q", "q^{3}", "q^{-1/2}" ...
std::string qPowerText(int sExp) {
  if (sExp == 2) return "q";
  if (sExp % 2 == 0) return "q^{" + std::to_string(sExp / 2) + "}";
  return "q^{" + std::to_string(sExp) + "/2}";
}

std::string qPowerLatex(int sExp) {
  if (sExp == 2) return "q";
  if (sExp % 2 == 0) return "q^{" + std::to_string(sExp / 2) + "}";
  return "q^{" + std::string(sExp < 0 ? "-" : "") + "\\frac{" + std::to_string(std::abs(sExp)) + "}{2}}";
}

template <typename PowerFn>
std::string polyString(const LaurentPoly& p, PowerFn power, const char* times) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << rationalText(mag);
    } else if (mag == 1) {
      os << power(e);
    } else {
      os << rationalText(mag) << times << power(e);
    }
  }
  return os.str();
}

template <typename PowerFn>
std::string factoredNumerator(const LaurentPoly& p, PowerFn power, const char* times) {
  if (p.terms().size() <= 1 || p.minExp() == 0) return polyString(p, power, times);
  return power(p.minExp()) + "(" + polyString(p.shifted(-p.minExp()), power, times) + ")";
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c, int sExp) {
  if (sgn(c) != 0) {
    terms_.emplace_back(sExp, c);
    terms_.back().second.canonicalize();
  }
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) {
  std::map<int, Rational> acc;
  for (auto& [e, c] : terms) {
    c.canonicalize();
    acc[e] += c;
  }
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) terms_.emplace_back(e, std::move(c));
}

LaurentPoly LaurentPoly::qMinusQinv() { return LaurentPoly({{-2, Rational(-1)}, {2, Rational(1)}}); }

Rational LaurentPoly::coeff(int sExp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), sExp,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == sExp) ? it->second : Rational(0);
}

LaurentPoly LaurentPoly::shifted(int sExp) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += sExp;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  if (a.isMonomial()) {
    LaurentPoly r = b.shifted(a.minExp());
    if (a.terms_[0].second != 1)
      for (auto& t : r.terms_) t.second *= a.terms_[0].second;
    return r;
  }
  if (b.isMonomial()) return b * a;
  const int lo = a.minExp() + b.minExp();
  std::vector<Rational> acc(a.maxExp() + b.maxExp() - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  return fromDense(acc, lo);
}

std::optional<LaurentPoly> LaurentPoly::tryDivQMinusQinv() const {
  if (isZero()) return LaurentPoly{};
  // (s^2 - s^{-2}) Q = P  =>  Q_{e} = P_{e+2} + Q_{e+4}, solved from the top.
  const int lo = minExp();
  const int hi = maxExp();
  if (hi - lo < 4) return std::nullopt;
  const std::vector<Rational> p = dense(*this);
  auto P = [&](int e) -> const Rational& { return p[e - lo]; };
  const int qlo = lo + 2;
  const int qhi = hi - 2;
  std::vector<Rational> q(qhi - qlo + 1);
  for (int e = qhi; e >= qlo; --e) {
    Rational v = P(e + 2);
    if (e + 4 <= qhi) v += q[e + 4 - qlo];
    q[e - qlo] = std::move(v);
  }
  // Remaining equations P_e = Q_{e-2} - Q_{e+2} for e < qlo + 2.
  auto Q = [&](int e) -> Rational { return (e < qlo || e > qhi) ? Rational(0) : q[e - qlo]; };
  for (int e = lo; e < qlo + 2; ++e)
    if (P(e) != Q(e - 2) - Q(e + 2)) return std::nullopt;
  return fromDense(q, qlo);
}

std::optional<LaurentPoly> tryDivExact(const LaurentPoly& a, const LaurentPoly& d) {
  if (d.isZero()) throw std::domain_error("divExact: division by zero");
  if (a.isZero()) return LaurentPoly{};
  // Strip monomial factors; the remaining polynomials have nonzero constant terms,
  // so divisibility in the Laurent ring is divisibility in Q[s].
  std::vector<Rational> num = dense(a);
  const std::vector<Rational> den = dense(d);
  const int degDen = static_cast<int>(den.size()) - 1;
  const int degNum = static_cast<int>(num.size()) - 1;
  if (degNum < degDen) return std::nullopt;
  std::vector<Rational> quot(degNum - degDen + 1);
  for (int k = degNum - degDen; k >= 0; --k) {
    Rational c = num[k + degDen] / den[degDen];
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (int t = 0; t <= degDen; ++t) num[k + t] -= c * den[t];
  }
  for (const auto& r : num)
    if (sgn(r) != 0) return std::nullopt;
  return fromDense(quot, a.minExp() - d.minExp());
}

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& d) {
  auto q = tryDivExact(a, d);
  if (!q) throw NotDivisible("divExact: " + toText(d) + " does not divide " + toText(a));
  return *q;
}

QScalar::QScalar(LaurentPoly num, int denomPower) : num_(std::move(num)), denomPow_(denomPower) {
  if (denomPower < 0) {
    num_ *= qMinusQinvPower(-denomPower);
    denomPow_ = 0;
  }
  canonicalize();
}

void QScalar::canonicalize() {
  if (num_.isZero()) {
    denomPow_ = 0;
    return;
  }
  while (denomPow_ > 0) {
    auto q = num_.tryDivQMinusQinv();
    if (!q) break;
    num_ = std::move(*q);
    --denomPow_;
  }
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  if (denomPow_ == o.denomPow_) {
    num_ += o.num_;
  } else if (denomPow_ > o.denomPow_) {
    num_ += o.num_ * qMinusQinvPower(denomPow_ - o.denomPow_);
  } else {
    num_ = num_ * qMinusQinvPower(o.denomPow_ - denomPow_) + o.num_;
    denomPow_ = o.denomPow_;
  }
  canonicalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (isZero() || o.isZero()) return *this = QScalar{};
  num_ = num_ * o.num_;
  denomPow_ += o.denomPow_;
  // A product of canonical factors can still pick up a (q - q^{-1}) factor.
  if (denomPow_ > 0 && !(num_.isMonomial())) canonicalize();
  return *this;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::inverseMonomial() const {
  if (!num_.isMonomial()) throw std::domain_error("inverseMonomial: " + toText(*this) + " is not a unit");
  const auto& [e, c] = num_.terms().front();
  return QScalar(LaurentPoly(Rational(1 / c), -e) * qMinusQinvPower(denomPow_));
}

QScalar exactQuotient(const QScalar& a, const QScalar& b) {
  if (b.isZero()) throw std::domain_error("exactQuotient: division by zero");
  if (a.isZero()) return QScalar{};
  // b = u (q - q^{-1})^{e} with u coprime to q - q^{-1}
  LaurentPoly u = b.numerator();
  int e = -b.denomPower();
  while (auto r = u.tryDivQMinusQinv()) {
    u = std::move(*r);
    ++e;
  }
  return QScalar(divExact(a.numerator(), u), a.denomPower() + e);
}

QScalar qInteger(int n) {
  if (n < 0) return -qInteger(-n);
  return QScalar(LaurentPoly::monomial(2 * n) - LaurentPoly::monomial(-2 * n), 1);
}

std::string toText(const LaurentPoly& p) { return polyString(p, qPowerText, ""); }

std::string toText(const QScalar& x) {
  std::string num = factoredNumerator(x.numerator(), qPowerText, "");
  if (x.denomPower() == 0) return num;
  if (x.numerator().terms().size() > 1 && x.numerator().minExp() == 0) num = "(" + num + ")";
  std::string den = "(q-q^{-1})";
  if (x.denomPower() > 1) den += "^{" + std::to_string(x.denomPower()) + "}";
  return num + "/" + den;
}

std::string toLatex(const QScalar& x) {
  std::string num = factoredNumerator(x.numerator(), qPowerLatex, " ");
  if (x.denomPower() == 0) return num;
  std::string den = "(q-q^{-1})";
  if (x.denomPower() > 1) den += "^{" + std::to_string(x.denomPower()) + "}";
  return "\\frac{" + num + "}{" + den + "}";
}

Rational evaluateAt(const QScalar& x, const Rational& s) {
  auto spow = [&](int e) {
    Rational r = 1;
    const Rational base = e >= 0 ? s : Rational(1 / s);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
  };
  Rational num = 0;
  for (const auto& [e, c] : x.numerator().terms()) num += c * spow(e);
  const Rational d = spow(2) - spow(-2);
  Rational den = 1;
  for (int k = 0; k < x.denomPower(); ++k) den *= d;
  return num / den;
}

}  // namespace uqc
