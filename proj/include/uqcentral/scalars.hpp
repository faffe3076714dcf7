#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqc {

using Rational = mpq_class;

struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

// Laurent polynomial in s = q^{1/2} with rational coefficients.
// Terms are kept sorted by exponent with no zero coefficients, so equality
// is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_.emplace_back(0, Rational(c)); }
  explicit LaurentPoly(const Rational& c, int sExp = 0);
  explicit LaurentPoly(std::vector<Term> terms);

  static LaurentPoly monomial(int sExp, const Rational& c = 1) { return LaurentPoly(c, sExp); }
  // q - q^{-1} = s^2 - s^{-2}
  static LaurentPoly qMinusQinv();

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }
  int minExp() const { return terms_.front().first; }
  int maxExp() const { return terms_.back().first; }
  Rational coeff(int sExp) const;

  LaurentPoly shifted(int sExp) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Dividing by q - q^{-1}; nullopt when the quotient is not a Laurent polynomial.
  std::optional<LaurentPoly> tryDivQMinusQinv() const;

 private:
  std::vector<Term> terms_;
};

std::optional<LaurentPoly> tryDivExact(const LaurentPoly& a, const LaurentPoly& d);
// Throws NotDivisible when d does not divide a in Q[s, s^{-1}].
LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& d);

// numerator * (q - q^{-1})^{-denomPower}, canonical: either denomPower == 0 or
// the numerator is not divisible by q - q^{-1}.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long c) : num_(c) {}
  QScalar(const Rational& c) : num_(c) {}
  explicit QScalar(LaurentPoly num, int denomPower = 0);

  // q^{e/2}
  static QScalar sPower(int e) { return QScalar(LaurentPoly::monomial(e)); }
  static QScalar qPower(int e) { return sPower(2 * e); }
  // (q - q^{-1})^{-k}
  static QScalar invQMinusQinvPower(int k) { return QScalar(LaurentPoly(1), k); }

  const LaurentPoly& numerator() const { return num_; }
  int denomPower() const { return denomPow_; }
  bool isZero() const { return num_.isZero(); }

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar operator-() const;

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.denomPow_ == b.denomPow_ && a.num_ == b.num_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  // Multiplicative inverse of a monomial; throws std::domain_error otherwise.
  QScalar inverseMonomial() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  int denomPow_ = 0;
};

// a / b when the quotient lies in the ring; throws NotDivisible otherwise and
// std::domain_error for b == 0.
QScalar exactQuotient(const QScalar& a, const QScalar& b);

// [n]_q = (q^n - q^{-n}) / (q - q^{-1})
QScalar qInteger(int n);

// Display forms. Text uses q^{..} with half-integer exponents as q^{a/2}.
std::string toText(const LaurentPoly& p);
std::string toText(const QScalar& x);
std::string toLatex(const QScalar& x);

// Exact evaluation at a rational q^{1/2}; convenience only.
Rational evaluateAt(const QScalar& x, const Rational& s);

}  // namespace uqc

namespace Eigen {

template <>
struct NumTraits<uqc::QScalar> : GenericNumTraits<uqc::QScalar> {
  using Real = uqc::QScalar;
  using NonInteger = uqc::QScalar;
  using Nested = uqc::QScalar;
  using Literal = uqc::QScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
