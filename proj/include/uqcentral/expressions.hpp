#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uqcentral/combinatorics.hpp"
#include "uqcentral/scalars.hpp"

namespace uqc {

// Chevalley generator or Cartan element q^{half * eps_i / 2}.
struct GenSymbol {
  enum class Kind { EPlus, EMinus, CartanEps };
  Kind kind = Kind::EPlus;
  int i = 0;
  int half = 0;

  static GenSymbol ePlus(int i) { return {Kind::EPlus, i, 0}; }
  static GenSymbol eMinus(int i) { return {Kind::EMinus, i, 0}; }
  static GenSymbol eps(int i, int half) { return {Kind::CartanEps, i, half}; }

  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

enum class RootVariant { Primed, Modified, Hatted };

struct RootSymbol {
  int i = 0;
  int j = 0;
  RootVariant variant = RootVariant::Hatted;

  static RootSymbol hat(int i, int j) { return {i, j, RootVariant::Hatted}; }
  friend auto operator<=>(const RootSymbol&, const RootSymbol&) = default;
};

using Letter = std::variant<GenSymbol, RootSymbol>;
using Word = std::vector<Letter>;

// Formal noncommutative sum. Words are never reordered; like words merge and
// zero coefficients disappear. Iteration follows first insertion.
class AlgebraExpr {
 public:
  struct Term {
    QScalar coeff;
    Word word;
  };

  AlgebraExpr() = default;
  static AlgebraExpr scalar(const QScalar& c) { return monomial({}, c); }
  static AlgebraExpr monomial(Word w, const QScalar& c = QScalar(1));
  static AlgebraExpr letter(const Letter& l) { return monomial({l}); }

  void add(const Word& w, const QScalar& c);
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  QScalar coeff(const Word& w) const;

  AlgebraExpr& operator+=(const AlgebraExpr& o);
  AlgebraExpr& operator-=(const AlgebraExpr& o);
  AlgebraExpr& operator*=(const QScalar& c);
  friend AlgebraExpr operator+(AlgebraExpr a, const AlgebraExpr& b) { return a += b; }
  friend AlgebraExpr operator-(AlgebraExpr a, const AlgebraExpr& b) { return a -= b; }
  friend AlgebraExpr operator*(const AlgebraExpr& a, const AlgebraExpr& b);
  friend AlgebraExpr operator*(const QScalar& c, AlgebraExpr a) { return a *= c; }
  friend AlgebraExpr operator*(AlgebraExpr a, const QScalar& c) { return a *= c; }
  // Equality as formal sums (insertion order is irrelevant).
  friend bool operator==(const AlgebraExpr& a, const AlgebraExpr& b);

 private:
  std::vector<Term> terms_;
  std::map<Word, std::size_t> index_;
};

// Iterated q-commutator E_{ij} (primed or modified) in the e_{+-,k}.
// Pivot k = j - 1 for i < j and k = j + 1 for i > j. Throws on i == j.
AlgebraExpr rootVectorExpand(int i, int j, RootVariant variant);
// Same recursion with an arbitrary admissible pivot at the top level.
AlgebraExpr rootVectorExpand(int i, int j, RootVariant variant, int pivot);

// Hatted root vector in generators: q^{(eps_i + eps_j - 1)/2} E_{ij}, or
// q^{eps_i}/(q - q^{-1}) on the diagonal.
AlgebraExpr hatE(int i, int j);

// Replaces every RootSymbol by its expansion in GenSymbols.
AlgebraExpr expandRootSymbols(const AlgebraExpr& e);
// Moves Cartan letters to the front of each word (exact commutation), merging them.
AlgebraExpr cartanToFront(const AlgebraExpr& e);

enum class Sign { Plus, Minus };

// Product of hatted root symbols, or nullopt when some factor violates the sign condition.
std::optional<Word> hatProduct(const MultiIndex& a, const MultiIndex& b, Sign sign);

enum class TildeForm {
  Corrected,  // q^{wi(taubar(j)) - wi(zetabar(i))} for the minus sign
  Literal     // q^{+-(inv tau - inv zeta)} as printed for both signs
};

// E~^{+-}_{ij} = sum over zeta in D_i of a power of q times E^{+-}_{zetabar(i) taubar(j)}.
// tau defaults to the identity representative of D_j.
AlgebraExpr tildeE(const MultiIndex& i, const MultiIndex& j, Sign sign,
                   TildeForm form = TildeForm::Corrected,
                   const std::optional<Permutation>& tau = std::nullopt);

struct CentralSummand {
  MultiIndex i;
  MultiIndex j;
  QScalar weight;      // q^{2 sum(i) - N m}
  AlgebraExpr minus;   // E~^-_{ji}
  AlgebraExpr plus;    // E~^+_{ij}
};

struct CentralElement {
  int m = 0;
  int N = 0;
  std::vector<CentralSummand> summands;  // nonvanishing, ordered by (i, j)

  AlgebraExpr expr() const;
};

CentralElement centralElement(int m, int N, TildeForm form = TildeForm::Corrected);

// Number of nonvanishing (i, j) summands.
int termCount(const CentralElement& c);

struct TermCensus {
  int total = 0;
  int bothConstant = 0;   // i = (i, i), j = (j, j)
  int oneConstant = 0;
  int interleaved = 0;    // j1 <= i1 < j2 <= i2
  int separated = 0;      // j1 < j2 <= i1 < i2
  std::vector<std::pair<MultiIndex, MultiIndex>> vanishingSets;  // unordered {i, j}, i < j
};

// Breakdown for m = 2.
TermCensus termCensus(const CentralElement& c);

enum class Format { Text, Latex, Json };
Format parseFormat(const std::string& s);

std::string toText(const Letter& l);
std::string toLatex(const Letter& l);
std::string serialize(const AlgebraExpr& e, Format format);
AlgebraExpr parseExprJson(const std::string& json);

}  // namespace uqc
