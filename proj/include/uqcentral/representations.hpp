#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqcentral/combinatorics.hpp"
#include "uqcentral/expressions.hpp"
#include "uqcentral/linalg.hpp"

namespace uqc {

struct NotInvariant : std::runtime_error {
  NotInvariant(const std::string& what, Index row, Index col) : std::runtime_error(what), row(row), col(col) {}
  Index row;
  Index col;
};

struct PathDependent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepSpace {
  enum class Kind { TensorPower, SymmetricPower, Trivial };
  Kind kind = Kind::TensorPower;
  int N = 0;
  int k = 0;
  // Tensor words (j_1..j_k) in row-major order, or compositions mu in lexicographic order.
  std::vector<MultiIndex> labels;

  Index dim() const { return static_cast<Index>(labels.size()); }
  std::string describe() const;
};

RepSpace tensorSpace(int N, int k);
RepSpace symmetricSpace(int N, int m);

struct RepMatrix {
  RepSpace space;
  QMatrix matrix;
};

// Generator matrices of a U_q(gl(N+1)) module, plus the eps-weight of every basis vector.
struct Representation {
  RepSpace space;
  int N = 0;
  std::vector<QMatrix> ePlus;   // index 1..N
  std::vector<QMatrix> eMinus;  // index 1..N
  std::vector<std::vector<int>> weights;

  Index dim() const { return space.dim(); }
  // q^{half eps_i / 2}
  QMatrix cartan(int i, int half) const;
  // q^{half h_i / 2}, h_i = eps_{i-1} - eps_i
  QMatrix cartanH(int i, int half) const;
  QMatrix generator(const GenSymbol& g) const;
  // Every e_{+-,i} and q^{+-eps_i/2}, labelled.
  std::vector<std::pair<GenSymbol, QMatrix>> generators() const;
};

Representation definingRep(int N);
Representation trivialRep(int N);
// Delta(e) = e (x) K^{-1} + K (x) e, K = q^{h/2}; reversed swaps K and K^{-1}.
Representation tensorProduct(const Representation& a, const Representation& b, bool reversed = false);
Representation tensorPowerRep(int N, int k, bool reversed = false);
// Delta^{(m)} restricted to span{M(mu)}, in the M basis.
Representation symmetricPowerRep(int N, int m);
// Closed-form module on the normalized basis M~(mu).
Representation exRep(int N, int m);

// Matrix of g in V^{(x)m}: the padded generator summed over slots (or a Kronecker power).
QMatrix coproductMatrix(const GenSymbol& g, int m, int N, bool reversed = false);
// The single-slot term of coproductMatrix (slot is 1-based).
QMatrix slotMatrix(const GenSymbol& g, int slot, int m, int N, bool reversed = false);
// e_y -> e_{act(s, y)} on V^{(x)m}
QMatrix permutationMatrix(const Permutation& s, int N);
// e_{a_1 b_1} (x) ... (x) e_{a_m b_m}
QMatrix unitTensor(const MultiIndex& a, const MultiIndex& b, int N);
Index wordIndex(const MultiIndex& w, int N);

// Algebra homomorphism AlgebraExpr -> matrices, caching root vectors.
class Evaluator {
 public:
  explicit Evaluator(const Representation& rep) : rep_(rep) {}

  const QMatrix& rootVector(int i, int j, RootVariant variant);
  QMatrix letter(const Letter& l);
  QMatrix word(const Word& w);
  QMatrix operator()(const AlgebraExpr& e);

 private:
  const Representation& rep_;
  std::map<RootSymbol, QMatrix> roots_;
};

QMatrix evaluate(const AlgebraExpr& e, const Representation& rep);
QMatrix evaluate(const AlgebraExpr& e, int m, int N, bool reversed = false);
// Sum of weight * E~^- E~^+ with the two factors evaluated separately.
QMatrix evaluateCentral(const CentralElement& c, const Representation& rep);

struct SymBasis {
  int m = 0;
  int N = 0;
  std::vector<Composition> labels;
  QMatrix vectors;             // column mu is M(mu) in V^{(x)m}
  std::vector<Index> leadRows; // row of v(mu); its coefficient in M(mu) is 1

  Index dim() const { return static_cast<Index>(labels.size()); }
  Index position(const Composition& mu) const;
};

SymBasis symBasis(int m, int N);
// v(mu) = I_0^{mu_0} (x) ... (x) I_N^{mu_N}
MultiIndex sortedWord(const Composition& mu);

// Matrix of A on W (x) span{M(mu)} (W first, of dimension auxDim), by exact solve.
// Throws NotInvariant when the image leaves the span.
QMatrix restrictToSym(const QMatrix& A, const SymBasis& basis, Index auxDim = 1);
// W (x) span{M} -> W (x) V^{(x)m}, columns e_a (x) M(mu).
QMatrix symEmbedding(const SymBasis& basis, Index auxDim = 1);

// mu - i^ : one quantum moved from level i-1 to level i.
std::optional<Composition> lowered(const Composition& mu, int i);
std::optional<Composition> raised(const Composition& mu, int i);

// c(mu) with c(m,0,...,0) = 1 and c(mu - i^)/c(mu) = q^{(mu_{i-1} - mu_i - 1)/2},
// aligned with enumerateB(m, N). Every lowering path is checked.
std::vector<QScalar> tildeBasisScalars(int m, int N);
QMatrix exRepGenerator(const GenSymbol& g, int m, int N);

// e~_{ji} = sum_{tau in D_j} q^{-d_i(tau)} e_{tau(j) tau(i)}
QMatrix coreOperator(const MultiIndex& j, const MultiIndex& i, int N);

}  // namespace uqc
