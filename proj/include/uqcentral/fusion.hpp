#pragma once

#include <vector>

#include "uqcentral/representations.hpp"

namespace uqc {

// Operator on W (x) Q with the auxiliary slot W stored first.
struct BipartiteOperator {
  RepSpace aux;
  RepSpace quantum;
  QMatrix matrix;

  Index auxDim() const { return aux.dim(); }
  Index quantumDim() const { return quantum.dim(); }
};

// Exponent of q in q^{-2 h_rho} for every quantum basis label.
std::vector<int> qTraceWeights(const RepSpace& quantum);

// sum_{i >= j} E^_{ij}(W) (x) e_{ji}, or sum_{i >= j} E^_{ji}(W) (x) e_{ij} when transposed.
BipartiteOperator rMatrix(const Representation& W, bool transposed = false);
// R_{0k} on W (x) V^{(x)m}
QMatrix rLeg(const Representation& W, int k, int m, bool transposed = false);
// R_{0m} ... R_{01}, or R^T_{01} ... R^T_{0m}, on W (x) V^{(x)m}.
BipartiteOperator fusedRFull(const Representation& W, int m, bool transposed = false);
// fusedRFull restricted to W (x) span{M(mu)}; throws NotInvariant.
BipartiteOperator fusedR(const Representation& W, int m, bool transposed = false);
// sum_{i,j} E~^+_{ij}(W) (x) e~_{ji}, restricted to W (x) span{M(mu)}.
BipartiteOperator factoredFusedR(const Representation& W, int m);

BipartiteOperator gamma(const Representation& W, int m);

// sum_c q^{w_c} A[(a, c), (b, c)]
QMatrix qTracePartial(const BipartiteOperator& A);
QMatrix drinfeldCentral(const Representation& W, int m);

// e_{v(mu)} -> M(mu), other words -> 0; a projection onto span{M(mu)}.
QMatrix symProjection(const SymBasis& basis);
// Tensor-basis partial q-trace of Gamma (x) projection, on W (x) V^{(x)m}.
QMatrix drinfeldCentralTensorBasis(const Representation& W, int m);

// Generator action on W (x) Q, with the coproduct reversed across the two blocks when asked.
QMatrix bipartiteAction(const GenSymbol& g, const Representation& W, const Representation& Q, bool reversed);

}  // namespace uqc
