#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqcentral/fusion.hpp"
#include "uqcentral/serialization.hpp"

namespace uqc {

struct VerificationReport {
  std::string check;
  Json params = Json::object();
  bool pass = true;
  Json witness;  // null when passing
  Json info;     // optional extra data, null when absent
};

Json toJson(const VerificationReport& r);
std::string toJsonLine(const VerificationReport& r);
bool allPass(const std::vector<VerificationReport>& reports);
// Sorted by check name, then parameters.
void sortReports(std::vector<VerificationReport>& reports);
// One report standing for many; the witness is the first failure's.
VerificationReport summarize(const std::string& check, Json params, const std::vector<VerificationReport>& parts);

VerificationReport matrixCheck(const std::string& check, Json params, const QMatrix& lhs, const QMatrix& rhs);

// [C, g] = 0 for every generator of W.
VerificationReport checkCentrality(const QMatrix& C, const Representation& W, Json params = Json::object());

struct NotScalar : std::runtime_error {
  NotScalar(const std::string& what, Entry<QScalar> witness) : std::runtime_error(what), witness(std::move(witness)) {}
  Entry<QScalar> witness;
};

QScalar checkScalar(const QMatrix& C);

using WeightVector = std::vector<int>;

enum class WeightConvention { Highest, Lowest };

WeightConvention parseWeightConvention(const std::string& s);
std::string name(WeightConvention c);
// conventionWeight of the highest weight k eps_0 of P_k V^{(x)k}.
WeightVector symmetricPowerWeight(int N, int k, WeightConvention c);
WeightVector longestWeylImage(const WeightVector& w);
// Lambda is the highest weight of the module; the lowest convention evaluates at w0 Lambda.
WeightVector conventionWeight(const WeightVector& highest, WeightConvention c);

// (q - q^{-1})^{-2m} q^{-Nm} sum_{i in W_m} q^{2(i_1 + ... + i_m)} q^{(2 mu(i), Lambda)}
QScalar eigenvalueFormula(int m, int N, const WeightVector& lambda);
// sum_{mu in B_m^N} q^{(2 rho, mu)} q^{2 (Lambda, mu)}, (2 rho, mu) = sum_k (N - 2k) mu_k
QScalar highestWeightEigenvalue(int m, int N, const WeightVector& lambda);

// Every relation of the defining presentation, on the given module.
std::vector<VerificationReport> uqglRelations(const Representation& rep);
// Presentation, root-vector commutation families and pivot independence on V^{(x)k}.
std::vector<VerificationReport> relationSuite(int N, int k);
// Representative independence of the tilde-E sums, both parts and both signs, on V^{(x)k}.
std::vector<VerificationReport> wellDefinednessSuite(int m, int N, int k = 2);
// Fused R and R^T against Delta and its reverse, W = V.
std::vector<VerificationReport> intertwiningSuite(int m, int N);
// Lowering formula, closed-form module, permutation identity, unit-tensor identities, presentation.
std::vector<VerificationReport> basisSuite(int m, int N);
// The three displayed unit-tensor examples.
std::vector<VerificationReport> coreExamples();

VerificationReport transpositionPathCheck(const MultiIndex& A);
VerificationReport weightSumCheck(int m, int N);

// checkScalar of C_m on P_k V^{(x)k}, compared with eigenvalueFormula at the given convention.
VerificationReport eigenvalueCheck(int m, int N, int k, WeightConvention c);
// eigenvalueFormula(w0 Lambda) = (q - q^{-1})^{-2m} highestWeightEigenvalue(Lambda)
VerificationReport eigenvalueBridgeCheck(int m, int N, const WeightVector& lambda);

VerificationReport oracleCheck(const Representation& W, int m);

}  // namespace uqc
