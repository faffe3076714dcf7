#pragma once

#include "json.hpp"
#include "uqcentral/expressions.hpp"
#include "uqcentral/representations.hpp"
#include "uqcentral/scalars.hpp"

namespace uqc {

using Json = nlohmann::ordered_json;

// {"num": [[s_exponent, "p/q"], ...], "denom_pow": k}
Json toJson(const QScalar& x);
QScalar qscalarFromJson(const Json& j);

Json toJson(const Letter& l);
Letter letterFromJson(const Json& j);

// {"terms": [{"coeff": ..., "word": [...]}, ...]}
Json toJson(const AlgebraExpr& e);
AlgebraExpr exprFromJson(const Json& j);

// {"m", "N", "term_count", "summands": [{"i", "j", "weight", "minus", "plus"}], "expanded"}
Json toJson(const CentralElement& c);
// JSON keeps the (i, j) summands; text and latex print the expanded sum.
std::string serialize(const CentralElement& c, Format format);

// {"space": "tensor:2", "entries": [[row, col, coeff], ...]}
Json toJson(const RepMatrix& m);
QMatrix matrixFromJson(const Json& j, Index dim);

}  // namespace uqc
