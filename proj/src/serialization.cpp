#include "uqcentral/serialization.hpp"

#include <stdexcept>

namespace uqc {

Json toJson(const QScalar& x) {
  Json num = Json::array();
  for (const auto& [e, c] : x.numerator().terms()) num.push_back(Json::array({e, c.get_str()}));
  return Json{{"num", num}, {"denom_pow", x.denomPower()}};
}

QScalar qscalarFromJson(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j.at("num")) terms.emplace_back(t.at(0).get<int>(), Rational(t.at(1).get<std::string>()));
  return QScalar(LaurentPoly(std::move(terms)), j.at("denom_pow").get<int>());
}

Json toJson(const Letter& l) {
  if (const auto* g = std::get_if<GenSymbol>(&l)) {
    if (g->kind == GenSymbol::Kind::CartanEps) return Json{{"type", "eps"}, {"i", g->i}, {"half", g->half}};
    return Json{{"type", "e"}, {"sign", g->kind == GenSymbol::Kind::EPlus ? "+" : "-"}, {"i", g->i}};
  }
  const auto& r = std::get<RootSymbol>(l);
  if (r.variant == RootVariant::Hatted) return Json{{"type", "hatE"}, {"i", r.i}, {"j", r.j}};
  return Json{{"type", "E"}, {"variant", r.variant == RootVariant::Primed ? "primed" : "modified"},
              {"i", r.i}, {"j", r.j}};
}

Letter letterFromJson(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "eps") return GenSymbol::eps(j.at("i").get<int>(), j.at("half").get<int>());
  if (type == "e") {
    const std::string sign = j.at("sign").get<std::string>();
    if (sign == "+") return GenSymbol::ePlus(j.at("i").get<int>());
    if (sign == "-") return GenSymbol::eMinus(j.at("i").get<int>());
    throw std::invalid_argument("letter: bad sign " + sign);
  }
  if (type == "hatE") return RootSymbol::hat(j.at("i").get<int>(), j.at("j").get<int>());
  if (type == "E") {
    const std::string v = j.at("variant").get<std::string>();
    if (v != "primed" && v != "modified") throw std::invalid_argument("letter: bad variant " + v);
    return RootSymbol{j.at("i").get<int>(), j.at("j").get<int>(),
                      v == "primed" ? RootVariant::Primed : RootVariant::Modified};
  }
  throw std::invalid_argument("letter: unknown type " + type);
}

Json toJson(const AlgebraExpr& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms()) {
    Json word = Json::array();
    for (const auto& l : t.word) word.push_back(toJson(l));
    terms.push_back(Json{{"coeff", toJson(t.coeff)}, {"word", word}});
  }
  return Json{{"terms", terms}};
}

AlgebraExpr exprFromJson(const Json& j) {
  AlgebraExpr e;
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& l : t.at("word")) w.push_back(letterFromJson(l));
    e.add(w, qscalarFromJson(t.at("coeff")));
  }
  return e;
}

Json toJson(const CentralElement& c) {
  Json summands = Json::array();
  for (const auto& t : c.summands)
    summands.push_back(Json{{"i", t.i}, {"j", t.j}, {"weight", toJson(t.weight)}, {"minus", toJson(t.minus)},
                            {"plus", toJson(t.plus)}});
  return Json{{"m", c.m}, {"N", c.N}, {"term_count", termCount(c)}, {"summands", summands}, {"expanded", toJson(c.expr())}};
}

std::string serialize(const CentralElement& c, Format format) {
  if (format == Format::Json) return toJson(c).dump();
  return serialize(c.expr(), format);
}

Json toJson(const RepMatrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.matrix.outerSize(); ++r)
    for (QMatrix::InnerIterator it(m.matrix, r); it; ++it) entries.push_back(Json::array({it.row(), it.col(), toJson(it.value())}));
  return Json{{"space", m.space.describe()}, {"dim", m.space.dim()}, {"entries", entries}};
}

QMatrix matrixFromJson(const Json& j, Index dim) {
  std::vector<Eigen::Triplet<QScalar>> t;
  for (const auto& e : j.at("entries")) t.emplace_back(e.at(0).get<Index>(), e.at(1).get<Index>(), qscalarFromJson(e.at(2)));
  QMatrix m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return prune(m);
}

}  // namespace uqc
