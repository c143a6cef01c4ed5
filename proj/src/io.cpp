#include "jetvar/io.hpp"

#include "jetvar/errors.hpp"
#include "jetvar/parse.hpp"

namespace jetvar {

Json polyToJson(const FieldPoly& p) {
  Json arr = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json m = Json::object();
    for (const auto& [v, e] : mono.factors) m[v.name()] = e;
    arr.push_back({{"coeff", toString(c)}, {"monomial", m}});
  }
  return arr;
}

FieldPoly polyFromJson(const Json& j, const VariableFamily& fam) {
  if (!j.is_array()) throw PreconditionError("polynomial JSON must be a list of terms");
  FieldPoly out(fam);
  for (const auto& t : j) {
    FieldPoly term(fam, parseRational(t.at("coeff").get<std::string>()));
    for (const auto& [name, e] : t.at("monomial").items())
      term = term * polyPow(parsePoly(name, fam), e.get<unsigned>());
    out += term;
  }
  return out;
}

Json helmholtzToJson(const HelmholtzReport& rep) {
  Json v = Json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"I", viol.I.str()}, {"sigma1", viol.sigma1}, {"sigma2", viol.sigma2}, {"residual", viol.residual.str()}});
  return {{"pass", rep.pass}, {"violations", v}};
}

namespace {

Json keyPairs(const TensorKey& k) {
  Json p = Json::array();
  for (const auto& pr : k.pairs) p.push_back(Json::array({pr.I.str(), pr.sigma}));
  return p;
}

}  // namespace

Json ensembleToJson(const TensorEnsemble& T) {
  Json comps = Json::array();
  auto emit = [&](const TensorKey& k, const FieldPoly& v) {
    Json c = {{"pairs", keyPairs(k)}, {"fermionic", k.fermionic}, {"value", v.str()}};
    if (k.top) c["top"] = true;
    comps.push_back(c);
  };
  for (const auto& [k, v] : T.components()) emit(k, v);
  for (const auto& [k, v] : T.topComponents()) emit(k, v);
  return {{"grading", {{"q", T.q()}, {"s", T.s()}}}, {"components", comps}};
}

TensorEnsemble ensembleFromJson(const Json& j, int n, int m, int cap) {
  const int q = j.at("grading").at("q").get<int>();
  const int s = j.at("grading").at("s").get<int>();
  TensorEnsemble T(n, m, q, s, cap);
  for (const auto& c : j.at("components")) {
    TensorKey k;
    for (const auto& pr : c.at("pairs"))
      k.pairs.push_back({MultiIndex::parse(pr.at(0).get<std::string>(), n), pr.at(1).get<int>()});
    k.fermionic = c.at("fermionic").get<std::vector<int>>();
    k.top = c.value("top", false);
    T.add(k, parsePoly(c.at("value").get<std::string>(), T.family()));
  }
  return T;
}

Json formToJson(const DiffForm& a) {
  Json terms = Json::array();
  for (const auto& [b, c] : a.terms()) {
    Json names = Json::array();
    for (const auto& e : b) names.push_back(e.name());
    terms.push_back({{"basis", names}, {"coeff", c.str()}});
  }
  return {{"degree", a.degree()}, {"terms", terms}};
}

Json groupToJson(const GroupElement& a) {
  Json coords = Json::array();
  for (const auto& [key, v] : a.coords())
    coords.push_back({{"upper", key.first}, {"J", key.second.str()}, {"value", toString(v)}});
  return {{"r", a.r()}, {"n", a.n()}, {"coords", coords}};
}

GroupElement groupFromJson(const Json& j) {
  GroupElement a(j.at("r").get<int>(), j.at("n").get<int>());
  for (const auto& c : j.at("coords"))
    a.set(c.at("upper").get<int>(), MultiIndex::parse(c.at("J").get<std::string>(), a.n()),
          parseRational(c.at("value").get<std::string>()));
  return a;
}

Json velocityToJson(const Velocity& x) {
  Json coords = Json::array();
  for (const auto& [key, v] : x.coords())
    coords.push_back({{"upper", key.first}, {"J", key.second.str()}, {"value", toString(v)}});
  return {{"r", x.r()}, {"n", x.n()}, {"N", x.N()}, {"coords", coords}};
}

Velocity velocityFromJson(const Json& j) {
  Velocity x(j.at("r").get<int>(), j.at("n").get<int>(), j.at("N").get<int>());
  for (const auto& c : j.at("coords"))
    x.set(c.at("upper").get<int>(), MultiIndex::parse(c.at("J").get<std::string>(), x.n()),
          parseRational(c.at("value").get<std::string>()));
  return x;
}

}  // namespace jetvar
