#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetvar/errors.hpp"
#include "jetvar/io.hpp"
#include "jetvar/parse.hpp"

namespace py = pybind11;
using namespace jetvar;

namespace {

// nested Json -> Python objects via the json module
py::object toPython(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json fromPython(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

std::vector<std::string> strs(const std::vector<FieldPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

JetContext lagrangian(int n, int m, int r, int cap) { return JetContext::fromLagrangianOrder(n, m, r, cap); }

}  // namespace

PYBIND11_MODULE(_jetvar, m) {
  m.doc() = "exact variational calculus on jet spaces";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_SyntaxError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<JetContext>(m, "JetContext")
      .def(py::init<int, int, int, int>(), py::arg("n"), py::arg("m"), py::arg("s"), py::arg("cap") = -1)
      .def_readonly("n", &JetContext::n)
      .def_readonly("m", &JetContext::m)
      .def_readonly("s", &JetContext::s)
      .def_readonly("r", &JetContext::r)
      .def_readonly("cap", &JetContext::cap);

  py::class_<FieldPoly>(m, "Poly")
      .def(py::init([](const std::string& text, const JetContext& ctx) { return parsePoly(text, ctx.family()); }),
           py::arg("text"), py::arg("ctx"))
      .def("__str__", [](const FieldPoly& p) { return p.str(); })
      .def("__repr__", [](const FieldPoly& p) { return "Poly('" + p.str() + "')"; })
      .def("mech", [](const FieldPoly& p) { return p.str(true); })
      .def("is_zero", &FieldPoly::isZero)
      .def("order", &FieldPoly::order)
      .def("to_json", [](const FieldPoly& p) { return toPython(polyToJson(p)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  m.def("canonical", [](const std::string& text, int n, int m_, int s) {
    return parsePoly(text, JetContext(n, m_, s).family()).str();
  }, py::arg("text"), py::arg("n"), py::arg("m"), py::arg("s"));

  m.def("euler_lagrange", [](const std::string& L, int n, int m_, int r, int cap) {
    auto ctx = lagrangian(n, m_, r, cap);
    return strs(eulerLagrange(parsePoly(L, ctx.family()), ctx));
  }, py::arg("lagrangian"), py::arg("n"), py::arg("m"), py::arg("r"), py::arg("cap") = -1);

  m.def("helmholtz", [](const std::vector<std::string>& T, int n, int m_, int s, int cap) {
    JetContext ctx(n, m_, s, cap);
    std::vector<FieldPoly> polys;
    for (const auto& t : T) polys.push_back(parsePoly(t, ctx.family()));
    return toPython(helmholtzToJson(helmholtzCheck(polys, ctx)));
  }, py::arg("sources"), py::arg("n"), py::arg("m"), py::arg("s"), py::arg("cap") = -1);

  m.def("is_trivial", [](const std::string& L, int n, int m_, int r) {
    auto ctx = lagrangian(n, m_, r, -1);
    return isVariationallyTrivial(parsePoly(L, ctx.family()), ctx);
  }, py::arg("lagrangian"), py::arg("n"), py::arg("m"), py::arg("r"));

  m.def("trivial_from_lambda", [](const py::object& lam, int n, int m_, int r) {
    auto ctx = lagrangian(n, m_, r, -1);
    return trivialFromLambda(ensembleFromJson(fromPython(lam), n, m_, ctx.cap), ctx).str();
  }, py::arg("lam"), py::arg("n"), py::arg("m"), py::arg("r"));

  m.def("poincare_cartan", [](const std::string& L, int n, int m_, int r, const std::string& which) {
    auto ctx = lagrangian(n, m_, r, -1);
    auto poly = parsePoly(L, ctx.family());
    DiffForm theta;
    if (which == "principal")
      theta = pcPrincipal(poly, ctx);
    else if (which == "s2")
      theta = pcFirstOrder(poly, ctx);
    else if (which == "n1")
      theta = pcMechanics(poly, ctx);
    else
      throw PreconditionError("case must be principal, s2 or n1");
    auto alpha = exteriorDerivative(theta);
    py::dict d;
    d["theta"] = theta.str();
    d["alpha"] = alpha.str();
    d["alpha_ensemble"] = toPython(ensembleToJson(formToEnsemble(alpha)));
    d["d_alpha_zero"] = exteriorDerivative(alpha).isZero();
    return d;
  }, py::arg("lagrangian"), py::arg("n"), py::arg("m"), py::arg("r"), py::arg("case") = "principal");

  m.def("compose", [](const py::object& a, const py::object& b) {
    return toPython(groupToJson(compose(groupFromJson(fromPython(a)), groupFromJson(fromPython(b)))));
  });
  m.def("inverse", [](const py::object& a) { return toPython(groupToJson(inverse(groupFromJson(fromPython(a))))); });
  m.def("identity", [](int r, int n) { return toPython(groupToJson(identityElement(r, n))); });
  m.def("act", [](const py::object& x, const py::object& a) {
    return toPython(velocityToJson(act(velocityFromJson(fromPython(x)), groupFromJson(fromPython(a)))));
  });
  m.def("invariants", [](const py::object& x, const std::vector<int>& selection) {
    return toPython(velocityToJson(invariants(velocityFromJson(fromPython(x)), selection)));
  });
}
