#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <regex>
#include <sstream>

#include "jetvar/errors.hpp"
#include "jetvar/io.hpp"
#include "jetvar/parse.hpp"

namespace jetvar::cli {

namespace {

int resolveCap(const Globals& g) {
  if (g.orderCap >= 0) return g.orderCap;
  if (const char* env = std::getenv("JETVAR_ORDER_CAP")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("JETVAR_ORDER_CAP is not a non-negative integer: '") + env + "'");
  }
  return -1;
}

JetContext lagrangianContext(const Globals& g, const ContextArgs& c) {
  return JetContext(c.n, c.m, c.s > 0 ? c.s : 2 * c.r, resolveCap(g));
}

std::string text(const FieldPoly& p, const Globals& g) { return p.str(g.mech && p.family().n == 1); }

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json readJson(const std::string& path) { return Json::parse(readFile(path)); }

std::string keyText(const TensorKey& k) {
  std::string s;
  for (std::size_t p = 0; p < k.pairs.size(); ++p) {
    if (!s.empty()) s += " ^ ";
    s += (k.top && p == 0 ? "dy" : "omega") + std::to_string(k.pairs[p].sigma) + "_" + k.pairs[p].I.str();
  }
  for (int i : k.fermionic) {
    if (!s.empty()) s += " ^ ";
    s += "dx" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

Json polyList(const std::vector<FieldPoly>& v) {
  Json arr = Json::array();
  for (std::size_t a = 0; a < v.size(); ++a)
    arr.push_back({{"sigma", a + 1}, {"text", v[a].str()}, {"poly", polyToJson(v[a])}});
  return arr;
}

std::vector<int> range(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

}  // namespace

int runEl(const Globals& g, const ContextArgs& c, const std::string& expr, std::ostream& out) {
  JetContext ctx = lagrangianContext(g, c);
  FieldPoly L = parsePoly(expr, ctx.family());
  auto el = eulerLagrange(L, ctx);
  if (g.check) {
    auto rep = helmholtzCheck(el, ctx);
    if (!rep.pass) throw InvariantError("Euler-Lagrange expressions fail the Helmholtz conditions: " + helmholtzToJson(rep).dump());
  }
  if (g.json) {
    out << Json{{"n", ctx.n}, {"m", ctx.m}, {"r", ctx.r}, {"el", polyList(el)}}.dump(2) << "\n";
  } else {
    for (const auto& e : el) out << text(e, g) << "\n";
  }
  return 0;
}

int runHelmholtz(const Globals& g, const ContextArgs& c, const std::string& list, std::ostream& out) {
  JetContext ctx(c.n, c.m, c.s > 0 ? c.s : 2 * c.r, resolveCap(g));
  std::vector<FieldPoly> T;
  std::stringstream ss(list);
  for (std::string part; std::getline(ss, part, ';');) T.push_back(parsePoly(part, ctx.family()));
  if (static_cast<int>(T.size()) != ctx.m)
    throw PreconditionError("expected " + std::to_string(ctx.m) + " expressions separated by ';', got " + std::to_string(T.size()));
  auto rep = helmholtzCheck(T, ctx);
  if (g.check) {
    if (rep.pass != rep.violations.empty()) throw InvariantError("report verdict disagrees with its violation list");
    for (const auto& v : rep.violations)
      if (v.residual.isZero()) throw InvariantError("violation with zero residual");
  }
  Json j = helmholtzToJson(rep);
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    out << (rep.pass ? "pass" : "fail") << "\n";
    if (!rep.pass) out << j["violations"].dump(2) << "\n";
  }
  return 0;
}

int runTrivialCheck(const Globals& g, ContextArgs c, bool haveContext, const std::string& expr, std::ostream& out) {
  std::string body = expr;
  if (expr.empty() || expr == "-") {
    std::string input(std::istreambuf_iterator<char>(std::cin), {});
    auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && input[first] == '{') {
      Json j = Json::parse(input);
      if (!haveContext) c = {j.at("n").get<int>(), j.at("m").get<int>(), j.at("r").get<int>(), -1};
      body = j.at("lagrangian").get<std::string>();
    } else {
      body.clear();
      std::istringstream lines(input);
      const std::regex header(R"(n=(\d+) m=(\d+) r=(\d+))");
      for (std::string line; std::getline(lines, line);) {
        if (!line.empty() && line[0] == '#') {
          std::smatch mt;
          if (!haveContext && std::regex_search(line, mt, header)) {
            c = {std::stoi(mt[1]), std::stoi(mt[2]), std::stoi(mt[3]), -1};
            haveContext = true;
          }
          continue;
        }
        body += line + "\n";
      }
    }
  }
  JetContext ctx = lagrangianContext(g, c);
  FieldPoly L = parsePoly(body, ctx.family());
  auto el = eulerLagrange(L, ctx);
  bool trivial = true;
  for (const auto& e : el) trivial = trivial && e.isZero();
  if (g.check && !helmholtzCheck(el, ctx).pass)
    throw InvariantError("Euler-Lagrange expressions fail the Helmholtz conditions");
  if (g.json)
    out << Json{{"trivial", trivial}, {"el", polyList(el)}}.dump(2) << "\n";
  else
    out << (trivial ? "true" : "false") << "\n";
  return 0;
}

int runTrivialGen(const Globals& g, const GenArgs& a, std::ostream& out) {
  if (a.maxTerms < 1 || a.maxDegree < 0) throw PreconditionError("need --max-terms >= 1 and --max-degree >= 0");
  JetContext ctx = lagrangianContext(g, {a.n, a.m, a.r, -1});
  JetContext lctx(a.n, a.m, a.r, ctx.cap);
  // plain modulo on the raw engine keeps the stream identical across standard libraries
  std::mt19937_64 rng(a.seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  std::vector<FieldPoly> pool;
  for (int i = 1; i <= a.n; ++i) pool.push_back(lctx.x(i));
  for (int sigma = 1; sigma <= a.m; ++sigma)
    for (const auto& J : multiIndicesUpTo(a.n, a.r - 1)) pool.push_back(lctx.y(sigma, J));
  const auto keys = allKeys(a.n, a.m, a.n - 1, a.r - 1);

  TensorEnsemble lam(lctx, a.n - 1);
  FieldPoly L = ctx.zero();
  for (int attempt = 0; attempt < 64 && L.isZero(); ++attempt) {
    lam = TensorEnsemble(lctx, a.n - 1);
    const std::size_t comps = 1 + pick(std::min<std::size_t>(3, keys.size()));
    for (std::size_t cidx = 0; cidx < comps; ++cidx) {
      FieldPoly v = lctx.zero();
      const int terms = 1 + static_cast<int>(pick(a.maxTerms));
      for (int t = 0; t < terms; ++t) {
        long num = static_cast<long>(pick(9)) - 4;
        if (num == 0) num = 1;
        FieldPoly term = lctx.constant(ratio(num, 1 + static_cast<long>(pick(3))));
        const int deg = a.maxDegree == 0 ? 0 : 1 + static_cast<int>(pick(a.maxDegree));
        for (int d = 0; d < deg; ++d) term = term * pool[pick(pool.size())];
        v += term;
      }
      lam.add(keys[pick(keys.size())], v);
    }
    L = trivialFromLambda(lam, ctx);
  }
  if (L.isZero()) throw PreconditionError("no nonzero trivial Lagrangian for these parameters");
  if (g.check && !isVariationallyTrivial(L, ctx)) throw InvariantError("generated Lagrangian has nonzero Euler-Lagrange expressions");
  if (g.json) {
    out << Json{{"n", a.n}, {"m", a.m}, {"r", a.r}, {"seed", a.seed}, {"lagrangian", L.str()},
                {"poly", polyToJson(L)}, {"lambda", ensembleToJson(lam)}}
               .dump(2)
        << "\n";
  } else {
    out << "# trivial Lagrangian n=" << a.n << " m=" << a.m << " r=" << a.r << "\n";
    out << text(L, g) << "\n";
    out << "# lambda " << ensembleToJson(lam).dump() << "\n";
  }
  return 0;
}

int runJac(const Globals& g, const ContextArgs& c, int k, std::ostream& out) {
  const int s = c.s > 0 ? c.s : 2 * c.r;
  JetContext ctx(c.n, c.m, s, resolveCap(g));
  if (k > ctx.n) throw PreconditionError("--k must not exceed n");
  std::vector<SlotPair> slots;
  for (const auto& I : multiIndicesOfLength(ctx.n, s - 1))
    for (int sigma = 1; sigma <= ctx.m; ++sigma) slots.push_back({I, sigma});
  JetContext elCtx = JetContext::fromLagrangianOrder(ctx.n, ctx.m, s, std::max(ctx.cap, 2 * s + 2));
  Json list = Json::array();
  for (int kk = (k < 0 ? 0 : k); kk <= (k < 0 ? ctx.n : k); ++kk) {
    // increasing choices of kk distinct slots and n-kk free indices
    std::vector<std::vector<int>> slotChoices, freeChoices;
    std::vector<int> cur;
    std::function<void(std::vector<std::vector<int>>&, int, int, int)> choose = [&](auto& dst, int from, int total, int left) {
      if (left == 0) {
        dst.push_back(cur);
        return;
      }
      for (int v = from; v < total; ++v) {
        cur.push_back(v);
        choose(dst, v + 1, total, left - 1);
        cur.pop_back();
      }
    };
    choose(slotChoices, 0, static_cast<int>(slots.size()), kk);
    choose(freeChoices, 1, ctx.n + 1, ctx.n - kk);
    for (const auto& sc : slotChoices)
      for (const auto& fc : freeChoices) {
        std::vector<SlotPair> pairs;
        for (int v : sc) pairs.push_back(slots[v]);
        FieldPoly J = hyperJacobian(ctx, pairs, fc);
        if (J.isZero()) continue;
        if (g.check && !isVariationallyTrivial(J + elCtx.zero(), elCtx))
          throw InvariantError("hyper-Jacobian " + J.str() + " is not variationally trivial");
        if (g.json) {
          Json p = Json::array();
          for (const auto& pr : pairs) p.push_back(Json::array({pr.I.str(), pr.sigma}));
          list.push_back({{"pairs", p}, {"fermionic", fc}, {"value", J.str()}});
        } else {
          std::string label;
          for (const auto& pr : pairs) label += "(" + pr.I.str() + "," + std::to_string(pr.sigma) + ") ";
          label += "| free";
          for (int i : fc) label += " " + std::to_string(i);
          out << label << ": " << text(J, g) << "\n";
        }
      }
  }
  if (g.json) out << Json{{"n", ctx.n}, {"m", ctx.m}, {"s", s}, {"jacobians", list}}.dump(2) << "\n";
  return 0;
}

int runPc(const Globals& g, const ContextArgs& c, const std::string& which, const std::string& expr, std::ostream& out) {
  JetContext ctx = lagrangianContext(g, c);
  FieldPoly L = parsePoly(expr, ctx.family());
  DiffForm theta;
  if (which == "principal")
    theta = pcPrincipal(L, ctx);
  else if (which == "s2")
    theta = pcFirstOrder(L, ctx);
  else if (which == "n1")
    theta = pcMechanics(L, ctx);
  else
    throw PreconditionError("--case must be principal, s2 or n1");
  DiffForm alpha = exteriorDerivative(theta);
  TensorEnsemble A = formToEnsemble(alpha);
  // Euler-Lagrange part: omega^sigma ^ dx^1 ^ .. ^ dx^n
  auto el = eulerLagrange(L, ctx);
  bool elMatch = true;
  std::vector<FieldPoly> comp;
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    comp.push_back(A.get({{{MultiIndex(ctx.n), sigma}}, range(ctx.n), false}));
    elMatch = elMatch && comp.back() == el[sigma - 1];
  }
  bool traceless = tracelessCheck(A).pass;
  if (g.check) {
    if (!exteriorDerivative(alpha).isZero()) throw InvariantError("d(alpha) is not zero");
    if (!elMatch) throw InvariantError("Euler-Lagrange component of d(theta) disagrees with eulerLagrange");
    if (which == "s2" && !traceless) throw InvariantError("first-order form fails the trace condition");
  }
  if (g.json) {
    Json comps = Json::array();
    for (const auto& [k, v] : A.components()) comps.push_back({{"key", keyText(k)}, {"value", v.str()}});
    for (const auto& [k, v] : A.topComponents()) comps.push_back({{"key", keyText(k)}, {"value", v.str()}});
    out << Json{{"theta", formToJson(theta)}, {"alpha", formToJson(alpha)}, {"components", comps},
                {"el", polyList(comp)}, {"el_match", elMatch}, {"traceless", traceless}}
               .dump(2)
        << "\n";
  } else {
    const bool m = g.mech && ctx.n == 1;
    out << "theta = " << theta.str(m) << "\n";
    out << "alpha = " << alpha.str(m) << "\n";
    for (const auto& [k, v] : A.components()) out << "  " << keyText(k) << ": " << text(v, g) << "\n";
    for (const auto& [k, v] : A.topComponents()) out << "  " << keyText(k) << ": " << text(v, g) << "\n";
    out << "el_match " << (elMatch ? "true" : "false") << "\n";
    out << "traceless " << (traceless ? "true" : "false") << "\n";
  }
  return 0;
}

namespace {

void printCoords(const std::map<JetCoord, Rational>& coords, const std::string& letter, std::ostream& out) {
  for (const auto& [key, v] : coords) out << letter << key.first << "_" << key.second.str() << " = " << toString(v) << "\n";
}

}  // namespace

int runGroup(const Globals& g, const std::string& op, const std::string& file, const std::string& file2,
             std::ostream& out) {
  if (op == "act") {
    Velocity x = velocityFromJson(readJson(file));
    GroupElement a = groupFromJson(readJson(file2));
    Velocity y = act(x, a);
    if (g.check && !(act(y, inverse(a)) == x)) throw InvariantError("acting with the inverse does not undo the action");
    if (g.json)
      out << velocityToJson(y).dump(2) << "\n";
    else
      printCoords(y.coords(), "x", out);
    return 0;
  }
  GroupElement a = groupFromJson(readJson(file));
  GroupElement res;
  if (op == "compose") {
    GroupElement b = groupFromJson(readJson(file2));
    res = compose(a, b);
    if (g.check && !(compose(res, inverse(b)) == a)) throw InvariantError("composition is not undone by the inverse");
  } else if (op == "invert") {
    res = inverse(a);
    if (g.check && !(compose(a, res) == identityElement(a.r(), a.n()))) throw InvariantError("inverse check failed");
  } else {
    throw PreconditionError("group operation must be compose, invert or act");
  }
  if (g.json)
    out << groupToJson(res).dump(2) << "\n";
  else
    printCoords(res.coords(), "a", out);
  return 0;
}

int runInvariants(const Globals& g, const std::string& file, const std::string& select, std::ostream& out) {
  Velocity x = velocityFromJson(readJson(file));
  std::vector<int> sel;
  std::stringstream ss(select);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      sel.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw PreconditionError("bad --select entry '" + part + "'");
    }
  }
  Velocity y = invariants(x, sel);
  if (g.check) {
    Velocity back = act(y, selectedBlock(x, sel));
    int s = 0;
    for (int A = 1; A <= x.N(); ++A) {
      if (std::find(sel.begin(), sel.end(), A) != sel.end()) continue;
      ++s;
      for (const auto& J : multiIndicesUpTo(x.n(), x.r()))
        if (back.get(s, J) != x.get(A, J)) throw InvariantError("invariants do not reconstruct the velocity");
    }
  }
  if (g.json)
    out << velocityToJson(y).dump(2) << "\n";
  else
    printCoords(y.coords(), "y", out);
  return 0;
}

}  // namespace jetvar::cli
