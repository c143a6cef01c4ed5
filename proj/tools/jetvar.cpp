#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "jetvar/errors.hpp"
#include "jetvar/io.hpp"

using namespace jetvar;
using namespace jetvar::cli;

namespace {

int report(const Globals& g, const std::string& kind, const std::string& msg, int code, int line = 0, int column = 0) {
  if (g.json) {
    Json e = {{"error", kind}, {"message", msg}, {"exit", code}};
    if (line > 0) e["line"] = line, e["column"] = column;
    std::cerr << e.dump() << "\n";
  } else {
    std::cerr << "error[" << kind << "]: " << msg << "\n";
  }
  return code;
}

CLI::Option* contextOptions(CLI::App* sub, ContextArgs& c, bool withS, bool withR) {
  sub->add_option("--n", c.n, "base dimension")->check(CLI::Range(1, 9));
  sub->add_option("--m", c.m, "fiber dimension")->check(CLI::Range(1, 9));
  if (withR) sub->add_option("--order-r,--r", c.r, "Lagrangian order r (s = 2r)")->check(CLI::Range(1, 7));
  if (!withS) return nullptr;
  return sub->add_option("--s", c.s, "jet order s (default 2r)")->check(CLI::Range(1, 14));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jetvar: exact variational calculus on jet spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: global flags may follow the subcommand
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--check", g.check, "re-verify the relevant invariant on the result");
  app.add_flag("--mech", g.mech, "print n = 1 variables as t and q<sigma>_<k>");
  app.add_option("--order-cap", g.orderCap, "variable order cap (default s+2, or JETVAR_ORDER_CAP)")->check(CLI::NonNegativeNumber);

  ContextArgs ctx;
  std::string expr, which = "principal", op, file, file2, select;
  int k = -1;
  GenArgs gen;

  auto* el = app.add_subcommand("el", "Euler-Lagrange expressions of a Lagrangian");
  contextOptions(el, ctx, false, true);
  el->add_option("expr", expr, "Lagrangian")->required();

  auto* hh = app.add_subcommand("helmholtz", "Helmholtz conditions for T1;T2;...");
  contextOptions(hh, ctx, true, true);
  hh->add_option("exprs", expr, "source expressions separated by ';'")->required();

  auto* tc = app.add_subcommand("trivial-check", "is a Lagrangian variationally trivial");
  contextOptions(tc, ctx, false, true);
  tc->add_option("expr", expr, "Lagrangian, or - for stdin");

  auto* tg = app.add_subcommand("trivial-gen", "emit a random trivial Lagrangian with its lambda certificate");
  tg->add_option("--seed", gen.seed);
  tg->add_option("--r", gen.r)->check(CLI::Range(1, 4));
  tg->add_option("--n", gen.n)->check(CLI::Range(1, 4));
  tg->add_option("--m", gen.m)->check(CLI::Range(1, 4));
  tg->add_option("--max-terms", gen.maxTerms);
  tg->add_option("--max-degree", gen.maxDegree);

  auto* jac = app.add_subcommand("jac", "list the hyper-Jacobians of order s");
  contextOptions(jac, ctx, true, false)->required();
  jac->add_option("--k", k, "number of slot pairs (default: all)");

  auto* pc = app.add_subcommand("pc", "Poincare-Cartan form and its exterior derivative");
  contextOptions(pc, ctx, true, true);
  pc->add_option("--case", which)->check(CLI::IsMember({"principal", "s2", "n1"}));
  pc->add_option("expr", expr, "Lagrangian")->required();

  auto* grp = app.add_subcommand("group", "differential group operations on JSON files");
  grp->add_option("op", op)->required()->check(CLI::IsMember({"compose", "invert", "act"}));
  grp->add_option("--file", file)->required();
  grp->add_option("--file2", file2);

  auto* inv = app.add_subcommand("invariants", "invariants of a regular velocity");
  inv->add_option("--file", file)->required();
  inv->add_option("--select", select)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (el->parsed()) return runEl(g, ctx, expr, std::cout);
    if (hh->parsed()) return runHelmholtz(g, ctx, expr, std::cout);
    if (tc->parsed()) {
      const bool given = tc->count("--n") + tc->count("--m") + tc->count("--order-r") > 0;
      return runTrivialCheck(g, ctx, given, expr, std::cout);
    }
    if (tg->parsed()) return runTrivialGen(g, gen, std::cout);
    if (jac->parsed()) return runJac(g, ctx, k, std::cout);
    if (pc->parsed()) return runPc(g, ctx, which, expr, std::cout);
    if (grp->parsed()) {
      if (op != "invert" && file2.empty()) return report(g, "precondition", op + " needs --file2", 1);
      return runGroup(g, op, file, file2, std::cout);
    }
    if (inv->parsed()) return runInvariants(g, file, select, std::cout);
  } catch (const ParseError& e) {
    return report(g, "parse", e.what(), 2, e.line(), e.column());
  } catch (const Json::parse_error& e) {
    return report(g, "parse", e.what(), 2);
  } catch (const InvariantError& e) {
    return report(g, "invariant", e.what(), 3);
  } catch (const PreconditionError& e) {
    return report(g, "precondition", e.what(), 1);
  } catch (const Json::exception& e) {
    return report(g, "precondition", e.what(), 1);
  }
  return report(g, "internal", "no subcommand ran", 3);
}
