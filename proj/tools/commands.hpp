#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetvar::cli {

struct Globals {
  bool json = false;
  bool check = false;
  bool mech = false;
  int orderCap = -1;  // -1: JETVAR_ORDER_CAP or the context default
};

struct ContextArgs {
  int n = 1, m = 1, r = 1, s = -1;
};

int runEl(const Globals& g, const ContextArgs& c, const std::string& expr, std::ostream& out);
int runHelmholtz(const Globals& g, const ContextArgs& c, const std::string& list, std::ostream& out);
// expr "-" or empty reads stdin; '#' lines are skipped, a trivial-gen header fills missing context
int runTrivialCheck(const Globals& g, ContextArgs c, bool haveContext, const std::string& expr, std::ostream& out);

struct GenArgs {
  unsigned long long seed = 1;
  int n = 1, m = 1, r = 1;
  int maxTerms = 3, maxDegree = 2;
};
int runTrivialGen(const Globals& g, const GenArgs& a, std::ostream& out);

int runJac(const Globals& g, const ContextArgs& c, int k, std::ostream& out);
int runPc(const Globals& g, const ContextArgs& c, const std::string& which, const std::string& expr, std::ostream& out);
int runGroup(const Globals& g, const std::string& op, const std::string& file, const std::string& file2,
             std::ostream& out);
int runInvariants(const Globals& g, const std::string& file, const std::string& select, std::ostream& out);

}  // namespace jetvar::cli
