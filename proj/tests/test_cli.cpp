#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "orbispec/cli.hpp"
#include "support.hpp"

using namespace orbispec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return testing::source_path(std::string("fixtures/") + name); }

}  // namespace

TEST_CASE("expand examples") {
  auto a = cli({"expand", "(1-T)^-{1/2}", "--N", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "1 + (1*(1/2))T^1 + (1*(0))T^2 + (1*(1/2))T^3\n");
  CHECK(cli({"expand", "A^0"}).out == "1\n");
  CHECK(cli({"expand", "(1+T)^{1/2}", "--mode", "geometric"}).out == "1 + (1*(1/2))T^1\n");
  CHECK(cli({"expand", "(1 + (1*(1/2))T^1)^[2*(0)]", "--formula", "--N", "3"}).out ==
        "1 + (2*(1/2))T^1 + (1*(0))T^2\n");
  CHECK(cli({"expand", "(1-T)^-{1/2}", "--N", "2", "--format", "csv"}).out ==
        "degree,coefficient\n0,1*(0)\n1,1*(1/2)\n2,1*(0)\n");
}

TEST_CASE("expand input errors") {
  auto bad = cli({"expand", "(1+T)^-[1*(0)]", "--formula"});
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find("not effective") != std::string::npos);
  CHECK(cli({"expand", "(1-T^^"}).code == kExitInput);
  CHECK(cli({"expand", "(1-T)^{1/2}", "--signature", "x"}).code == kExitInput);
}

TEST_CASE("truncation cap from the environment") {
  CHECK(cli({"expand", "(1-T)^{0}", "--N", "65"}).code == kExitInput);
  setenv(kMaxOrderEnv, "8", 1);
  CHECK(max_truncation_order() == 8);
  CHECK(cli({"expand", "(1-T)^{0}", "--N", "9"}).code == kExitInput);
  CHECK(cli({"expand", "(1-T)^{0}", "--N", "8"}).code == kExitOk);
  unsetenv(kMaxOrderEnv);
  CHECK(max_truncation_order() == kDefaultMaxOrder);
}

TEST_CASE("spectrum examples") {
  CHECK(cli({"spectrum", fixture("point.ws"), "--target", "pt", "--order", "0"}).out == "exponent,multiplicity\n(0),1\n");
  auto z3 = cli({"spectrum", fixture("brieskorn.ws"), "--target", "z3-triv", "--order", "0", "--kind", "hsp"});
  CHECK(z3.code == kExitOk);
  CHECK(z3.out == "exponent,multiplicity\n(0),1\n(1/3),1\n(2/3),1\n");
  auto line = cli({"spectrum", fixture("line-mu2.ws"), "--target", "C", "--order", "1", "--kind", "triple"});
  CHECK(line.out == "exponent,multiplicity\n\"(0,1/2,1/2)\",1\n\"(0,1,1)\",1\n");
  auto poincare = cli({"spectrum", fixture("line-mu2.ws"), "--target", "C", "--order", "1", "--kind", "poincare", "--format", "text"});
  CHECK(poincare.code == kExitOk);
  CHECK(poincare.out == "# spectrum target=C order=1 kind=poincare\nt^{1/2} + t\n");
}

TEST_CASE("spectrum errors") {
  CHECK(cli({"spectrum", fixture("point.ws"), "--target", "nope"}).code == kExitInput);
  CHECK(cli({"spectrum", "/nonexistent.ws", "--target", "pt"}).code == kExitInput);
  CHECK(cli({"spectrum", fixture("point.ws"), "--target", "pt", "--kind", "weird"}).code == kExitInput);
}

TEST_CASE("verify exit codes") {
  auto t1 = cli({"verify", fixture("curves.ws"), "--theorem", "1", "--N", "5"});
  CHECK(t1.code == kExitOk);
  CHECK(t1.out.find("MISMATCH") == std::string::npos);
  auto t2 = cli({"verify", fixture("brieskorn.ws"), "--theorem", "2", "--fixture", "z2-mu2", "--k", "1"});
  CHECK(t2.code == kExitOk);
  CHECK(t2.out.find("# verdict: equal") != std::string::npos);
  auto deep = cli({"verify", fixture("line-mu2.ws"), "--theorem", "2", "--fixture", "C", "--k", "2"});
  CHECK(deep.code == kExitUnsupported);
  CHECK(deep.out.find("unsupported") != std::string::npos);
  auto literal = cli({"verify", fixture("line-mu2.ws"), "--theorem", "2", "--fixture", "C", "--shift", "literal"});
  CHECK(literal.code == kExitMismatch);
  auto csv = cli({"verify", fixture("point.ws"), "--theorem", "1", "--N", "2", "--format", "csv"});
  CHECK(csv.out.rfind("theorem,fixture,degree,lhs,rhs,verdict\n", 0) == 0);
}

TEST_CASE("audit command") {
  auto a = cli({"audit", fixture("line-mu2.ws"), "--fixture", "C"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("# winner: shifted") != std::string::npos);
  auto csv = cli({"audit", fixture("brieskorn.ws"), "--fixture", "z2-mu2", "--format", "csv"});
  CHECK(csv.out.rfind("fixture,k,d,lhs,literal,shifted,winner\n", 0) == 0);
  CHECK(csv.out.find(",both\n") != std::string::npos);
}

TEST_CASE("run executes every job in order") {
  auto a = cli({"run", fixture("brieskorn.ws")});
  auto b = cli({"run", fixture("brieskorn.ws")});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("## job 1: ", 0) == 0);
  CHECK(cli({"run", fixture("mode-sensitivity.ws")}).code == kExitMismatch);
  CHECK(cli({"run", fixture("line-mu2.ws")}).code == kExitUnsupported);
}

TEST_CASE("help lists defaults") {
  auto h = cli({"verify", "--help"});
  CHECK(h.code == kExitOk);
  for (const char* needle : {"k", "N", "substitution", "audit"}) CHECK(h.out.find(needle) != std::string::npos);
  CHECK(cli({}).code == kExitInput);
  CHECK(cli({"frobnicate"}).code == kExitInput);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("(0,1)") == "\"(0,1)\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
