#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abspec/algfile.hpp"
#include "abspec/axioms.hpp"
#include "abspec/builders.hpp"
#include "abspec/random_gen.hpp"
#include "abspec/representation.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace abspec;
using namespace abspec::testing;

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.carrier.names == b.carrier.names && a.carrier.xi0 == b.carrier.xi0 &&
         a.carrier.xi1 == b.carrier.xi1 && a.times.table == b.times.table &&
         a.plus.table == b.plus.table;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

RunResult run_on(const std::string& cmd, const std::string& name,
                 std::vector<std::string> extra = {}) {
  std::vector<std::string> args{cmd, "--file", fixture_path(name)};
  args.insert(args.end(), extra.begin(), extra.end());
  return run(std::move(args));
}

}  // namespace

TEST_CASE("serialized text reparses to the same algebra") {
  for (const char* f : {"z6.alg", "c1.alg", "c3.alg", "b4.alg", "d12.alg", "sg3.alg",
                        "nonsep0.alg", "nonassoc.alg", "noncomm.alg"}) {
    Algebra alg = fixture(f);
    CAPTURE(f);
    std::string text = serialize_algebra(alg);
    Algebra back = parse_algebra(text);
    CHECK(same_algebra(alg, back));
    CHECK(serialize_algebra(back) == text);
  }
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Algebra alg = random_algebra(n, rng);
    CAPTURE(trial);
    Algebra back = parse_algebra(serialize_algebra(alg));
    CHECK(same_algebra(alg, back));
  }
}

TEST_CASE("parse errors carry their positions") {
  auto line_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const parse_error& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("carrier 2\ntimes 0 q = { 0 }") == 2);
  CHECK(line_of("carrier 2\ncarrier 2") == 2);
  CHECK(line_of("carrier 2\ntimes 0 0 = { 0 }\ntimes 0 0 = { 1 }") == 3);
  CHECK(line_of("ring 6\n\ncarrier 2") == 3);
  CHECK(line_of("carrier 0") == 1);
  CHECK(line_of("carrier 2\ntimes 0 = { }") == 2);
  CHECK(line_of("carrier 2\nnames a") == 1);
  CHECK(line_of("carrier 2\nnames a b\nxi0 a\nxi0 b") == 4);
  CHECK(line_of("carrier 2\nbogus 1") == 2);
  CHECK(line_of("ring 1") == 1);
  CHECK(line_of("lattice chain 0") == 1);
  CHECK(line_of("semigroup nope.tbl") == 1);
  CHECK_THROWS_AS(load_algebra_file("/no/such/file.alg"), parse_error);

  try {
    parse_algebra("carrier 2\ntimes 0 q = { 0 }");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()) == "undeclared element 'q'");
  }
}

TEST_CASE("builder directives") {
  CHECK(same_algebra(parse_algebra("ring 6"), fixture("z6.alg")));
  Algebra d12 = parse_algebra("lattice divisors 12");
  CHECK(d12.carrier.names ==
        std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
  Algebra sg3 = parse_algebra("semigroup sg3.tbl", std::string(ABSPEC_FIXTURE_DIR));
  CHECK(same_algebra(sg3, fixture("sg3.alg")));

  for (const char* text : {"ring 7", "ring 9", "lattice chain 5", "lattice powerset 3",
                           "lattice divisors 30"}) {
    Algebra alg = parse_algebra(text);
    CAPTURE(text);
    CHECK(check_preseparative(alg).pass);
    CHECK(check_sep0(ClosureCache(alg)).pass);
  }
}

TEST_CASE("command exit codes") {
  CHECK(run_on("check", "c3.alg").code == 0);
  CHECK(run_on("check", "nonassoc.alg").code == 1);
  CHECK(run_on("check", "nonsep0.alg").code == 1);
  CHECK(run_on("spectrum", "nonassoc.alg").code == 1);
  CHECK(run_on("represent", "noncomm.alg").code == 1);
  CHECK(run_on("radical", "nonsep0.alg").code == 1);
  CHECK(run_on("spectrum", "z30.alg").code == 3);
  CHECK(run({"check", "--file", "/does/not/exist.alg"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--file", fixture_path("c3.alg"), "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run_on("represent", "sg3.alg", {"--variant", "single-valued-proper"}).code == 2);
  CHECK(run_on("represent", "sg3.alg", {"--variant", "auto"}).code == 0);

  RunResult missing = run({"check", "--file", "/does/not/exist.alg"});
  CHECK(missing.err == "/does/not/exist.alg:0: error: cannot open '/does/not/exist.alg'\n");
  RunResult cap = run_on("spectrum", "z30.alg");
  CHECK(cap.err == "error: spectrum over 30 elements exceeds the cap of 24\n");
  RunResult warn = run_on("check", "z12.alg", {"--cap", "12"});
  CHECK(warn.code == 0);
  CHECK(warn.err.find("warning: every enumeration cap is overridden to 12") !=
        std::string::npos);
}

TEST_CASE("report text") {
  RunResult c3 = run_on("check", "c3.alg");
  CHECK(c3.out ==
        "carrier: 3 elements\n"
        "axioms: pass\n"
        "sep0: pass\n"
        "filters: 4\n"
        "ideals: 4\n"
        "sep: pass\n"
        "calculus:\n"
        "  residuation-quotient: pass\n"
        "  residuation-difference: pass\n"
        "  iterated-quotient: pass\n"
        "  iterated-difference: pass\n"
        "  sum-over-quotient: pass\n"
        "  product-over-difference: pass\n"
        "  sum-over-quotient-sets: pass\n"
        "  product-over-difference-sets: pass\n"
        "  quotient-sum: pass\n"
        "  difference-product: pass\n"
        "result: pass\n");

  RunResult bad = run_on("check", "nonassoc.alg");
  CHECK(bad.out.find("axioms: fail (times not associative at (r, p, s))") !=
        std::string::npos);
  CHECK(bad.out.find("result: fail") != std::string::npos);

  RunResult z6 = run_on("spectrum", "z6.alg");
  CHECK(z6.out.find("spectrum: proper, 2 points (multivalued)\n"
                    "point 0: {0,3}\n"
                    "point 1: {0,2,4}\n"
                    "tplus: {} {0} {1} {0,1}\n"
                    "tminus: {} {0} {1} {0,1}\n") == 0);
  CHECK(z6.out.find("stone space: yes") != std::string::npos);
  CHECK(z6.out.find("stone spectrum: yes") != std::string::npos);

  RunResult dual = run_on("dualize", "z6.alg");
  CHECK(dual.out.find("psi: 1 0\n") != std::string::npos);
  CHECK(dual.out.find("phi: 0 2 1 3\n") != std::string::npos);
  CHECK(dual.out.find("result: pass") != std::string::npos);

  RunResult sep = run_on("separate", "z6.alg", {"--filter", "1,5", "--ideal", "0"});
  CHECK(sep.code == 0);
  CHECK(sep.out == "f0: {1,5}\ni0: {0}\nfilter: {1,2,4,5}\nideal: {0,3}\n");
  RunResult stuck = run_on("separate", "nonsep0.alg", {"--filter", "1", "--ideal", "0"});
  CHECK(stuck.code == 1);
  CHECK(stuck.out.find("stuck: 2 (no prime pair separates the input)") !=
        std::string::npos);
}

TEST_CASE("structured reports") {
  RunResult c3 = run_on("check", "c3.alg", {"--json"});
  REQUIRE(c3.code == 0);
  nlohmann::json doc = nlohmann::json::parse(c3.out);
  CHECK(doc["command"] == "check");
  CHECK(doc["carrier"] == 3);
  CHECK(doc["axioms"]["pass"] == true);
  CHECK(doc["filters"] == 4);
  CHECK(doc["ideals"] == 4);
  CHECK(doc["calculus"]["pass"] == true);
  CHECK(doc["calculus"]["items"].size() == 10);

  RunResult spec = run_on("spectrum", "z6.alg", {"--json"});
  nlohmann::json sdoc = nlohmann::json::parse(spec.out);
  CHECK(sdoc["points"].size() == 2);
  CHECK(sdoc["points"][0]["ideal"] == nlohmann::json::array({"0", "3"}));
  CHECK(sdoc["variant"] == "proper");

  RunResult bad = run_on("check", "nonsep0.alg", {"--json"});
  CHECK(bad.code == 1);
  nlohmann::json bdoc = nlohmann::json::parse(bad.out);
  CHECK(bdoc["sep0"]["pass"] == false);
}

TEST_CASE("graph output") {
  RunResult rep = run_on("represent", "c3.alg", {"--dot"});
  CHECK(rep.code == 0);
  CHECK(rep.out ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n2 [label=\"2\"];\n"
        "  n0 -> n1;\n"
        "  n1 -> n2;\n"
        "}\n");
  RunResult spec = run_on("spectrum", "z6.alg", {"--dot"});
  CHECK(spec.code == 0);
  CHECK(spec.out ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"{0,3}\"];\n"
        "  n1 [label=\"{0,2,4}\"];\n"
        "}\n");
}

TEST_CASE("radical output feeds back into the parser") {
  RunResult conv = run_on("radical", "c3.alg", {"--convex"});
  REQUIRE(conv.code == 0);
  Algebra parsed = parse_algebra(conv.out);
  CHECK(same_algebra(parsed, convex_ops(fixture("c3.alg"))));

  RunResult rad = run_on("radical", "z6.alg");
  REQUIRE(rad.code == 0);
  CHECK(same_algebra(parse_algebra(rad.out), radical_ops(fixture("z6.alg"))));
}

TEST_CASE("identical invocations print identical reports") {
  std::vector<std::vector<std::string>> cases = {
      {"check", "--file", fixture_path("z6.alg")},
      {"check", "--file", fixture_path("z6.alg"), "--json"},
      {"spectrum", "--file", fixture_path("z12.alg"), "--json"},
      {"dualize", "--file", fixture_path("b4.alg")},
      {"represent", "--file", fixture_path("d12.alg"), "--json"},
      {"radical", "--file", fixture_path("b4.alg")},
      {"separate", "--file", fixture_path("z6.alg"), "--filter", "1", "--ideal", "0,3"},
  };
  for (const auto& args : cases) {
    RunResult first = run(args);
    RunResult second = run(args);
    CAPTURE(args[0]);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
