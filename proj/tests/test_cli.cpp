#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "qspec/serialize.hpp"
#include "qspec/verify.hpp"

using namespace qspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/qspec_test_" + name;
}

// [x] with a stray extra term, as a broken q-number would produce
LaurentPoly broken_qnum(std::int64_t x) {
  LaurentPoly p = qnum(x);
  if (x >= 3) p.add_term(x, 1);
  return p;
}

LaurentPoly broken_quantum_dim(int rank, const Weight& w) {
  LaurentPoly num(1), den(1);
  for (const auto& r : positive_roots(rank)) {
    num *= broken_qnum(pair_weight_root(w, r) + rho_pairing(r));
    den *= broken_qnum(rho_pairing(r));
  }
  // the quotient need not be exact any more; keep the numerator instead
  try {
    return exact_div(num, den);
  } catch (const std::exception&) {
    return num;
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("qdim prints the exact polynomial") {
    const auto r = run({"qdim", "--ell", "2", "--weight", "1,1"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(laurent_from_json(j["exact"]) == qnum(2) * qnum(4));
    CHECK(j["classical"] == "8");
  }

  TEST_CASE("qdim --classical") {
    CHECK(run({"qdim", "--ell", "2", "--weight", "1,1", "--classical"}).out == "8\n");
    CHECK(run({"qdim", "--ell", "1", "--weight", "0", "--classical"}).out == "1\n");
    const Json j = Json::parse(run({"qdim", "--ell", "1", "--weight", "0"}).out);
    CHECK(laurent_from_json(j["exact"]) == LaurentPoly(1));
  }

  TEST_CASE("qdim numeric value") {
    const Json j = Json::parse(run({"qdim", "--ell", "2", "--weight", "1,1", "--q", "0.5"}).out);
    CHECK(j["numeric"].get<double>() == doctest::Approx(26.5625));
  }

  TEST_CASE("domain errors exit with 2") {
    CHECK(run({"qdim", "--ell", "2", "--weight", "1,-1"}).code == 2);
    CHECK(run({"qdim", "--ell", "0", "--weight", "1"}).code == 2);
    CHECK(run({"qdim", "--ell", "2", "--weight", "1,1", "--q", "1.2"}).code == 2);
    CHECK(run({"zeta", "--ell", "2", "--s", "5", "--kernel", "gauss"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("weights subcommand") {
    const Json adj = Json::parse(run({"weights", "--ell", "2", "--weight", "1,1"}).out);
    CHECK(adj["entries"].size() == 7);
    const auto t = table_from_json(adj);
    CHECK(t.multiplicity(Weight{0, 0}) == 2);
    const Json triv = Json::parse(run({"weights", "--ell", "3", "--weight", "0,0,0", "--method", "freudenthal"}).out);
    CHECK(triv["entries"].size() == 1);
    const auto cmp = run({"weights", "--ell", "3", "--weight", "1,0,1", "--method", "compare"});
    CHECK(cmp.code == 0);
    CHECK(Json::parse(cmp.out)["mismatches"].empty());
  }

  TEST_CASE("pattern cap from the environment gives exit 3") {
    ::setenv("QSPEC_MAX_PATTERNS", "5", 1);
    const auto r = run({"weights", "--ell", "2", "--weight", "1,1"});
    ::unsetenv("QSPEC_MAX_PATTERNS");
    CHECK(r.code == 3);
    CHECK(r.err.find("resource") != std::string::npos);
  }

  TEST_CASE("disagreeing tables produce a mismatch report") {
    WeightMultiplicityTable a(Weight{1, 1}), b(Weight{1, 1});
    a.add(Weight{0, 0}, 2);
    b.add(Weight{0, 0}, 3);
    const auto diff = diff_tables(a, b);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].find("0") != std::string::npos);
  }

  TEST_CASE("specdim") {
    const Json q = Json::parse(run({"specdim", "--ell", "2", "--q", "0.5", "--weight", "qdim"}).out);
    CHECK(std::abs(q["estimate"].get<double>() - 4.0) < 1e-3);
    const Json inv = Json::parse(run({"specdim", "--ell", "2", "--q", "0.5", "--weight", "qdim-inverse"}).out);
    CHECK(std::abs(inv["estimate"].get<double>() - q["estimate"].get<double>()) < 1e-9);
    const Json cl = Json::parse(run({"specdim", "--ell", "2", "--q", "0.5", "--weight", "classical"}).out);
    CHECK(std::abs(cl["estimate"].get<double>()) < 0.05);
  }

  TEST_CASE("zeta json and csv") {
    const auto j = run({"zeta", "--ell", "2", "--q", "0.5", "--s", "5,6", "--weight", "qdim"});
    CHECK(j.code == 0);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["results"].size() == 2);
    CHECK(parsed["results"][0]["converged"] == true);
    const auto csv = run({"zeta", "--ell", "2", "--s", "5,6", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header, row1, row2, extra;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "s,value,terms_used,tail_estimate");
    CHECK(row1.rfind("5,", 0) == 0);
    CHECK(row2.rfind("6,", 0) == 0);
    CHECK_FALSE(std::getline(lines, extra));
  }

  TEST_CASE("config file with flag overrides") {
    const std::string path = temp_path("config.json");
    {
      std::ofstream f(path);
      f << R"({"ell": 3, "q": 0.3, "towers": [{"k": 0, "eig_model": "pure"}]})";
    }
    const Json a = Json::parse(run({"zeta", "--config", path, "--s", "7"}).out);
    CHECK(a["model"]["ell"] == 3);
    CHECK(a["model"]["q"] == 0.3);
    CHECK(a["model"]["towers"][0]["eig_model"] == "pure");
    const Json b = Json::parse(run({"zeta", "--config", path, "--q", "0.5", "--s", "7"}).out);
    CHECK(b["model"]["q"] == 0.5);
    CHECK(b["model"]["ell"] == 3);
    CHECK(run({"zeta", "--config", path + ".missing", "--s", "7"}).code == 2);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"zeta", "--config", path, "--s", "7"}).code == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("residue subcommand") {
    const auto r = run({"residue", "--ell", "2", "--q", "0.5", "--kernel", "pure", "--p", "4"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["limit"].get<double>() > 0.0);
    CHECK(j["relative_change"].get<double>() < 1e-4);
  }

  TEST_CASE("twisted subcommand") {
    const auto r = run({"twisted", "--split-k", "4", "--split-s", "3"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    const auto& scan = j["scan"];
    REQUIRE(scan.size() == 4);
    for (std::size_t i = 1; i < scan.size(); ++i) CHECK(scan[i]["defect"] < scan[i - 1]["defect"]);
    CHECK(j["split"]["defect"].get<double>() < 1e-12 * j["split"]["scale"].get<double>());
    CHECK(run({"twisted", "--s", "4.5,3.5"}).code == 2);
  }

  TEST_CASE("output file") {
    const std::string path = temp_path("out.json");
    const auto r = run({"-o", path, "qdim", "--ell", "2", "--weight", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const Json j = Json::parse(f);
    CHECK(j["classical"] == "3");
    std::remove(path.c_str());
  }

  TEST_CASE("outputs are byte-identical across runs") {
    const std::vector<std::string> args = {"zeta", "--ell", "3", "--q", "0.8", "--s", "6.5,7"};
    CHECK(run(args).out == run(args).out);
  }

  TEST_CASE("verify quick passes") {
    const auto r = run({"verify", "--profile", "quick"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  }

  TEST_CASE("a corrupted q-number trips oracle-equivalence") {
    VerifyHooks hooks;
    hooks.quantum_dim_exact = broken_quantum_dim;
    const auto report = run_verification(VerifyProfile::Quick, hooks);
    CHECK_FALSE(report.all_passed());
    bool named = false;
    for (const auto& c : report.checks)
      if (c.name == "oracle-equivalence") named = !c.passed;
    CHECK(named);
  }

  TEST_CASE("the installed tool runs") {
    const std::string cmd = std::string(QSPEC_CLI_PATH) + " qdim --ell 2 --weight 1,1 --classical > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = std::string(QSPEC_CLI_PATH) + " qdim --ell 2 --weight 1,-1 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
  }
}
