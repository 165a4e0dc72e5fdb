#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "gcat/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gcat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = gcat::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("count prints the G3 totals") {
  const Run r = run({"count", "--graph", fixture("g3.json"), "--n", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 2 1 1\n1 3 2 1\n2 10 7 3\n3 42 30 12\n4 198 143 55\n");
  const Run csv = run({"count", "--graph", fixture("g3.json"), "--n", "1", "--format", "csv"});
  CHECK(csv.out == "n,c_n(v1),c_n(v2),total\n0,1,1,2\n1,2,1,3\n");
  const Run edge = run({"count", "--graph", fixture("g3.json"), "--n", "3", "--edge", "1"});
  CHECK(edge.out == "0 1\n1 2\n2 7\n3 30\n");
}

TEST_CASE("JSON output parses and is deterministic") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"count", "--n", "5"}, {"radius"}, {"kms", "--n", "3"}, {"series", "--order", "5"},
           {"fock", "--n", "3"}, {"enumerate", "--kind", "trees", "--n", "2"}, {"validate"}}) {
    std::vector<std::string> full = args;
    full.insert(full.end(), {"--graph", fixture("g3.json"), "--format", "json"});
    const Run a = run(full);
    const Run b = run(full);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("radius output") {
  const Run r = run({"radius", "--graph", fixture("g3.json"), "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["method"] == "newton");
  CHECK(std::abs(doc["x0"].get<double>() - 4.0 / 27.0) < 1e-10);
  CHECK(std::abs(doc["t"][1].get<double>() - 2.0 / 9.0) < 1e-8);
  const Run c = run({"radius", "--graph", fixture("g3.json"), "--method", "continuation"});
  CHECK(c.out.find("x0 0.148148148148") != std::string::npos);
  const Run q = run({"radius", "--graph", fixture("g1_n1.json"), "--method", "ratio", "--n", "200"});
  CHECK(q.status == 0);
}

TEST_CASE("enumerate lists objects") {
  const Run r = run({"enumerate", "--graph", fixture("g3.json"), "--kind", "words", "--n", "1"});
  CHECK(r.out == "e1* e1\ne3* e3\ne2* e2\n");
  const Run d = run({"enumerate", "--graph", fixture("g3.json"), "--kind", "dyck", "--n", "1", "--vertex", "2"});
  CHECK(d.out == "U:e2 D:e2\n");
}

TEST_CASE("errors map to distinct diagnostics") {
  const Run missing = run({"count", "--graph", "/no/such/file.json"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("error[file-not-found]") != std::string::npos);
  const Run usage = run({"count", "--graph", fixture("g3.json"), "--format", "xml"});
  CHECK(usage.status == 1);
  CHECK(usage.err.find("error[usage]") != std::string::npos);
  const Run guard = run({"enumerate", "--graph", fixture("g3.json"), "--n", "4", "--budget", "3"});
  CHECK(guard.status == 1);
  CHECK(guard.err.find("error[resource-guard]") != std::string::npos);
  const Run periodic = run({"kms", "--graph", fixture("cycle2.json")});
  CHECK(periodic.status == 1);
  CHECK(periodic.err.find("aperiodicity required") != std::string::npos);
  const Run vertex = run({"count", "--graph", fixture("g3.json"), "--vertex", "7"});
  CHECK(vertex.status == 1);
  CHECK(run({}).status == 1);
}

TEST_CASE("selftest on a periodic graph skips KMS") {
  const Run r = run({"selftest", "--graph", fixture("cycle2.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("kms (aperiodicity required)") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
