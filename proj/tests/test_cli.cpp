#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "transfun/io.hpp"
#include "cli.hpp"

using namespace transfun;

namespace {

std::string data(const std::string& name) { return std::string(TRANSFUN_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("apply") {
  Run r = run_cli({"apply", data("pushforward.json"), data("mu_x.json")});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["space"] == "Y");
  CHECK(j["masses"]["y1"] == 5.0);
  CHECK(j["masses"]["y2"] == 0.0);

  Run conv = run_cli({"apply", data("convolution.json"), data("mu_z3.json")});
  CHECK(conv.code == 0);
  Json c = parse_json(conv.out);
  CHECK(c["masses"]["0"] == 1.0);
  CHECK(c["masses"]["1"] == 2.0);
  CHECK(c["masses"]["2"] == 1.0);

  Run mismatch = run_cli({"apply", data("pushforward.json"), data("mu_y.json")});
  CHECK(mismatch.code == 3);
  CHECK(contains(mismatch.err, "'Y'"));
  CHECK(contains(mismatch.err, "'X'"));
  CHECK(mismatch.out.empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"apply", data("pushforward.json")}).code == 2);
  CHECK(run_cli({"apply", data("missing.json"), data("mu_x.json")}).code == 2);
  CHECK(run_cli({"apply", data("bad_syntax.json"), data("mu_x.json")}).code == 2);
  CHECK(run_cli({"check", data("pushforward.json"), "--trials", "0"}).code == 2);
  CHECK(run_cli({"check", data("pushforward.json"), "--trials", "abc"}).code == 2);
  CHECK(run_cli({"check", data("pushforward.json"), "--axiom", "linear"}).code == 2);
  Run bad = run_cli({"infer", data("bad_node.json")});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "at node /1"));
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("check and infer") {
  Run r = run_cli({"check", data("matrix_defect.json"), "--trials", "200", "--seed", "3"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["spec_digest"].get<std::string>().size() == 16);
  CHECK(j["config"]["trials"] == 200);
  CHECK(j["config"]["seed"] == 3);
  CHECK(j["verdicts"].size() == 7);
  for (const auto& v : j["verdicts"]) {
    if (v["axiom"] == "measure_preserving") {
      CHECK(v["status"] == "refuted_with_witness");
      CHECK(v["witness"]["violation"].get<double>() == doctest::Approx(0.1));
    }
  }

  Run single = run_cli({"check", data("max_with.json"), "--axiom", "bounded", "--trials", "50"});
  CHECK(single.code == 0);
  Json s = parse_json(single.out);
  REQUIRE(s["verdicts"].size() == 1);
  CHECK(s["verdicts"][0]["status"] == "refuted_with_witness");

  Run inf = run_cli({"infer", data("pushforward.json")});
  CHECK(inf.code == 0);
  Json i = parse_json(inf.out);
  for (const auto& v : i["verdicts"]) CHECK(v["status"] == "proved");
}

TEST_CASE("compose and info") {
  const auto dir = std::filesystem::temp_directory_path() / "transfun_cli_test";
  std::filesystem::create_directories(dir);
  const std::string composed = (dir / "composed.json").string();
  Run c = run_cli({"compose", data("matrix_yx.json"), data("pushforward.json"), "--output", composed});
  CHECK(c.code == 0);
  CHECK(c.out.empty());

  Run a = run_cli({"apply", composed, data("mu_x.json")});
  CHECK(a.code == 0);
  Json j = parse_json(a.out);
  CHECK(j["masses"]["x1"] == 2.5);
  CHECK(j["masses"]["x2"] == 2.5);

  Run mismatch = run_cli({"compose", data("pushforward.json"), data("pushforward.json")});
  CHECK(mismatch.code == 3);

  Run info = run_cli({"info", composed});
  CHECK(info.code == 0);
  CHECK(contains(info.out, "root: compose"));
  CHECK(contains(info.out, "nodes: 3"));
  Run minfo = run_cli({"info", data("mu_x.json")});
  CHECK(contains(minfo.out, "total_mass: 5"));
  CHECK(contains(minfo.out, "support: 2"));

  const std::string report = (dir / "report.json").string();
  CHECK(run_cli({"infer", data("kernel.json"), "--output", report}).code == 0);
  Run rinfo = run_cli({"info", report});
  CHECK(contains(rinfo.out, "document: report"));
  CHECK(contains(rinfo.out, "bounded: proved"));
  CHECK(run_cli({"info", data("bad_syntax.json")}).code == 2);
  std::filesystem::remove_all(dir);
}
