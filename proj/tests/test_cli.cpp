#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "radkit/cli.hpp"

using namespace radkit;
using namespace radkit::cli;
using nlohmann::json;

namespace {

Outcome run(std::vector<std::string> args, Options opt = {}) {
  return run_command(args, opt);
}

// structural validation against the compact schema shipped in docs
void check_schema(const json& rep) {
  static json schema = [] {
    std::ifstream in(std::string(RADKIT_SOURCE_DIR) + "/docs/report-schema.json");
    REQUIRE(in.good());
    json s;
    in >> s;
    return s;
  }();
  CHECK(rep["schemaVersion"] == schema["version"]);
  for (const auto& key : schema["required"]) {
    INFO("missing key " << key.get<std::string>());
    CHECK(rep.contains(key.get<std::string>()));
  }
  std::string status = rep["status"].get<std::string>();
  json allowed = schema["statusValues"];
  CHECK(std::find(allowed.begin(), allowed.end(), json(status)) != allowed.end());
  if (status == "error") {
    CHECK(rep.contains("error"));
  } else {
    CHECK(rep.contains("payload"));
    json prov = schema["provenanceValues"];
    CHECK(std::find(prov.begin(), prov.end(), rep["provenance"]) != prov.end());
  }
}

}  // namespace

TEST_CASE("cli degree") {
  auto out = run({"degree", "zeta(4), rt(2,4)"});
  CHECK(out.exit_code == 0);
  check_schema(out.report);
  CHECK(out.report["payload"]["total"] == 8);
  CHECK(out.report["payload"]["kneser"]["holds"] == true);
  CHECK(out.report["payload"]["perPrime"].contains("2"));

  auto out2 = run({"degree", "rt(-4,4)"});
  CHECK(out2.report["payload"]["total"] == 2);
  CHECK(out2.report["payload"]["index"] == 4);
  CHECK(out2.report["payload"]["kneser"]["specialCase"] == true);

  auto out3 = run({"degree", ""});
  CHECK(out3.report["payload"]["total"] == 1);
}

TEST_CASE("cli verify") {
  auto out = run({"verify", "rt(-4,4)"});
  CHECK(out.exit_code == 0);
  check_schema(out.report);
  CHECK(out.report["payload"]["equal"] == true);
  CHECK(out.report["payload"]["engine"]["total"] == 2);
  // oracle minpoly x^2 - 2x + 2
  json coeffs = out.report["payload"]["oracle"]["minpoly"];
  CHECK(coeffs == json({2, -2, 1}));
}

TEST_CASE("cli gauss") {
  auto out = run({"gauss", "5"});
  CHECK(out.exit_code == 0);
  check_schema(out.report);
  CHECK(out.report["payload"]["coefficients"] == json({0, 1, -1, -1}));
  CHECK(out.report["payload"]["square"] == 5);
  CHECK(out.report["payload"]["squareVerified"] == true);
}

TEST_CASE("cli errors and exit codes") {
  auto bad = run({"degree", "rt(0,2)"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.report["status"] == "error");
  CHECK(bad.report["error"]["kind"] == "parse");
  CHECK(bad.report["error"].contains("offset"));
  check_schema(bad.report);

  auto dom = run({"gauss", "4"});
  CHECK(dom.exit_code == 2);
  CHECK(dom.report["error"]["kind"] == "domain");

  Options tight;
  tight.max_degree = 2;
  auto res = run({"minpoly", "rt(2,8)"}, tight);
  CHECK(res.exit_code == 3);
  CHECK(res.report["error"]["kind"] == "resource");

  auto unk = run({"frobnicate"});
  CHECK(unk.exit_code == 2);
}

TEST_CASE("cli misc verbs") {
  auto idx = run({"index", "zeta(3), rt(2,3)"});
  CHECK(idx.report["payload"]["index"] == 9);

  auto kn = run({"check-kneser", "zeta(3)"});
  CHECK(kn.report["payload"]["holds"] == false);
  CHECK(kn.report["payload"]["oddViolations"] == json({3}));

  auto ab = run({"check-abelian", "-4", "4"});
  CHECK(ab.report["payload"]["abelian"] == true);
  CHECK(ab.report["payload"]["witness"]["m"] == 2);
  CHECK(ab.report["payload"]["witness"]["b"] == 2);

  auto irr = run({"irreducible", "2", "4"});
  CHECK(irr.report["payload"]["irreducible"] == true);
  auto red = run({"irreducible", "-4", "4"});
  CHECK(red.report["payload"]["irreducible"] == false);

  auto mp = run({"minpoly", "zeta(8)*rt(2,2)"});
  CHECK(mp.report["payload"]["degree"] == 2);
  CHECK(mp.report["payload"]["coefficients"] == json({2, -2, 1}));

  auto ex = run({"express", "rt(2,2)"});
  CHECK(ex.report["payload"]["expressible"] == true);
  CHECK(ex.report["payload"]["value"]["conductor"] == 8);
  auto nx = run({"express", "rt(2,3)"});
  CHECK(nx.report["payload"]["expressible"] == false);

  auto sf = run({"subfields", "rt(2,4)"});
  REQUIRE(sf.report["payload"]["applicable"] == true);
  CHECK(sf.report["payload"]["fields"].size() == 3);

  auto en = run({"entangle", "2", "rt(5,2)"});
  CHECK(en.report["payload"]["member"] == true);
  auto en2 = run({"entangle", "2", "rt(5,4)"});
  CHECK(en2.report["payload"]["member"] == false);
  CHECK(en2.report["payload"]["t"] == 2);
  CHECK(en2.report["payload"]["w"] == 2);
}

TEST_CASE("cli finite field base") {
  auto ffv = run({"ff", "5", "8"});
  CHECK(ffv.exit_code == 0);
  CHECK(ffv.report["payload"]["total"] == 2);

  Options fp;
  fp.rational_base = false;
  fp.characteristic = 5;
  auto deg = run({"degree", "8"}, fp);
  CHECK(deg.report["payload"]["total"] == 2);
  auto deg2 = run({"degree", "8, 3"}, fp);  // e = lcm(4, 8, 3) = 24
  CHECK(deg2.report["payload"]["index"] == 6);

  auto bad = run({"ff", "5", "6"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli round trip of printed expressions") {
  for (const char* expr : {"zeta(8)*rt(2,2)", "rt(-4,4)", "rt(12,2)",
                           "zeta(12)^5*rt(7,3)^-2"}) {
    auto out = run({"minpoly", expr});
    REQUIRE(out.exit_code == 0);
    std::string printed = out.report["payload"]["expression"].get<std::string>();
    CHECK(Radical::parse(printed) == Radical::parse(expr));
  }
}

TEST_CASE("batch runs") {
  Options opt;
  std::stringstream in(
      "# corpus of identities\n"
      "verify \"rt(-4,4)\"\n"
      "verify \"rt(5,2), zeta(5)\"\n"
      "\n"
      "degree \"rt(2,4)\"  # trailing comment\n");
  std::stringstream os;
  auto summary = run_batch(in, opt, os);
  CHECK(summary.ok == 3);
  CHECK(summary.mismatch == 0);
  CHECK(summary.error == 0);
  CHECK(summary.exit_code == 0);
  CHECK(os.str().find("summary: 3 ok") != std::string::npos);

  // empty file
  std::stringstream empty, os2;
  auto s2 = run_batch(empty, opt, os2);
  CHECK(s2.ok == 0);
  CHECK(s2.exit_code == 0);

  // ordered output under parallel jobs
  Options par;
  par.jobs = 4;
  std::stringstream in3(
      "index \"rt(2,2)\"\nindex \"rt(2,4)\"\nindex \"rt(2,8)\"\n");
  std::stringstream os3;
  run_batch(in3, par, os3);
  std::string text = os3.str();
  CHECK(text.find("[1]") < text.find("[2]"));
  CHECK(text.find("[2]") < text.find("[3]"));
}

TEST_CASE("batch detects injected mismatch") {
  // harness self-test: override the runner so one synthetic entry disagrees
  Options opt;
  CommandRunner fake = [](const std::vector<std::string>& args,
                          const Options& o) -> Outcome {
    if (args.size() > 1 && args[1] == "synthetic-bad") {
      Outcome out;
      out.report = {{"schemaVersion", kSchemaVersion},
                    {"verb", args[0]},
                    {"status", "mismatch"},
                    {"provenance", "both"},
                    {"payload", {{"equal", false}}}};
      out.exit_code = 1;
      return out;
    }
    return run_command(args, o);
  };
  std::stringstream in(
      "verify \"rt(2,2)\"\n"
      "verify \"synthetic-bad\"\n");
  std::stringstream os;
  auto summary = run_batch(in, opt, os, fake);
  CHECK(summary.ok == 1);
  CHECK(summary.mismatch == 1);
  CHECK(summary.exit_code == 1);
}
