#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ajc/errors.hpp"
#include "ajc/json_io.hpp"
#include "ajc/knot_table.hpp"
#include "ajc/pipeline.hpp"
#include "ajc/recurrence.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {

std::string apoly_file(const std::string& extra = "") {
  return R"({"name": "x", "A": [[1, 0, "1"], [0, 6, "1"]], "c_plus": 3, "c_minus": 0)" + extra + "}";
}

const FileResolver resolver = [](const std::string&) { return apoly_file(R"(, "source_note": "test")"); };

const StageReport& stage(const PipelineReport& r, const std::string& name) {
  for (const auto& s : r.stages)
    if (s.stage == name) return s;
  FAIL("no stage " << name);
  throw std::logic_error("unreachable");
}

PipelineConfig quick() {
  PipelineConfig c;
  c.identity_colors = 4;
  c.max_order = 2;
  c.max_deg_m = 16;
  c.cable_recurrence = false;
  return c;
}

}  // namespace

TEST_CASE("ingest: bundled table") {
  const auto t = bundled_table();
  CHECK(t.size() == 6);
  for (const auto& k : t) {
    CAPTURE(k.name);
    CHECK(k.has_jones_source());
    if (k.apoly) CHECK_FALSE(k.apoly_source.empty());
  }
  CHECK(find_knot(t, "4_1").name == "figure-8");
  CHECK(find_knot(t, "T(2,3)").name == "trefoil");
  CHECK_FALSE(find_knot(t, "6_1").apoly);
  try {
    (void)find_knot(t, "7_4");
    FAIL("expected an error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("trefoil") != std::string::npos);
  }
}

TEST_CASE("ingest: provenance is required") {
  const std::string table = R"({"knots": [
    {"name": "k", "engine": {"kind": "torus", "p": 2, "q": 3, "source": "s"},
     "apoly": "apoly/x.json", "two_bridge": true}]})";
  CHECK(parse_table(table, "t", resolver).size() == 1);
  const FileResolver bare = [](const std::string&) { return apoly_file(); };
  CHECK_THROWS_AS(parse_table(table, "t", bare), SchemaError);
  const std::string no_source = R"({"knots": [
    {"name": "k", "engine": {"kind": "torus", "p": 2, "q": 3}, "two_bridge": true}]})";
  CHECK_THROWS_AS(parse_table(no_source, "t", resolver), SchemaError);
}

TEST_CASE("ingest: empty and malformed tables") {
  std::vector<std::string> warnings;
  CHECK(parse_table("", "empty.json", resolver, &warnings).empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("empty.json") != std::string::npos);

  const std::string bad = "{\"knots\": [\n  {\"name\": \"a\", \"engine\": {\"kind\": \"unknot\", \"source\": \"s\"}},\n"
                          "  {\"name\": \"b\", \"engine\": {\"kind\": \"spiral\", \"source\": \"s\"}}\n]}";
  try {
    (void)parse_table(bad, "bad.json", resolver);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.json") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_table("{\"knots\": [", "trunc.json", resolver), SchemaError);
}

TEST_CASE("ingest: files and merging") {
  const auto dir = std::filesystem::temp_directory_path() / "ajc_test_ingest";
  std::filesystem::create_directories(dir / "apoly");
  std::ofstream(dir / "apoly" / "x.json") << apoly_file(R"(, "source_note": "test")");
  std::ofstream(dir / "t.json") << R"({"knots": [
    {"name": "trefoil", "engine": {"kind": "torus", "p": 2, "q": 3, "source": "s"},
     "apoly": "apoly/x.json", "two_bridge": false}]})";
  const auto over = ingest_table((dir / "t.json").string());
  REQUIRE(over.size() == 1);
  CHECK(over[0].apoly_source == "test");
  const auto merged = merge_tables(bundled_table(), over);
  CHECK(merged.size() == 6);
  CHECK_FALSE(find_knot(merged, "trefoil").two_bridge);
  CHECK_THROWS_AS(ingest_table((dir / "missing.json").string()), SchemaError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("json: round trips") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) {
    const LaurentT f = random_laurent(rng);
    CHECK(jsonio::laurent_from_json(jsonio::to_json(f)) == f);
    const TorusOp op = random_op(rng, 3, 3, -1);
    CHECK(jsonio::torus_from_json(jsonio::to_json(op)) == op);
    const CommPoly p = random_comm(rng, 3, 3, 4).scaled(frac(1, 3));
    CHECK(jsonio::commpoly_from_json(jsonio::to_json(p)) == p);
  }
  CHECK_THROWS_AS(jsonio::torus_from_json(jsonio::Json::parse(R"({"terms": 3})")), SchemaError);
}

TEST_CASE("pipeline: missing A-polynomial names the field") {
  const auto rep = run_pipeline(find_knot(bundled_table(), "6_1"), 5, quick());
  const StageReport& a = stage(rep, "apoly");
  CHECK(a.status == "error");
  CHECK(a.error.find("\"apoly\"") != std::string::npos);
  CHECK(stage(rep, "ajcheck").status == "skipped");
  CHECK(stage(rep, "jones").status == "ok");
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("pipeline: unmet hypothesis is recorded") {
  PipelineConfig c = quick();
  c.cable_recurrence = true;
  c.max_order = 3;
  // The bounds are too small for a recurrence; only the hypothesis bookkeeping is checked.
  const auto rep = run_pipeline(find_knot(bundled_table(), "figure-8"), 3, c);
  const StageReport& cr = stage(rep, "cable_recurrence");
  CHECK(cr.inputs.at("hypothesis") == "unmet");
  CHECK(cr.outputs.contains("note"));
  REQUIRE(stage(rep, "degrees").status == "ok");
  CHECK(stage(rep, "degrees").outputs.at("cable_degree_law").at("hypothesis") == "unmet");
}

TEST_CASE("pipeline: trefoil cable r = 13") {
  PipelineConfig c = quick();
  c.cable_recurrence = true;
  c.max_deg_m = 128;
  const auto rep = run_pipeline(find_knot(bundled_table(), "trefoil"), 13, c);
  for (const auto& s : rep.stages) {
    CAPTURE(s.stage);
    CAPTURE(s.error);
    CHECK((s.status == "ok" || s.status == "match"));
  }
  CHECK(rep.verdict == Verdict::Match);
  REQUIRE(rep.stages.size() == 6);
  CHECK(stage(rep, "degrees").outputs.value("slopes_match_crossings", false));
  CHECK(stage(rep, "degrees").outputs.at("cable_degree_law").value("holds", false));
  CHECK(stage(rep, "ajcheck").outputs.at("theorem_range").value("holds", false));
}

TEST_CASE("pipeline: reports are deterministic") {
  const auto knots = std::vector<KnotRecord>{find_knot(bundled_table(), "unknot"), find_knot(bundled_table(), "6_1")};
  PipelineConfig c = quick();
  const auto a = run_pipelines(knots, 5, c);
  c.workers = 2;
  const auto b = run_pipelines(knots, 5, c);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ja = a[i].to_json(), jb = b[i].to_json();
    ja["config"].erase("workers");
    jb["config"].erase("workers");
    CHECK(ja.dump() == jb.dump());
  }
  CHECK(a[0].knot == "unknot");
  CHECK_THROWS_AS(run_pipeline(knots[0], 4, c), InvalidInput);
}
