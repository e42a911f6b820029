#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "venkov/batch.hpp"
#include "venkov/named_forms.hpp"
#include "venkov/pipeline.hpp"
#include "venkov/report_schema.hpp"

using namespace venkov;
using namespace venkov::testing;

namespace {

FormFile namedFormFile(const std::string& name) {
  FormFile f;
  f.id = name;
  f.gram = namedGram(name);
  f.dim = f.gram.rows();
  return f;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("venkov_test_" + tag + "_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path path() const { return path_; }

  std::string writeFile(const std::string& name, const std::string& content) const {
    const auto file = path_ / name;
    std::ofstream out(file);
    out << content;
    return file.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("pipeline report for the cubic lattice") {
  const PipelineResult r = runPipeline(namedFormFile("Z5"));
  CHECK(r.relevant.size() == 5);
  CHECK(r.hrep.size() == 10);
  REQUIRE(r.vertices.has_value());
  CHECK(r.vertices->coords.size() == 32);
  CHECK(r.primitiveRidges == 0);
  CHECK(r.nonPrimitiveRidges == 40);
  REQUIRE(r.census.has_value());
  CHECK(r.census->counts.at(Dual3Tag::Cube) == 10);
  REQUIRE(r.complex.has_value());
  CHECK(r.complex->triangles.empty());
  REQUIRE(r.cohomology.has_value());
  CHECK(r.cohomology->f0 == 0);
  CHECK(r.cohomology->h1Trivial);
  REQUIRE(r.skeleton.has_value());
  CHECK(r.skeleton->skeletonMatch);
  CHECK(r.skeleton->isolatedVertices == 5);
  REQUIRE(r.ggm.has_value());
  CHECK(r.ggm->v == 5);
  CHECK(r.ggm->e == 0);
  CHECK(r.ggm->k == 5);
  CHECK(r.ggm->cyclomatic == 0);
  CHECK(r.ggm->basicCycleRank == 0);
  CHECK(r.ggm->ggmHolds);
  REQUIRE(r.ordine.has_value());
  CHECK_FALSE(*r.ordine);
  REQUIRE(r.triangleSpan.has_value());
  CHECK(*r.triangleSpan);
  CHECK(r.allGatedChecksPass());

  const ordered_json doc = buildReport(r);
  CHECK(doc["formId"] == "Z5");
  CHECK(doc["dim"] == 5);
  CHECK(doc["gram"][0][0] == "1");
  CHECK(doc["facetPairs"] == 5);
  CHECK(doc["cellVertices"] == 32);
  CHECK(doc["ridgeCounts"]["primitive"] == 0);
  CHECK(doc["ridgeCounts"]["nonPrimitive"] == 40);
  CHECK(doc["dual3Census"]["cube"] == 10);
  CHECK(doc["dual3Census"]["tetrahedron"] == 0);
  CHECK(doc["venkov"]["f1"] == 0);
  CHECK(doc["venkov"]["h1Trivial"] == true);
  CHECK(doc["graph"]["blueEdges"] == 10);
  CHECK(doc["graph"]["isolated"] == 5);
  CHECK(doc["graph"]["ggmHolds"] == true);
  CHECK(doc["ordine3Irreducible"] == false);
  CHECK(doc["skeletonMatch"] == true);
  CHECK(doc["triangleSpanHolds"] == true);
  CHECK_FALSE(doc.contains("timings"));
}

TEST_CASE("pipeline on a two-dimensional form reports geometry only") {
  FormFile f;
  f.id = "hexagon";
  f.gram = makeMatrix({{2, 1}, {1, 2}});
  f.dim = 2;
  const PipelineResult r = runPipeline(f);
  CHECK(r.relevant.size() == 3);
  CHECK(r.vertices->coords.size() == 6);
  CHECK(r.primitiveRidges == 6);
  CHECK(r.nonPrimitiveRidges == 0);
  CHECK_FALSE(r.census.has_value());
  CHECK_FALSE(r.venkovApplicable);
  CHECK_FALSE(r.cohomology.has_value());
  CHECK(r.allGatedChecksPass());

  const ordered_json doc = buildReport(r);
  CHECK(doc["ridgeCounts"]["primitive"] == 6);
  CHECK(doc["dual3Census"].is_null());
  CHECK(doc["venkov"].is_null());
  CHECK(doc["graph"].is_null());
  CHECK(doc["ordine3Irreducible"].is_null());
  CHECK(doc["skeletonMatch"].is_null());
  CHECK(doc["triangleSpanHolds"].is_null());
}

TEST_CASE("pipeline on a three-dimensional form stops checks before the complex") {
  const PipelineResult r = runPipeline(namedFormFile("A3"));
  REQUIRE(r.census.has_value());
  CHECK(r.census->counts.at(Dual3Tag::Tetrahedron) > 0);
  CHECK_FALSE(r.complex.has_value());
  CHECK_FALSE(r.ordine.has_value());
  const ordered_json doc = buildReport(r);
  CHECK(doc["dual3Census"]["tetrahedron"] > 0);
  CHECK(doc["venkov"].is_null());
}

TEST_CASE("stage control and timings") {
  PipelineOptions stopEarly;
  stopEarly.stopAfterStage = "vertices";
  const PipelineResult r = runPipeline(namedFormFile("Z4"), stopEarly);
  CHECK(r.vertices.has_value());
  CHECK_FALSE(r.lattice.has_value());
  CHECK_FALSE(r.census.has_value());
  const ordered_json doc = buildReport(r);
  CHECK(doc["cellVertices"] == 16);
  CHECK(doc["ridgeCounts"].is_null());

  PipelineOptions bogus;
  bogus.stopAfterStage = "nonsense";
  try {
    runPipeline(namedFormFile("Z4"), bogus);
    FAIL("expected an input error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Input);
  }

  PipelineOptions timed;
  timed.timings = true;
  timed.stopAfterStage = "hrep";
  const PipelineResult t = runPipeline(namedFormFile("Z4"), timed);
  REQUIRE(t.stageMillis.size() == 2);
  CHECK(t.stageMillis[0].first == "relevant");
  CHECK(t.stageMillis[1].first == "hrep");
  CHECK(buildReport(t).contains("timings"));
}

TEST_CASE("deeper face lattices than the census needs") {
  PipelineOptions deep;
  deep.downToDim = 0;
  const PipelineResult r = runPipeline(namedFormFile("Z4"), deep);
  REQUIRE(r.lattice.has_value());
  CHECK(r.lattice->hasDim(0));
  CHECK(r.lattice->facesOfDim(0).size() == 16);
  REQUIRE(r.census.has_value());
  CHECK(r.census->counts.at(Dual3Tag::Cube) == 4);
  CHECK(r.allGatedChecksPass());
}

TEST_CASE("pyramid cycle opt-out is reflected in the rank fields") {
  PipelineOptions noPyramid;
  noPyramid.pyramidTc = false;
  const PipelineResult r = runPipeline(namedFormFile("D4"), noPyramid);
  REQUIRE(r.ggm.has_value());
  CHECK(r.basicCycleRankNoPyramidTc == r.ggm->basicCycleRank);

  const PipelineResult full = runPipeline(namedFormFile("D4"));
  REQUIRE(full.ggm.has_value());
  CHECK(full.basicCycleRankNoPyramidTc <= full.ggm->basicCycleRank);
  CHECK(full.ggm->ggmHolds);
}

TEST_CASE("report schema lists exactly the report fields") {
  const ordered_json schema = ordered_json::parse(reportSchemaText());
  const ordered_json doc = buildReport(runPipeline(namedFormFile("Z4")));
  for (const auto& [key, value] : doc.items()) {
    CHECK(schema["properties"].contains(key));
  }
  for (const auto& required : schema["required"]) {
    CHECK(doc.contains(required.get<std::string>()));
  }
  // The checked-in copy must match the generator byte for byte.
  std::ifstream in(std::string(VENKOV_DOCS_DIR) + "/report.schema.json");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == reportSchemaText());
}

TEST_CASE("batch runs are deterministic across job counts") {
  TempDir dir("batch");
  for (const char* name : {"Z4", "A4", "D4"}) {
    dir.writeFile(std::string(name) + ".form", formFileText(name));
  }
  dir.writeFile("broken.form", "2\n1 2\n");
  dir.writeFile("notpd.form", "2\n1 2\n2 1\n");

  const auto paths = collectBatchInputs(dir.path().string());
  REQUIRE(paths.size() == 5);
  const BatchResult serial = runBatch(paths, {}, 1);
  const BatchResult parallel = runBatch(paths, {}, 4);
  CHECK(serial.reportsText == parallel.reportsText);
  CHECK(serial.summaryText == parallel.summaryText);
  CHECK(serial.exitCode == 1);  // two input errors, no internal errors

  const ordered_json summary = ordered_json::parse(serial.summaryText);
  CHECK(summary["inputs"] == 5);
  CHECK(summary["ok"] == 3);
  CHECK(summary["inputErrors"] == 2);
  CHECK(summary["internalErrors"] == 0);
  CHECK(summary["checks"]["ggmHolds"]["pass"] == 3);
  CHECK(summary["checks"]["ggmHolds"]["fail"] == 0);
  CHECK(summary["status"].size() == 5);
  CHECK(summary["status"][0]["formId"] == "A4");
  CHECK(summary["status"][3]["status"] == "input_error");
  CHECK(summary["status"][3].contains("detail"));

  // One report line per successful form, in input order.
  std::size_t lines = 0;
  for (char c : serial.reportsText) {
    lines += c == '\n';
  }
  CHECK(lines == 3);
  CHECK(serial.outcomes[0].formId == "A4");
  CHECK(serial.outcomes[0].status == "ok");
  CHECK(serial.outcomes[3].status == "input_error");
}

TEST_CASE("batch list files and empty batches") {
  TempDir dir("batchlist");
  const std::string z4 = dir.writeFile("Z4.form", formFileText("Z4"));
  const std::string list = dir.writeFile(
      "inputs.txt", "# forms\n\n" + z4 + "\n   " + z4 + "  \n");
  const auto paths = collectBatchInputs(list);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == z4);
  CHECK(paths[1] == z4);

  const BatchResult empty = runBatch({}, {}, 4);
  CHECK(empty.exitCode == 2);

  const BatchResult missing = runBatch({dir.path().string() + "/absent.form"}, {}, 1);
  CHECK(missing.exitCode == 1);
  CHECK(missing.outcomes[0].status == "input_error");

  CHECK_THROWS_AS(collectBatchInputs(dir.path().string() + "/no_such_list.txt"), Error);
}
