#ifndef VENKOV_PIPELINE_HPP
#define VENKOV_PIPELINE_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "venkov/cycles.hpp"
#include "venkov/dual_cells.hpp"
#include "venkov/errors.hpp"
#include "venkov/form_io.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/quadratic_form.hpp"
#include "venkov/venkov_complex.hpp"
#include "venkov/voronoi_cell.hpp"

namespace venkov {

using ordered_json = nlohmann::ordered_json;

inline const std::vector<std::string>& stageOrder() {
  static const std::vector<std::string> order = {"relevant", "hrep",  "vertices",
                                                 "faces",    "duals", "checks"};
  return order;
}

struct PipelineOptions {
  int downToDim = -1;          // -1: deep enough for the dual-3 census
  bool pyramidTc = true;       // count apex-pyramid cycles as trivially contractible
  std::string stopAfterStage;  // empty: run everything
  bool timings = false;        // timings are opt-in to keep reports byte-stable
};

struct PipelineResult {
  FormFile form;
  std::vector<LatticeVector> relevant;
  std::vector<HalfSpace> hrep;
  std::optional<VertexSet> vertices;
  std::optional<FaceLattice> lattice;

  std::optional<std::vector<DualCell>> ridgeCells;
  std::size_t primitiveRidges = 0;
  std::size_t nonPrimitiveRidges = 0;
  std::optional<std::vector<RidgeClassification>> ridges;
  std::optional<Dual3Census> census;

  bool venkovApplicable = false;
  std::optional<VenkovComplex> complex;
  std::optional<VenkovGraph> graph;
  std::optional<SkeletonResult> skeleton;
  std::optional<CohomologyResult> cohomology;
  std::optional<GgmResult> ggm;
  std::size_t basicCycleRankNoPyramidTc = 0;
  std::optional<bool> ordine;
  std::optional<bool> triangleSpan;

  std::vector<std::pair<std::string, long long>> stageMillis;

  // Gate for exit code 1: every completed decidable check must hold. The
  // Ordine condition is reported but not gated; plenty of genuine Voronoi
  // parallelohedra (Z^d to start) fail it.
  bool allGatedChecksPass() const {
    if (skeleton && !skeleton->skeletonMatch) {
      return false;
    }
    if (cohomology && !cohomology->h1Trivial) {
      return false;
    }
    if (ggm && !ggm->ggmHolds) {
      return false;
    }
    if (triangleSpan && !*triangleSpan) {
      return false;
    }
    return true;
  }
};

namespace detail {

class StageRunner {
 public:
  StageRunner(PipelineResult& result, const PipelineOptions& options)
      : result_(result), options_(options) {}

  // Runs the stage body with error tagging and optional timing; returns
  // false once the configured stop stage has completed.
  template <typename F>
  bool run(const std::string& name, F&& body) {
    if (stopped_) {
      return false;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const Error& e) {
      throw Error(e.kind(), "stage " + name + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(Error::Kind::Internal, "stage " + name + ": " + e.what());
    }
    if (options_.timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      result_.stageMillis.emplace_back(
          name, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    if (name == options_.stopAfterStage) {
      stopped_ = true;
    }
    return !stopped_;
  }

 private:
  PipelineResult& result_;
  const PipelineOptions& options_;
  bool stopped_ = false;
};

}  // namespace detail

// The per-form pipeline: relevant vectors, H-representation, vertex
// enumeration, face lattice, dual-cell classification, and (for d >= 4) the
// Venkov complex, graph, and the three sufficient-condition checks.
inline PipelineResult runPipeline(FormFile form, const PipelineOptions& options = {}) {
  if (!options.stopAfterStage.empty() &&
      std::find(stageOrder().begin(), stageOrder().end(), options.stopAfterStage) ==
          stageOrder().end()) {
    throw Error(Error::Kind::Input, "unknown stage: " + options.stopAfterStage);
  }
  PipelineResult result;
  result.form = std::move(form);
  const QuadraticForm q(result.form.gram);
  const int d = static_cast<int>(q.dim());
  detail::StageRunner runner(result, options);

  bool go = runner.run("relevant", [&] { result.relevant = relevantVectors(q); });
  go = go && runner.run("hrep", [&] { result.hrep = buildHRep(q, result.relevant); });
  go = go && runner.run("vertices", [&] { result.vertices = enumerateVertices(result.hrep); });

  int depth = d >= 3 ? d - 3 : 0;
  if (options.downToDim >= 0) {
    depth = std::min(options.downToDim, d - 1);
  }
  go = go && runner.run("faces", [&] {
    result.lattice = faceLattice(*result.vertices, result.hrep, depth);
  });

  go = go && runner.run("duals", [&] {
    const FaceLattice& lattice = *result.lattice;
    if (d >= 2 && lattice.hasDim(d - 2)) {
      std::vector<DualCell> cells;
      std::vector<RidgeClassification> ridges;
      for (const FaceRecord& ridge : lattice.facesOfDim(d - 2)) {
        DualCell cell = dualCellOfFace(q, ridge);
        RidgeClassification rc;
        rc.type = ridgeType(cell);
        if (ridge.facetSet.size() != 2) {
          throw Error(Error::Kind::Internal,
                      "duals: ridge lies on " + std::to_string(ridge.facetSet.size()) +
                          " facets instead of 2");
        }
        rc.facetA = result.hrep[static_cast<std::size_t>(ridge.facetSet[0])].normalLattice;
        rc.facetB = result.hrep[static_cast<std::size_t>(ridge.facetSet[1])].normalLattice;
        (rc.type == RidgeType::Primitive ? result.primitiveRidges : result.nonPrimitiveRidges) +=
            1;
        cells.push_back(std::move(cell));
        ridges.push_back(std::move(rc));
      }
      result.ridgeCells = std::move(cells);
      result.ridges = std::move(ridges);
    }
    if (d >= 3 && lattice.hasDim(d - 3)) {
      result.census = dual3Representatives(q, lattice);
    }
  });

  result.venkovApplicable = d >= 4;
  go = go && runner.run("checks", [&] {
    if (!result.venkovApplicable || !result.census || !result.ridges) {
      return;
    }
    result.complex = buildVenkovComplex(*result.census, q.dim());
    result.graph = buildVenkovGraph(result.relevant, *result.ridges);
    result.skeleton = skeletonCheck(*result.complex, *result.graph);
    result.cohomology = cohomologyCheck(*result.complex);
    const RedEdgeIndex idx = RedEdgeIndex::fromGraph(*result.graph);
    std::vector<CycleVector> cycles = halfBeltCycles(*result.ridgeCells, idx);
    std::vector<CycleVector> tcWithout = triviallyContractibleCycles(*result.census, idx, false);
    std::vector<CycleVector> alternate = cycles;
    alternate.insert(alternate.end(), tcWithout.begin(), tcWithout.end());
    if (options.pyramidTc) {
      std::vector<CycleVector> tcWith = triviallyContractibleCycles(*result.census, idx, true);
      cycles.insert(cycles.end(), tcWith.begin(), tcWith.end());
    } else {
      cycles = alternate;
    }
    result.ggm = ggmCheck(*result.graph, cycles, idx);
    result.basicCycleRankNoPyramidTc =
        options.pyramidTc ? ggmCheck(*result.graph, alternate, idx).basicCycleRank
                          : result.ggm->basicCycleRank;
    result.ordine = ordineCheck(*result.census);
    result.triangleSpan = triangleSpanCheck(*result.complex, cycles, idx);
  });
  return result;
}

// The JSON report. Exact integers, rational strings, and booleans only;
// stages that did not run (or do not apply at this dimension) appear as
// null. Timings are attached only when they were recorded.
inline ordered_json buildReport(const PipelineResult& r) {
  ordered_json doc;
  doc["formId"] = r.form.id;
  doc["dim"] = r.form.dim;
  ordered_json gram = ordered_json::array();
  for (std::size_t i = 0; i < r.form.gram.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < r.form.gram.cols(); ++j) {
      row.push_back(toString(r.form.gram(i, j)));
    }
    gram.push_back(std::move(row));
  }
  doc["gram"] = std::move(gram);
  doc["facetPairs"] = r.relevant.size();
  doc["cellVertices"] =
      r.vertices ? ordered_json(r.vertices->coords.size()) : ordered_json();
  if (r.ridgeCells) {
    doc["ridgeCounts"] = {{"primitive", r.primitiveRidges},
                          {"nonPrimitive", r.nonPrimitiveRidges}};
  } else {
    doc["ridgeCounts"] = nullptr;
  }
  if (r.census) {
    ordered_json census;
    for (Dual3Tag tag : {Dual3Tag::Tetrahedron, Dual3Tag::Pyramid, Dual3Tag::Octahedron,
                         Dual3Tag::Prism, Dual3Tag::Cube}) {
      census[dual3TagName(tag)] = r.census->counts.at(tag);
    }
    doc["dual3Census"] = std::move(census);
  } else {
    doc["dual3Census"] = nullptr;
  }
  if (r.cohomology) {
    doc["venkov"] = {{"f0", r.cohomology->f0},
                     {"f1", r.cohomology->f1},
                     {"f2", r.cohomology->f2},
                     {"rankDelta0", r.cohomology->rankDelta0},
                     {"rankDelta1", r.cohomology->rankDelta1},
                     {"h1Trivial", r.cohomology->h1Trivial}};
  } else {
    doc["venkov"] = nullptr;
  }
  if (r.ggm && r.graph && r.skeleton) {
    doc["graph"] = {{"v", r.ggm->v},
                    {"redEdges", r.ggm->e},
                    {"blueEdges", r.graph->blueEdges.size()},
                    {"components", r.ggm->k},
                    {"isolated", r.skeleton->isolatedVertices},
                    {"cyclomatic", r.ggm->cyclomatic},
                    {"basicCycleRank", r.ggm->basicCycleRank},
                    {"basicCycleRankNoPyramidTc", r.basicCycleRankNoPyramidTc},
                    {"ggmHolds", r.ggm->ggmHolds}};
  } else {
    doc["graph"] = nullptr;
  }
  doc["ordine3Irreducible"] = r.ordine ? ordered_json(*r.ordine) : ordered_json();
  doc["skeletonMatch"] =
      r.skeleton ? ordered_json(r.skeleton->skeletonMatch) : ordered_json();
  doc["triangleSpanHolds"] =
      r.triangleSpan ? ordered_json(*r.triangleSpan) : ordered_json();
  if (!r.stageMillis.empty()) {
    ordered_json timings;
    for (const auto& [name, ms] : r.stageMillis) {
      timings[name] = ms;
    }
    doc["timings"] = std::move(timings);
  }
  return doc;
}

}  // namespace venkov

#endif  // VENKOV_PIPELINE_HPP
