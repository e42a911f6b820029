#ifndef VENKOV_BATCH_HPP
#define VENKOV_BATCH_HPP

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/form_io.hpp"
#include "venkov/pipeline.hpp"

namespace venkov {

// Resolves a batch input argument: a directory yields all regular files in
// it sorted by name; anything else is read as a list file, one path per
// line ('#' comments and blank lines skipped).
inline std::vector<std::string> collectBatchInputs(const std::string& input) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (fs::is_directory(input)) {
    for (const auto& entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file()) {
        paths.push_back(entry.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
  }
  std::ifstream in(input);
  if (!in) {
    throw Error(Error::Kind::Input, "cannot open batch input: " + input);
  }
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    const std::size_t last = line.find_last_not_of(" \t\r");
    paths.push_back(line.substr(first, last - first + 1));
  }
  return paths;
}

struct BatchFormOutcome {
  std::string path;
  std::string formId;
  std::string status;  // ok | check_failed | input_error | internal_error
  std::string detail;
  std::string reportLine;  // compact JSON, empty if the form errored
  bool gatedChecksPass = false;
  ordered_json report;     // null if the form errored
};

struct BatchResult {
  std::vector<BatchFormOutcome> outcomes;  // input order
  std::string reportsText;                 // newline-delimited JSON
  std::string summaryText;                 // pretty JSON
  int exitCode = 0;
};

namespace detail {

inline void tallyCheck(ordered_json& bucket, const ordered_json& value) {
  if (value.is_null()) {
    bucket["notApplicable"] = bucket["notApplicable"].get<std::size_t>() + 1;
  } else if (value.get<bool>()) {
    bucket["pass"] = bucket["pass"].get<std::size_t>() + 1;
  } else {
    bucket["fail"] = bucket["fail"].get<std::size_t>() + 1;
  }
}

}  // namespace detail

// Runs the pipeline over many form files with a worker pool. Workers fill
// preallocated slots, so report content and order are independent of the
// parallelism degree.
inline BatchResult runBatch(const std::vector<std::string>& paths,
                            const PipelineOptions& options, std::size_t jobs) {
  BatchResult result;
  if (paths.empty()) {
    result.exitCode = 2;
    result.summaryText = "{\n  \"inputs\": 0\n}\n";
    return result;
  }
  result.outcomes.resize(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < paths.size(); i = next.fetch_add(1)) {
      BatchFormOutcome& slot = result.outcomes[i];
      slot.path = paths[i];
      try {
        FormFile form = loadFormFile(paths[i]);
        slot.formId = form.id;
        PipelineResult run = runPipeline(std::move(form), options);
        slot.report = buildReport(run);
        slot.reportLine = slot.report.dump();
        slot.gatedChecksPass = run.allGatedChecksPass();
        slot.status = slot.gatedChecksPass ? "ok" : "check_failed";
      } catch (const Error& e) {
        slot.status = e.kind() == Error::Kind::Input ? "input_error" : "internal_error";
        slot.detail = e.what();
        if (slot.formId.empty()) {
          slot.formId = fileStem(paths[i]);
        }
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, paths.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }

  std::size_t ok = 0, checkFailed = 0, inputErrors = 0, internalErrors = 0;
  ordered_json checks;
  for (const char* name :
       {"h1Trivial", "ggmHolds", "skeletonMatch", "triangleSpanHolds", "ordine3Irreducible"}) {
    checks[name] = {{"pass", 0}, {"fail", 0}, {"notApplicable", 0}};
  }
  ordered_json statuses = ordered_json::array();
  std::ostringstream reports;
  for (const BatchFormOutcome& slot : result.outcomes) {
    if (slot.status == "ok") {
      ++ok;
    } else if (slot.status == "check_failed") {
      ++checkFailed;
    } else if (slot.status == "input_error") {
      ++inputErrors;
    } else {
      ++internalErrors;
    }
    if (!slot.reportLine.empty()) {
      reports << slot.reportLine << '\n';
      const ordered_json& rep = slot.report;
      detail::tallyCheck(checks["h1Trivial"],
                         rep["venkov"].is_null() ? ordered_json() : rep["venkov"]["h1Trivial"]);
      detail::tallyCheck(checks["ggmHolds"],
                         rep["graph"].is_null() ? ordered_json() : rep["graph"]["ggmHolds"]);
      detail::tallyCheck(checks["skeletonMatch"], rep["skeletonMatch"]);
      detail::tallyCheck(checks["triangleSpanHolds"], rep["triangleSpanHolds"]);
      detail::tallyCheck(checks["ordine3Irreducible"], rep["ordine3Irreducible"]);
    }
    ordered_json status = {{"formId", slot.formId}, {"file", slot.path}, {"status", slot.status}};
    if (!slot.detail.empty()) {
      status["detail"] = slot.detail;
    }
    statuses.push_back(std::move(status));
  }
  ordered_json summary = {{"inputs", paths.size()},
                          {"ok", ok},
                          {"checkFailures", checkFailed},
                          {"inputErrors", inputErrors},
                          {"internalErrors", internalErrors},
                          {"checks", std::move(checks)},
                          {"status", std::move(statuses)}};
  result.reportsText = reports.str();
  result.summaryText = summary.dump(2) + "\n";
  if (internalErrors > 0) {
    result.exitCode = 3;
  } else if (checkFailed > 0 || inputErrors > 0) {
    result.exitCode = 1;
  }
  return result;
}

}  // namespace venkov

#endif  // VENKOV_BATCH_HPP
