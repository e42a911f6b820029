#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "venkov/batch.hpp"
#include "venkov/errors.hpp"
#include "venkov/form_io.hpp"
#include "venkov/named_forms.hpp"
#include "venkov/pipeline.hpp"
#include "venkov/report_schema.hpp"

namespace {

namespace fs = std::filesystem;

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw venkov::Error(venkov::Error::Kind::Input, "cannot write: " + path);
  }
  out << text;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw venkov::Error(venkov::Error::Kind::Input, "cannot read: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Byte-compares produced text against a frozen golden file; returns true
// when they match.
bool goldenMatches(const std::string& goldenPath, const std::string& produced,
                   const std::string& label) {
  const std::string expected = readTextFile(goldenPath);
  if (expected == produced) {
    return true;
  }
  std::cerr << "golden mismatch for " << label << " against " << goldenPath << "\n";
  return false;
}

struct CommonFlags {
  int downToDim = -1;
  bool noPyramidTc = false;
  std::string stage;
  bool timings = false;

  venkov::PipelineOptions pipelineOptions() const {
    venkov::PipelineOptions opts;
    opts.downToDim = downToDim;
    opts.pyramidTc = !noPyramidTc;
    opts.stopAfterStage = stage;
    opts.timings = timings;
    return opts;
  }
};

void addCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--down-to-dim", flags.downToDim,
                  "build the face lattice down to this dimension (debug)");
  cmd->add_flag("--no-pyramid-tc", flags.noPyramidTc,
                "exclude apex-pyramid cycles from the trivially contractible set");
  cmd->add_option("--stage", flags.stage,
                  "stop after this stage: relevant, hrep, vertices, faces, duals, checks");
  cmd->add_flag("--timings", flags.timings,
                "record per-stage wall times (makes reports non-reproducible)");
}

int runCheck(const std::string& file, const std::string& id, const std::string& outPath,
             const std::string& goldenPath, const CommonFlags& flags) {
  venkov::FormFile form = venkov::loadFormFile(file);
  if (!id.empty()) {
    form.id = id;
  }
  venkov::PipelineResult result = venkov::runPipeline(std::move(form), flags.pipelineOptions());
  const std::string text = venkov::buildReport(result).dump(2) + "\n";
  if (outPath.empty()) {
    std::cout << text;
  } else {
    writeTextFile(outPath, text);
  }
  if (!goldenPath.empty() && !goldenMatches(goldenPath, text, "report")) {
    return 1;
  }
  return result.allGatedChecksPass() ? 0 : 1;
}

int runBatchCommand(const std::string& input, const std::string& outDir, std::size_t jobs,
                    const std::string& goldenDir, const CommonFlags& flags) {
  const std::vector<std::string> paths = venkov::collectBatchInputs(input);
  venkov::BatchResult batch = venkov::runBatch(paths, flags.pipelineOptions(), jobs);
  if (batch.exitCode == 2) {
    std::cerr << "no input forms found in " << input << "\n";
    return 2;
  }
  fs::create_directories(outDir);
  writeTextFile((fs::path(outDir) / "reports.ndjson").string(), batch.reportsText);
  writeTextFile((fs::path(outDir) / "summary.json").string(), batch.summaryText);
  for (const venkov::BatchFormOutcome& o : batch.outcomes) {
    if (!o.detail.empty()) {
      std::cerr << o.formId << ": " << o.status << ": " << o.detail << "\n";
    }
  }
  if (!goldenDir.empty()) {
    bool ok = goldenMatches((fs::path(goldenDir) / "reports.ndjson").string(), batch.reportsText,
                            "reports.ndjson");
    ok = goldenMatches((fs::path(goldenDir) / "summary.json").string(), batch.summaryText,
                       "summary.json") &&
         ok;
    if (!ok && batch.exitCode == 0) {
      return 1;
    }
  }
  return batch.exitCode;
}

int runGen(const std::string& dir, const std::string& name, const std::string& outPath) {
  if (!dir.empty()) {
    fs::create_directories(dir);
    for (const std::string& formName : venkov::namedFormCatalog()) {
      const fs::path path = fs::path(dir) / (venkov::formFileStem(formName) + ".form");
      writeTextFile(path.string(), venkov::formFileText(formName));
    }
    return 0;
  }
  const std::string text = venkov::formFileText(name);
  if (outPath.empty()) {
    std::cout << text;
  } else {
    writeTextFile(outPath, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Voronoi parallelohedra of positive definite quadratic forms"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run the pipeline on one form file");
  std::string checkFile, checkId, checkOut, checkGolden;
  CommonFlags checkFlags;
  check->add_option("file", checkFile, "form file")->required();
  check->add_option("--id", checkId, "override the form id (default: file stem)");
  check->add_option("--out", checkOut, "write the report here instead of stdout");
  check->add_option("--golden", checkGolden, "byte-compare the report against this file");
  addCommonFlags(check, checkFlags);

  auto* batch = app.add_subcommand("batch", "run the pipeline over a directory or list file");
  std::string batchInput, batchOut, batchGolden;
  std::size_t jobs = 1;
  CommonFlags batchFlags;
  batch->add_option("input", batchInput, "directory of form files, or a list file")->required();
  batch->add_option("--out", batchOut, "output directory for reports.ndjson and summary.json")
      ->required();
  batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--golden", batchGolden,
                    "byte-compare outputs against frozen files in this directory");
  addCommonFlags(batch, batchFlags);

  auto* gen = app.add_subcommand("gen", "emit Gram files for the named lattices");
  std::string genDir, genName, genOut;
  gen->add_option("--dir", genDir, "write every catalog form into this directory");
  gen->add_option("--name", genName, "named form, e.g. Z5, A4, A5*, D4, D5star");
  gen->add_option("--out", genOut, "output file for --name (default: stdout)");

  auto* schema = app.add_subcommand("schema", "print the report JSON schema");
  std::string schemaOut;
  schema->add_option("--out", schemaOut, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      return runCheck(checkFile, checkId, checkOut, checkGolden, checkFlags);
    }
    if (batch->parsed()) {
      return runBatchCommand(batchInput, batchOut, jobs, batchGolden, batchFlags);
    }
    if (gen->parsed()) {
      if (genDir.empty() == genName.empty()) {
        std::cerr << "gen: pass exactly one of --dir or --name\n";
        return 2;
      }
      return runGen(genDir, genName, genOut);
    }
    if (schema->parsed()) {
      if (schemaOut.empty()) {
        std::cout << venkov::reportSchemaText();
      } else {
        writeTextFile(schemaOut, venkov::reportSchemaText());
      }
      return 0;
    }
  } catch (const venkov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == venkov::Error::Kind::Input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
