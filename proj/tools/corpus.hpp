#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace moran::cli {

// One built-in example: a system config and its expected-verdict sidecar.
struct CorpusEntry {
  std::string name;
  std::string config;
  std::string expected;
};

// key=value lines; blank lines and '#' comments are skipped.
// Throws std::invalid_argument on a line without '='.
std::map<std::string, std::string> parse_expected(std::string_view text);

// The corpus compiled into the binary.
const std::vector<CorpusEntry>& corpus();

// Every *.moran in `dir` with its optional *.expected sidecar, sorted by name.
// Throws FileError when the directory cannot be read.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct ExampleOutcome {
  std::string example;
  std::string check;
  std::string expected;
  std::string observed;
  bool ok = false;
};

// Runs the checks named in each sidecar:
//   validate  admissible | invalid
//   certify   PASS | CONDITIONS_FAILED | INCONCLUSIVE
//   qsum      1 (every |Q - 1| <= 1e-9 on a 200-point grid in [-5, 5])
//   density   verdict string of analyze_density
//   tiling    PASS | FAIL for the support cover
// with levels taken from qsum_level (4), density_level (14), tiling_level (10).
std::vector<ExampleOutcome> run_corpus(const std::vector<CorpusEntry>& entries, std::uint64_t seed);

namespace detail {
const std::vector<CorpusEntry>& embedded_corpus();
}

}  // namespace moran::cli
