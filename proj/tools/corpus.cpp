#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "moran/certificates.hpp"
#include "moran/density.hpp"
#include "moran/errors.hpp"
#include "moran/spectrum.hpp"
#include "moran/system.hpp"
#include "moran/tiling.hpp"

namespace moran::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t level_param(const std::map<std::string, std::string>& kv, const std::string& key,
                        std::size_t fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : static_cast<std::size_t>(std::stoul(it->second));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string observe(const MoranSystem& system, const std::string& check,
                    const std::map<std::string, std::string>& kv, std::uint64_t seed) {
  if (check == "validate") return system.all_admissible() ? "admissible" : "invalid";
  if (check == "certify") {
    CertifyOptions opt;
    opt.seed = seed;
    return std::string(to_string(certify(system, opt).verdict));
  }
  if (check == "qsum") {
    const std::size_t n = level_param(kv, "qsum_level", 4);
    const SpectrumLevel spectrum = level_spectrum(system, n);
    std::vector<double> xis(200);
    for (std::size_t i = 0; i < xis.size(); ++i) {
      xis[i] = -5.0 + 10.0 * static_cast<double>(i) / static_cast<double>(xis.size() - 1);
    }
    double worst = 0.0;
    for (const double q : q_sum_finite(system, n, spectrum.points, xis)) {
      worst = std::max(worst, std::abs(q - 1.0));
    }
    if (worst <= 1e-9) return "1";
    std::ostringstream ss;
    ss << "max |Q-1| = " << worst;
    return ss.str();
  }
  if (check == "density") {
    return analyze_density(system, level_param(kv, "density_level", 14), 4096).verdict;
  }
  if (check == "tiling") {
    const IntervalUnion cover = support_cover(system, level_param(kv, "tiling_level", 10));
    const auto window = static_cast<std::int64_t>(floor(cover.diameter()).get_si()) + 1;
    return tiling_check(cover, window, 10000).tiles ? "PASS" : "FAIL";
  }
  throw std::invalid_argument("unknown check '" + check + "'");
}

bool is_parameter(const std::string& key) {
  return key.size() > 6 && key.compare(key.size() - 6, 6, "_level") == 0;
}

}  // namespace

std::map<std::string, std::string> parse_expected(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + t + "'");
    out[trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

const std::vector<CorpusEntry>& corpus() { return detail::embedded_corpus(); }

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  std::vector<CorpusEntry> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() != ".moran") continue;
    CorpusEntry e;
    e.name = entry.path().stem().string();
    e.config = read_file(entry.path());
    auto sidecar = entry.path();
    sidecar.replace_extension(".expected");
    if (std::filesystem::exists(sidecar)) e.expected = read_file(sidecar);
    out.push_back(std::move(e));
  }
  if (ec) throw FileError("cannot read directory " + dir.string() + ": " + ec.message());
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

std::vector<ExampleOutcome> run_corpus(const std::vector<CorpusEntry>& entries, std::uint64_t seed) {
  std::vector<ExampleOutcome> out;
  for (const auto& entry : entries) {
    MoranSystem system = parse_system(entry.config);
    system.set_name(entry.name);
    const auto kv = parse_expected(entry.expected);
    for (const auto& [key, value] : kv) {
      if (is_parameter(key)) continue;
      ExampleOutcome o{entry.name, key, value, {}, false};
      try {
        o.observed = observe(system, key, kv, seed);
      } catch (const std::exception& ex) {
        o.observed = std::string("error: ") + ex.what();
      }
      o.ok = o.observed == o.expected;
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace moran::cli
