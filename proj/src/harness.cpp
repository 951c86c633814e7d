#include "peanuts/harness.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "peanuts/exact.hpp"

namespace peanuts {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const char* command_name(Command command) {
  switch (command) {
    case Command::Count: return "count";
    case Command::Exact: return "exact";
    case Command::List: return "list";
    case Command::Stats: return "stats";
  }
  return "?";
}

std::string csv_field(const ordered_json& value) {
  if (value.is_string()) {
    std::string s = value.get<std::string>();
    if (s.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  }
  if (value.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
    return buf;
  }
  return value.dump();
}

void emit_report(const ordered_json& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    out << report.dump(2) << "\n";
    return;
  }
  std::string header, row;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    row += csv_field(it.value());
  }
  out << header << "\n" << row << "\n";
}

std::uint64_t derive_seed() {
  const auto ticks = std::chrono::system_clock::now().time_since_epoch().count();
  return SplitMix64(static_cast<std::uint64_t>(ticks)).next();
}

ordered_json base_report(const RunConfig& config, const Graph& g, const DegeneracyInfo& info,
                         const PatternSpec& spec) {
  ordered_json report;
  report["graph"] = config.input_path;
  report["n"] = g.num_vertices();
  report["m"] = g.num_edges();
  report["degeneracy"] = info.degeneracy;
  report["d_max"] = g.max_degree();
  report["command"] = command_name(config.command);
  report["pattern"] = pattern_name(config.pattern);
  report["k"] = config.k;
  report["h"] = spec.h;
  return report;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.k < 3) {
    err << "error: --k must be >= 3\n";
    return 1;
  }
  if ((config.pattern == PatternKind::K2Type1 || config.pattern == PatternKind::K2Type2) &&
      config.k < 4) {
    err << "error: (k,2) patterns require --k >= 4\n";
    return 1;
  }
  if (config.samples < 1) {
    err << "error: --samples must be >= 1\n";
    return 1;
  }
  if (config.threads < 1) {
    err << "error: --threads must be >= 1\n";
    return 1;
  }

  BuildResult input;
  try {
    input = load_edge_list(config.input_path);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  const Graph& g = input.graph;
  const DegeneracyInfo info = degeneracy_order(g);
  const PatternSpec spec = make_pattern(config.pattern, config.k, g, info);
  const std::uint64_t seed = config.seed.value_or(derive_seed());

  switch (config.command) {
    case Command::Count: {
      const Estimate est = config.mode == Mode::InverseTS
                               ? inverse_ts(g, spec, config.samples, seed, config.threads)
                               : peanuts(g, spec, config.samples, seed, config.threads);
      if (est.low_confidence) {
        err << "warning: only " << est.nonzero_samples
            << " samples had nonzero contribution (< 5000); the estimate may have "
               "substantial error; consider "
            << (config.mode == Mode::InverseTS ? "--mode peanuts or a larger --samples"
                                               : "a larger --samples")
            << "\n";
      }
      ordered_json report = base_report(config, g, info, spec);
      report["mode"] = mode_name(config.mode);
      report["samples"] = est.samples;
      report["nonzero_samples"] = est.nonzero_samples;
      report["normalizer"] = est.normalizer;
      report["estimate"] = est.value;
      report["low_confidence"] = est.low_confidence;
      report["seed"] = est.seed;
      report["elapsed_seconds"] = est.elapsed_seconds;
      emit_report(report, config.output, out);
      return 0;
    }
    case Command::Exact: {
      const ExactCounts counts = exact_counts(g, config.k);
      ordered_json report = base_report(config, g, info, spec);
      report["mode"] = mode_name(config.mode);
      report["samples"] = config.samples;
      report["nonzero_samples"] = 0;
      report["normalizer"] = 0.0;
      report["kclique"] = counts.kclique;
      report["k1"] = counts.k1;
      report["k2_type1"] = counts.k2_type1;
      report["k2_type2"] = counts.k2_type2;
      report["low_confidence"] = false;
      report["seed"] = seed;
      report["elapsed_seconds"] = counts.elapsed_seconds;
      emit_report(report, config.output, out);
      return 0;
    }
    case Command::List: {
      const auto start = Clock::now();
      const std::vector<VertexList> instances =
          list_near_cliques(g, spec, config.samples, seed, config.mode, config.max_list);
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (config.output == OutputFormat::Json) {
        ordered_json report = base_report(config, g, info, spec);
        report["mode"] = mode_name(config.mode);
        report["samples"] = config.samples;
        report["count"] = instances.size();
        report["seed"] = seed;
        report["elapsed_seconds"] = elapsed;
        ordered_json lists = ordered_json::array();
        for (const VertexList& inst : instances) {
          std::vector<std::uint64_t> labels;
          labels.reserve(inst.size());
          for (Vertex v : inst) labels.push_back(input.to_original[v]);
          std::sort(labels.begin(), labels.end());
          lists.push_back(labels);
        }
        report["instances"] = std::move(lists);
        out << report.dump(2) << "\n";
      } else {
        for (const VertexList& inst : instances) {
          std::vector<std::uint64_t> labels;
          labels.reserve(inst.size());
          for (Vertex v : inst) labels.push_back(input.to_original[v]);
          std::sort(labels.begin(), labels.end());
          for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ' ';
            out << labels[i];
          }
          out << "\n";
        }
      }
      return 0;
    }
    case Command::Stats: {
      const auto start = Clock::now();
      const PhiTable phi = phi_table(g, info, spec.h);
      ordered_json report = base_report(config, g, info, spec);
      report["phi"] = phi.total;
      if (config.with_exact) {
        const ExactCounts counts = exact_counts(g, config.k);
        report["kclique"] = counts.kclique;
        report["k1"] = counts.k1;
        report["k2_type1"] = counts.k2_type1;
        report["k2_type2"] = counts.k2_type2;
        auto ratio = [&](std::uint64_t count) -> ordered_json {
          if (counts.kclique == 0) return nullptr;
          return static_cast<double>(count) / static_cast<double>(counts.kclique);
        };
        report["ratio_k1"] = ratio(counts.k1);
        report["ratio_k2_type1"] = ratio(counts.k2_type1);
        report["ratio_k2_type2"] = ratio(counts.k2_type2);
      }
      report["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
      emit_report(report, config.output, out);
      return 0;
    }
  }
  err << "error: unknown command\n";
  return 1;
}

} // namespace peanuts
