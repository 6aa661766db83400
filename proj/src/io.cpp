#include "netbandit/io.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netbandit {

namespace {

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// gnuplot datablock names allow only [A-Za-z0-9_]
std::string block_name(const std::string& policy) {
  std::string s = policy;
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

}  // namespace

std::string csv_string(const BatchResult& result) {
  std::ostringstream out;
  out << "policy,seed,t,instant_regret,cum_regret,avg_regret\n";
  for (const auto& e : result.episodes) {
    for (std::size_t c = 0; c < result.checkpoints.size(); ++c) {
      out << e.policy << "," << e.seed << "," << result.checkpoints[c] << ","
          << fmt10(e.instant[c]) << "," << fmt10(e.cum[c]) << "," << fmt10(e.avg[c])
          << "\n";
    }
  }
  return out.str();
}

void emit_csv(const BatchResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV: " + path);
  out << csv_string(result);
}

void emit_plot_script(const BatchResult& result, const std::string& path,
                      double bound_at_n) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write plot script: " + path);
  out << "# gnuplot script: time-averaged regret, mean +/- std over "
      << result.config.num_seeds << " seeds\n";
  out << "set logscale x\n";
  out << "set xlabel 'round t'\n";
  out << "set ylabel 'time-averaged regret'\n";
  out << "set key top right\n";
  for (const auto& agg : result.aggregates) {
    out << "$data_" << block_name(agg.policy) << " << EOD\n";
    for (std::size_t c = 0; c < result.checkpoints.size(); ++c) {
      out << result.checkpoints[c] << " " << fmt10(agg.mean_avg[c]) << " "
          << fmt10(agg.std_avg[c]) << "\n";
    }
    out << "EOD\n";
  }
  out << "plot \\\n";
  bool first = true;
  for (const auto& agg : result.aggregates) {
    if (!first) out << ", \\\n";
    first = false;
    out << "  $data_" << block_name(agg.policy)
        << " using 1:($2-$3):($2+$3) with filledcurves fs transparent solid 0.2 "
           "notitle, \\\n";
    out << "  $data_" << block_name(agg.policy) << " using 1:2 with lines title '"
        << agg.policy << "'";
  }
  if (bound_at_n > 0.0) {
    out << ", \\\n  " << fmt10(bound_at_n) << "/x with lines dt 2 title 'theorem bound'";
  }
  out << "\n";
}

void write_manifest(const BatchConfig& cfg, const std::string& out_dir,
                    const std::string& path) {
  nlohmann::json j;
  j["tool"] = "netbandit";
  j["version"] = "1.0.0";
  auto now = std::chrono::system_clock::now();
  j["timestamp_unix"] = std::chrono::duration_cast<std::chrono::seconds>(
                            now.time_since_epoch())
                            .count();
  j["output_dir"] = out_dir;
  j["scenario"] = scenario_name(cfg.scenario);
  j["policies"] = cfg.policies;
  j["horizon"] = cfg.horizon;
  j["num_arms"] = cfg.num_arms;
  j["graph_spec"] = cfg.graph_spec;
  j["strategy_spec"] = cfg.strategy_spec;
  j["dist"] = dist_name(cfg.dist);
  if (cfg.fixed_means) j["fixed_means"] = *cfg.fixed_means;
  j["master_seed"] = cfg.master_seed;
  j["num_seeds"] = cfg.num_seeds;
  j["num_checkpoints"] = cfg.num_checkpoints;
  j["cso_literal_k"] = cfg.policy_options.cso_literal_k;
  j["ssr_normalize"] = cfg.policy_options.ssr_normalize;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

BatchConfig load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  nlohmann::json j;
  in >> j;
  BatchConfig cfg;
  cfg.scenario = scenario_from_name(j.at("scenario").get<std::string>());
  cfg.policies = j.at("policies").get<std::vector<std::string>>();
  cfg.horizon = j.at("horizon").get<long>();
  cfg.num_arms = j.at("num_arms").get<int>();
  cfg.graph_spec = j.at("graph_spec").get<std::string>();
  cfg.strategy_spec = j.at("strategy_spec").get<std::string>();
  cfg.dist = dist_from_name(j.at("dist").get<std::string>());
  if (j.contains("fixed_means"))
    cfg.fixed_means = j.at("fixed_means").get<std::vector<double>>();
  cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
  cfg.num_seeds = j.at("num_seeds").get<int>();
  cfg.num_checkpoints = j.at("num_checkpoints").get<int>();
  cfg.policy_options.cso_literal_k = j.at("cso_literal_k").get<bool>();
  cfg.policy_options.ssr_normalize = j.at("ssr_normalize").get<bool>();
  return cfg;
}

}  // namespace netbandit
