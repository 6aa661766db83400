#ifndef NETBANDIT_IO_HPP
#define NETBANDIT_IO_HPP

#include <string>

#include "netbandit/sim.hpp"

namespace netbandit {

/// Schema: policy,seed,t,instant_regret,cum_regret,avg_regret — one row per
/// (policy, seed, checkpoint), "\n" line endings, 10 significant digits.
void emit_csv(const BatchResult& result, const std::string& path);
std::string csv_string(const BatchResult& result);

/// Self-contained gnuplot script: time-averaged regret per policy with
/// mean +/- std bands, plus the scenario's theorem bound as a reference line
/// when bound_at_n > 0 (plotted as bound/t).
void emit_plot_script(const BatchResult& result, const std::string& path,
                      double bound_at_n = 0.0);

/// Manifest round-trips: loading re-resolves to the identical config set.
void write_manifest(const BatchConfig& cfg, const std::string& out_dir,
                    const std::string& path);
BatchConfig load_manifest(const std::string& path);

}  // namespace netbandit

#endif  // NETBANDIT_IO_HPP
