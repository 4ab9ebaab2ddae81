#include "koopman/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "koopman/calculus.hpp"

namespace koopman {

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool same_layout(const GridPtr& a, const GridPtr& b) {
  const auto& ea = a->extents();
  const auto& eb = b->extents();
  return a->nq() == b->nq() && a->np() == b->np() &&
         ea.q_min == eb.q_min && ea.q_max == eb.q_max &&
         ea.p_min == eb.p_min && ea.p_max == eb.p_max;
}

double rel_drift(const std::vector<CheckpointComparison>& rows, bool first) {
  if (rows.empty()) return 0.0;
  const double e0 = first ? rows.front().energy_a : rows.front().energy_b;
  double out = 0.0;
  for (const auto& r : rows) {
    const double e = first ? r.energy_a : r.energy_b;
    out = std::max(out, std::abs(e - e0) / std::max(1.0, std::abs(e0)));
  }
  return out;
}

}  // namespace

RealField resample(const RealField& src, const GridPtr& dst) {
  if (src.grid() == dst) return src;
  if (same_layout(src.grid(), dst)) {
    RealField out(dst);
    out.data() = src.data();
    return out;
  }
  const FourierInterpolant interp(src.to_complex());
  RealField out(dst);
  for (int iq = 0; iq < dst->nq(); ++iq)
    for (int ip = 0; ip < dst->np(); ++ip)
      out.at(iq, ip) = interp(dst->q(iq), dst->p(ip)).real();
  return out;
}

ComparisonReport compare_runs(const RunResult& a, const RunResult& b,
                              const CompareOptions& opts) {
  struct Pair {
    std::size_t ia, ib;
  };
  std::vector<Pair> pairs;
  for (std::size_t ia = 0; ia < a.records.size(); ++ia)
    for (std::size_t ib = 0; ib < b.records.size(); ++ib)
      if (std::abs(a.records[ia].t - b.records[ib].t) <= opts.time_tolerance) {
        pairs.push_back({ia, ib});
        break;
      }

  const bool have_density =
      !a.density_primary.empty() && !b.density_primary.empty();
  const bool have_modulus = !a.density_modulus.empty();

  ComparisonReport report;
  // Fix the density reading once, from the first shared checkpoint.
  bool use_modulus = false;
  if (!have_density) {
    report.convention_used = "none";
  } else if (opts.convention == "primary") {
    report.convention_used = "primary";
  } else if (opts.convention == "modulus") {
    use_modulus = true;
    report.convention_used = "modulus";
  } else {
    if (have_modulus && !pairs.empty()) {
      const auto& p0 = pairs.front();
      if (p0.ia < a.density_modulus.size() &&
          p0.ia < a.density_primary.size() &&
          p0.ib < b.density_primary.size()) {
        const RealField ref =
            resample(b.density_primary[p0.ib], a.density_primary[p0.ia].grid());
        const double d_primary = l1_distance(a.density_primary[p0.ia], ref);
        const double d_modulus = l1_distance(a.density_modulus[p0.ia], ref);
        use_modulus = d_modulus < d_primary;
      }
    }
    report.convention_used = use_modulus ? "modulus" : "primary";
  }

  report.min_purity_gap = pairs.empty() ? 0.0 : 1e300;
  for (const auto& pr : pairs) {
    const auto& ra = a.records[pr.ia];
    const auto& rb = b.records[pr.ib];
    CheckpointComparison row;
    row.t = ra.t;
    row.bloch_deviation = std::hypot(ra.n[0] - rb.n[0], ra.n[1] - rb.n[1],
                                     ra.n[2] - rb.n[2]);
    row.purity_gap = rb.purity - ra.purity;
    row.energy_a = ra.energy;
    row.energy_b = rb.energy;
    if (have_density && pr.ia < a.density_primary.size() &&
        pr.ib < b.density_primary.size()) {
      const std::vector<RealField>& pool =
          use_modulus ? a.density_modulus : a.density_primary;
      if (pr.ia < pool.size()) {
        const RealField ref =
            resample(b.density_primary[pr.ib], pool[pr.ia].grid());
        row.density_l1 = l1_distance(pool[pr.ia], ref);
      }
    }
    report.max_bloch_deviation =
        std::max(report.max_bloch_deviation, row.bloch_deviation);
    report.max_density_l1 = std::max(report.max_density_l1, row.density_l1);
    report.min_purity_gap = std::min(report.min_purity_gap, row.purity_gap);
    report.rows.push_back(row);
  }
  report.energy_drift_a = rel_drift(report.rows, true);
  report.energy_drift_b = rel_drift(report.rows, false);
  return report;
}

ComparisonReport compare_directories(const std::filesystem::path& dir_a,
                                     const std::filesystem::path& dir_b,
                                     const std::filesystem::path& out_dir,
                                     const CompareOptions& opts) {
  const RunResult a = load_run_directory(dir_a);
  const RunResult b = load_run_directory(dir_b);
  const ComparisonReport report = compare_runs(a, b, opts);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream csv(out_dir / "metrics.csv");
    csv << "t,bloch_deviation,purity_gap,density_l1,energy_a,energy_b\n";
    for (const auto& r : report.rows)
      csv << num17(r.t) << ',' << num17(r.bloch_deviation) << ','
          << num17(r.purity_gap) << ',' << num17(r.density_l1) << ','
          << num17(r.energy_a) << ',' << num17(r.energy_b) << '\n';
  }
  nlohmann::json j;
  j["run_a"] = dir_a.string();
  j["run_b"] = dir_b.string();
  j["source_a"] = a.source;
  j["source_b"] = b.source;
  j["convention_used"] = report.convention_used;
  j["checkpoints_compared"] = report.rows.size();
  j["max_bloch_deviation"] = report.max_bloch_deviation;
  j["max_density_l1"] = report.max_density_l1;
  j["min_purity_gap"] = report.min_purity_gap;
  j["energy_drift_a"] = report.energy_drift_a;
  j["energy_drift_b"] = report.energy_drift_b;
  std::ofstream(out_dir / "report.json") << j.dump(2) << '\n';
  return report;
}

}  // namespace koopman
