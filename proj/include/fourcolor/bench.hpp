#pragma once

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "fourcolor/dual.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/tait.hpp"

namespace fourcolor {

struct BenchConfig {
  std::vector<int> sizes{20, 40, 80, 160};
  std::uint64_t seed = 1;
  int trials = 20;
  ColorConfig color{};
  int size_guard = 4000;
};

struct BenchRow {
  int n = 0;                 // triangulation vertices
  double mean_m = 0;         // cubic edges
  double mean_recolored = 0;
  double mean_rotations = 0;
  double mean_wall_ms = 0;   // informational only, excluded from determinism
  int failures = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double fitted_exponent = 0;      // slope of log(recolored) over log(m)
  double linear_residual = 0;      // rms residual of the best c*m fit
  double quadratic_residual = 0;   // rms residual of the best c*m^2 fit

  /// Deterministic part of the report (wall times stripped).
  nlohmann::json json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const BenchRow& r : rows)
      rows_json.push_back({{"n", r.n},
                           {"mean_m", r.mean_m},
                           {"mean_recolored", r.mean_recolored},
                           {"mean_rotations", r.mean_rotations},
                           {"failures", r.failures}});
    return {{"rows", rows_json},
            {"fitted_exponent", fitted_exponent},
            {"linear_residual", linear_residual},
            {"quadratic_residual", quadratic_residual}};
  }
};

/// Seeded scaling run: random maximal planar graphs per size, full coloring
/// pipeline on each dual, counter means fitted against m and m^2.
inline BenchReport bench(const BenchConfig& cfg) {
  BenchReport report;
  for (int n : cfg.sizes) {
    if (n > cfg.size_guard) throw GraphError("bench size exceeds the desk-scale guard");
    BenchRow row;
    row.n = n;
    long long rec = 0, rot = 0, m_total = 0;
    double wall = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      std::uint64_t seed = cfg.seed * 0x9e3779b97f4a7c15ull + n * 1000ull + t;
      try {
        auto gp = random_maximal_planar(n, seed);
        DualResult d = dual_cubic(gp.graph, gp.rot);
        auto t0 = std::chrono::steady_clock::now();
        ColorOutcome r = color_cubic(d.graph, d.rotation, cfg.color);
        auto t1 = std::chrono::steady_clock::now();
        wall += std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (!r.ok()) {
          row.failures += 1;
          continue;
        }
        rec += r.counters.edges_recolored;
        rot += r.counters.rotations;
        m_total += static_cast<long long>(d.graph.num_edges());
      } catch (const GraphError&) {
        row.failures += 1;
      }
    }
    int ok = cfg.trials - row.failures;
    if (ok > 0) {
      row.mean_m = static_cast<double>(m_total) / ok;
      row.mean_recolored = static_cast<double>(rec) / ok;
      row.mean_rotations = static_cast<double>(rot) / ok;
      row.mean_wall_ms = wall / ok;
    }
    report.rows.push_back(row);
  }

  // Log-log slope plus rms residuals of pure m and m^2 models.
  std::vector<double> xs, ys;
  for (const BenchRow& r : report.rows)
    if (r.mean_m > 0 && r.mean_recolored > 0) {
      xs.push_back(std::log(r.mean_m));
      ys.push_back(std::log(r.mean_recolored));
    }
  if (xs.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    double k = static_cast<double>(xs.size());
    report.fitted_exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);

    auto rms_residual = [&](int power) {
      double num = 0, den = 0;
      for (const BenchRow& r : report.rows) {
        double model = std::pow(r.mean_m, power);
        num += model * r.mean_recolored;
        den += model * model;
      }
      double c = den > 0 ? num / den : 0;
      double rss = 0;
      for (const BenchRow& r : report.rows) {
        double diff = r.mean_recolored - c * std::pow(r.mean_m, power);
        rss += diff * diff;
      }
      return std::sqrt(rss / report.rows.size());
    };
    report.linear_residual = rms_residual(1);
    report.quadratic_residual = rms_residual(2);
  }
  return report;
}

}  // namespace fourcolor
