#include "maglt/sweep.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace maglt::verifier {

Target target_from_string(const std::string& name) {
  if (name == "main2d") return Target::main2d;
  if (name == "mainequiv") return Target::mainequiv;
  if (name == "main3d") return Target::main3d;
  if (name == "osc1d") return Target::osc1d;
  throw std::domain_error("unknown target '" + name +
                          "' (expected main2d, mainequiv, main3d or osc1d)");
}

std::string to_string(Target t) {
  switch (t) {
    case Target::main2d: return "main2d";
    case Target::mainequiv: return "mainequiv";
    case Target::main3d: return "main3d";
    case Target::osc1d: return "osc1d";
  }
  return "?";
}

namespace {

void require_unused_default(const std::vector<double>& dim, std::size_t defaults,
                            const char* dim_name, Target target) {
  if (dim.size() > defaults)
    throw std::domain_error(std::string("sweep: grid dimension '") + dim_name +
                            "' is not used by target " + to_string(target));
}

BoundReport evaluate_row(const OscillatorParams& p, Target target,
                         std::optional<double> rho, double tolerance) {
  switch (target) {
    case Target::main2d:
      return verify_main_2d(p, rho.value_or(1.0), tolerance);
    case Target::mainequiv:
      return verify_mainequiv(p.omega1, p.omega2, p.mu, p.gamma, tolerance);
    case Target::main3d:
      return verify_main_3d(p, rho.value_or(quadratic_sharp_constant(p.gamma)), tolerance);
    case Target::osc1d: {
      auto rep = verify_osc1d(p.omega1, p.mu, p.gamma, tolerance);
      if (rho) rep = make_report(rep.lhs, rep.rhs, *rho, tolerance);
      return rep;
    }
  }
  throw std::domain_error("sweep: bad target");
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepGrid& grid, Target target,
                                unsigned threads, double tolerance) {
  const bool use_omega2 = target != Target::osc1d;
  const bool use_omega3 = target == Target::main3d;
  const bool use_B = target == Target::main2d || target == Target::main3d;

  if (use_omega3 && grid.omega3.empty())
    throw std::domain_error("sweep: target main3d needs an omega3 grid");
  if (!use_omega3 && !grid.omega3.empty())
    require_unused_default(grid.omega3, 0, "omega3", target);
  if (!use_B) require_unused_default(grid.B, 1, "B", target);
  if (!use_omega2) require_unused_default(grid.omega2, 1, "omega2", target);
  for (const auto& dim : {grid.B, grid.omega1, grid.omega2, grid.mu, grid.gamma})
    if (dim.empty()) return {};

  // materialize rows in grid order: B, omega1, omega2, [omega3,] mu, gamma
  std::vector<SweepRow> rows;
  const std::vector<double> one{1.0};
  const auto& Bs = use_B ? grid.B : one;
  const auto& w2s = use_omega2 ? grid.omega2 : one;
  const auto& w3s = use_omega3 ? grid.omega3 : one;
  std::int64_t index = 0;
  for (double B : Bs)
    for (double w1 : grid.omega1)
      for (double w2 : w2s)
        for (double w3 : w3s)
          for (double mu : grid.mu)
            for (double g : grid.gamma) {
              SweepRow row;
              row.index = index++;
              row.params.B = B;
              row.params.omega1 = w1;
              row.params.omega2 = use_omega2 ? w2 : 1.0;
              if (use_omega3) row.params.omega3 = w3;
              row.params.mu = mu;
              row.params.gamma = g;
              rows.push_back(std::move(row));
            }

  auto work = [&](SweepRow& row) {
    try {
      row.report = evaluate_row(row.params, target, grid.rho, tolerance);
    } catch (const std::domain_error& e) {
      row.error = e.what();
    }
  };

  unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  n_threads = std::max(1u, std::min<unsigned>(n_threads, rows.size()));
  if (n_threads == 1) {
    for (auto& row : rows) work(row);
  } else {
    // rows write disjoint slots; merge order is the grid order by construction
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) {
      pool.emplace_back([&] {
        for (std::size_t j = next.fetch_add(1); j < rows.size(); j = next.fetch_add(1))
          work(rows[j]);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = static_cast<std::int64_t>(rows.size());
  bool any = false;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      ++s.errors;
      continue;
    }
    if (!row.report.holds) ++s.violations;
    if (!any) {
      s.min_ratio = s.max_ratio = row.report.ratio;
      any = true;
    } else {
      s.min_ratio = std::min(s.min_ratio, row.report.ratio);
      s.max_ratio = std::max(s.max_ratio, row.report.ratio);
    }
  }
  return s;
}

} // namespace maglt::verifier
