// Acceptance suite: every release criterion exercised end to end, one
// pass/fail line each.  Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gabor/duality.hpp"
#include "gabor/euclid_r2.hpp"
#include "gabor/random.hpp"
#include "gabor/s0.hpp"

using namespace gabor;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string label, double budget_seconds)
      : number_(number), label_(std::move(label)), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void finish(bool ok, const std::string& detail = "") {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const bool in_budget = elapsed < budget_;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %2d. %-58s (%.2fs / %.0fs)%s%s\n", pass ? "PASS" : "FAIL", number_,
                label_.c_str(), elapsed, budget_, detail.empty() ? "" : " ",
                detail.c_str());
  }

 private:
  int number_;
  std::string label_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

const std::vector<std::vector<long>> kSweepOrders{{2}, {3}, {4}, {2, 2}};

std::vector<PhaseSubgroup> sweep_subgroups(const GroupSpec& spec) {
  return all_subgroups(spec);
}

void criterion_figure1() {
  Criterion c(1, "strip partition and published translates reproduce", 1.0);
  const r2::Vec2 a1{Rat(2, 5), Rat(1, 5)};
  const auto strips = r2::compute_strips(a1);
  bool ok = strips.size() == 3;
  for (std::size_t i = 0; ok && i < strips.size(); ++i)
    ok = strips[i].z == static_cast<long>(i);
  ok = ok && r2::verify_translates(strips, a1, {{-1, 1}, {0, 0}, {1, -1}});
  const auto own = r2::choose_translates(strips, a1);
  ok = ok && r2::verify_translates(strips, a1, own);
  c.finish(ok);
}

void criterion_volumes() {
  Criterion c(2, "tight-frame certificates at volumes 1/2, 1, 3, 10", 30.0);
  bool ok = true;
  std::string detail;
  for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 2}, {1, 1}, {3, 1}, {10, 1}}) {
    const r2::Mat2 p{Rat(num, den), Rat(0), Rat(0), Rat(1)};
    const r2::Mat2 q{Rat(1), Rat(0), Rat(0), Rat(1)};
    const auto cert = r2::assemble_certificate(p, q, 2);
    Rat total(0);
    for (const auto& s : cert.strips) total += r2::polygon_area(s.piece);
    const auto validation = r2::validate_numeric(cert, 3, 3, 1e-10);
    const bool this_ok = cert.valid() && total == 1 && validation.ok &&
                         cert.volume == Rat(num, den);
    if (!this_ok) detail += " vol=" + rat_to_string(Rat(num, den)) + " failed;";
    ok = ok && this_ok;
  }
  c.finish(ok, detail);
}

void criterion_wexler_raz() {
  Criterion c(3, "wexler-raz equivalence agrees on every sweep instance", 60.0);
  long total = 0, agreements = 0, dual_pairs = 0;
  for (const auto& orders : kSweepOrders) {
    const GroupSpec spec{orders};
    for (const auto& d : sweep_subgroups(spec)) {
      WindowSampler sampler(2026);
      for (int k = 0; k < 20; ++k) {
        const Window g = sampler.window(spec);
        const Window h = sampler.window(spec);
        const DualityReport rep = wexler_raz_check(g, h, d, 1e-9);
        ++total;
        if (rep.verdict) ++agreements;
      }
      // canonical dual pairs exercise the both-true branch
      WindowSampler dual_sampler(4095);
      const Window g = dual_sampler.window(spec);
      if (spectral_report(g, d, 1e-9).is_frame) {
        const DualityReport rep = wexler_raz_check(g, canonical_dual(g, d), d, 1e-9);
        ++total;
        if (rep.verdict && rep.witnesses.at("is_dual_pair").get<bool>()) {
          ++agreements;
          ++dual_pairs;
        }
      }
    }
  }
  c.finish(agreements == total,
           "agreement " + std::to_string(agreements) + "/" + std::to_string(total) +
               ", dual pairs " + std::to_string(dual_pairs));
}

void criterion_janssen() {
  Criterion c(4, "janssen expansion within 1e-10 on 200 seeded instances", 30.0);
  WindowSampler sampler(314159);
  long runs = 0;
  bool ok = true;
  double worst = 0.0;
  for (const auto& orders : std::vector<std::vector<long>>{{4}, {2, 2}}) {
    const GroupSpec spec{orders};
    const auto subgroups = sweep_subgroups(spec);
    for (int k = 0; runs < 200 && k < 100; ++k) {
      for (const auto& d : subgroups) {
        if (runs >= 200) break;
        const Window g = sampler.window(spec);
        const Window h = sampler.window(spec);
        const Mat s = frame_operator(g, h, d);
        const Mat j = janssen_operator(g, h, d);
        const double residual = (s - j).norm();
        const double budget = 1e-10 * std::max(1.0, s.norm());
        worst = std::max(worst, residual / budget);
        ok = ok && residual <= budget;
        ++runs;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "runs %ld, worst %.2e of budget", runs, worst);
  c.finish(ok && runs == 200, buf);
}

void criterion_duality_principle() {
  Criterion c(5, "duality principle bounds and verdicts over the sweep", 60.0);
  bool ok = true;
  long disagreements = 0;
  for (const auto& orders : kSweepOrders) {
    const GroupSpec spec{orders};
    for (const auto& d : sweep_subgroups(spec)) {
      WindowSampler sampler(2026);
      for (int k = 0; k < 20; ++k) {
        const Window g = sampler.window(spec);
        const DualityReport rep = duality_principle_check(g, d, 1e-9);
        if (rep.witnesses.at("is_frame") != rep.witnesses.at("is_riesz")) ++disagreements;
        ok = ok && rep.verdict;
      }
    }
  }
  c.finish(ok && disagreements == 0,
           "verdict disagreements " + std::to_string(disagreements));
}

void criterion_bessel_duality() {
  Criterion c(6, "optimal Bessel bounds match across the adjoint", 60.0);
  bool ok = true;
  for (const auto& orders : kSweepOrders) {
    const GroupSpec spec{orders};
    for (const auto& d : sweep_subgroups(spec)) {
      WindowSampler sampler(777);
      for (int k = 0; k < 20; ++k) {
        ok = ok && bessel_duality_check(sampler.window(spec), d, 1e-9).verdict;
      }
    }
  }
  c.finish(ok);
}

void criterion_density() {
  Criterion c(7, "density theorems hold exhaustively", 60.0);
  bool ok = true;
  std::string detail;
  try {
    for (const auto& orders : kSweepOrders) {
      const GroupSpec spec{orders};
      for (const auto& d : sweep_subgroups(spec)) {
        WindowSampler sampler(999);
        for (int k = 0; k < 10; ++k) {
          const Window g = sampler.window(spec);
          const DualityReport rep = density_verdict(g, d, 1e-9);
          ok = ok && rep.verdict;
          if (rep.witnesses.at("is_frame").get<bool>()) {
            ok = ok && volume(d) <= 1;
            ok = ok && rep.witnesses.at("total_riesz").get<bool>() == (volume(d) == 1);
          }
        }
      }
    }
  } catch (const std::logic_error& e) {
    ok = false;
    detail = e.what();
  }
  c.finish(ok, detail);
}

void criterion_structural() {
  Criterion c(8, "swap identity, orders and volumes exact for all subgroups", 60.0);
  bool ok = true;
  for (const auto& orders : kSweepOrders) {
    const GroupSpec spec{orders};
    const long n2 = spec.order() * spec.order();
    for (const auto& d : sweep_subgroups(spec)) {
      const PhaseSubgroup adj = adjoint(d);
      const PhaseSubgroup ann = annihilator(d);

      std::vector<long> mapped, direct;
      for (const auto& p : adj.elements()) mapped.push_back(phase_index(spec, phi_swap(spec, p)));
      for (const auto& p : ann.elements()) direct.push_back(phase_index(spec, p));
      std::sort(mapped.begin(), mapped.end());
      ok = ok && mapped == direct;

      ok = ok && d.size() * ann.size() == n2;
      // counting-weight volumes multiply to one
      ok = ok && volume(d) * (Rat(spec.order()) / adj.size()) == 1;
    }
  }
  c.finish(ok);
}

void criterion_appendix() {
  Criterion c(9, "appendix identities: covariance, product norm, bound", 60.0);
  bool ok = true;
  WindowSampler sampler(555);

  const GroupSpec z4({4});
  for (int k = 0; k < 50; ++k) {
    const PhasePoint nu = phase_at(z4, k % 16);
    const DualityReport rep =
        lemma_a1_check(sampler.window(z4), sampler.window(z4), nu, 1e-11);
    ok = ok && rep.verdict;
  }

  for (const auto& orders : std::vector<std::vector<long>>{{2}, {3}}) {
    const GroupSpec spec{orders};
    for (int k = 0; k < 10; ++k) {
      const DualityReport rep =
          prop_a2_check(sampler.window(spec), sampler.window(spec), 1e-9);
      ok = ok && rep.verdict;
    }
  }

  long violations = 0;
  for (const auto& orders : std::vector<std::vector<long>>{{2}, {3}}) {
    const GroupSpec spec{orders};
    for (int k = 0; k < 10; ++k) {
      const DualityReport rep = thm_a3_bound_check(
          sampler.window(spec), sampler.window(spec), sampler.window(spec),
          sampler.window(spec), sampler.window(spec), 1e-9);
      if (!rep.verdict || rep.residual > 0.0) ++violations;
    }
  }
  ok = ok && violations == 0;
  c.finish(ok, "inequality violations " + std::to_string(violations));
}

void criterion_plancherel() {
  Criterion c(10, "phase-space energy identity on 100 pairs per group", 60.0);
  bool ok = true;
  for (const auto& orders : std::vector<std::vector<long>>{{5}, {8}, {2, 4}}) {
    const GroupSpec spec{orders};
    WindowSampler sampler(808);
    for (int k = 0; k < 100; ++k) {
      const Window f = sampler.window(spec);
      const Window g = sampler.window(spec);
      const TFCoefficientMap v = stft(f, g);
      const double energy = rat_to_double(v.weight) * v.values.squaredNorm();
      const double expected = norm_sq(f) * norm_sq(g);
      ok = ok && std::abs(energy - expected) <= 1e-10 * expected;
    }
  }
  c.finish(ok);
}

}  // namespace

int main() {
  criterion_figure1();
  criterion_volumes();
  criterion_wexler_raz();
  criterion_janssen();
  criterion_duality_principle();
  criterion_bessel_duality();
  criterion_density();
  criterion_structural();
  criterion_appendix();
  criterion_plancherel();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
