#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sigtqft/bigint.hpp"
#include "sigtqft/contfrac.hpp"
#include "sigtqft/hpreal.hpp"
#include "sigtqft/report.hpp"

namespace sigtqft::harness {

struct HarnessConfig {
  int threads = 1;
  long precision_bits = 128;
};

/// Residual sweep for the genus-2 transformation law
/// sigma2(q/(2q+p)) - sigma2(q/p) = 2q^2 + 2pq + p^2 - 1
/// over all odd coprime 0 < q < p < p_max. A fixed-seed 5% subsample is
/// re-verified against the lattice-sum oracle.
report::SweepReport conjecture_sweep(int64_t p_max, const HarnessConfig& cfg = {});

struct AsymptoticsRow {
  int64_t k = 0;
  BigInt a_k, q_k, p_k;
  BigInt sigma2;
  HPReal ratio;     // sigma2 / p_k^2
  HPReal lambda;    // Lambda(theta), shared across rows
  HPReal abs_diff;  // |ratio - lambda|
  HPReal rel_diff;  // abs_diff / |lambda|

  AsymptoticsRow() : ratio(128), lambda(128), abs_diff(128), rel_diff(128) {}
};

/// Convergence experiment along the convergents of theta: rows for
/// k = 2..depth comparing sigma2(q_k/p_k)/p_k^2 with Lambda(theta).
/// Requires an infinite (generator-backed) expansion; a terminating one is
/// rejected as a rational endpoint.
std::vector<AsymptoticsRow> asymptotics_run(const numtheory::CFExpansion& theta,
                                            std::size_t depth,
                                            const HarnessConfig& cfg = {});

enum class Figure { fig1, fig2, fig3 };

/// CSV rows for the paper-style figures:
///   fig1: (theta, q, p, sigma2, sigma2/p^2) dots for odd coprime 0<q<p<p_max,
///         plus Lambda samples on the even-denominator grid b <= 64;
///   fig2: sigma3/p^4 for odd coprime pairs with p <= p_max;
///   fig3: sigma1(q/p; 2k)/p for odd coprime pairs with p <= p_max.
void figure_data(Figure which, int64_t p_max, std::optional<int64_t> k,
                 std::ostream& csv_out, const HarnessConfig& cfg = {});

/// Same rows, collected for plotting.
struct FigurePoint {
  std::string kind;  // "dot" or "lambda"
  double x = 0, y = 0;
};
std::vector<FigurePoint> figure_points(Figure which, int64_t p_max,
                                       std::optional<int64_t> k,
                                       const HarnessConfig& cfg = {});

/// Exact residual sweeps of the smoothing, reciprocity, and S-transformation
/// identities for all valid pairs with p <= p_max. The perturbation hook
/// (adds a rational offset to s(q,p)) exists so tests can watch the harness
/// catch an injected failure; it defaults to off.
report::SweepReport identity_sweeps(
    int64_t p_max, const HarnessConfig& cfg = {},
    const std::function<Rational(const Rational&)>& perturb_s = {});

/// Cross-method agreement and timing for sigma2 on the given p values
/// (q auto-chosen as the largest odd coprime below p). Methods: "lattice",
/// "trig", "charpoly". Disagreement is a hard failure.
report::SweepReport method_bench(std::span<const int64_t> p_list,
                                 std::span<const std::string> methods,
                                 const HarnessConfig& cfg = {});

/// Witten normalization rows (p, sigma2(1/p)/p^3, |ratio - 1/6|) for odd p
/// in [11, p_max]; deviation must stay below 1/p.
report::SweepReport witten_check(int64_t p_max, const HarnessConfig& cfg = {});

}  // namespace sigtqft::harness
