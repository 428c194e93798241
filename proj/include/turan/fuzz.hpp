#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "turan/execution.hpp"
#include "turan/graph.hpp"

namespace turan {

// Statements about shifting and closure checked on random graphs.
enum class FuzzProperty {
  kShiftEdgeCount,          // e(S_ij(G)) = e(G)
  kShiftKeepsLinearForestFree,  // L_{n,s}-free G gives L_{n,s}-free S_ij(G)
  kShiftMatchingNumber,     // nu(S_ij(G)) <= nu(G)
  kShiftCliqueCounts,       // N(S_ij(G), K_r) >= N(G, K_r) for r = 2..5
  kDegreeSumStability,      // d(u)+d(v) >= s: G L_{n,s}-free iff G+uv is
  kStrongShiftKeepsFree,    // {K_{r+1}, L_{n,s}}-free survives S'_ij (greedy coloring)
  kStrongClosureStability,  // strong-closure step keeps {K_{r+1}, L_{n,s}}-freeness
};

inline constexpr FuzzProperty kAllFuzzProperties[] = {
    FuzzProperty::kShiftEdgeCount,       FuzzProperty::kShiftKeepsLinearForestFree,
    FuzzProperty::kShiftMatchingNumber,  FuzzProperty::kShiftCliqueCounts,
    FuzzProperty::kDegreeSumStability,   FuzzProperty::kStrongShiftKeepsFree,
    FuzzProperty::kStrongClosureStability};

std::string_view property_key(FuzzProperty p);
std::optional<FuzzProperty> parse_property(std::string_view key);

// Proved statements must show zero violations. The two coloring-dependent
// ones rest on an unspecified coloring; their violations are findings.
bool property_is_proved(FuzzProperty p);

struct FuzzViolation {
  std::string graph6;  // labeled, not canonical: shifts depend on labels
  std::map<std::string, int> params;
  std::string detail;
};

struct FuzzReport {
  FuzzProperty property;
  std::uint64_t seed = 0;
  int trials = 0;
  int n_max = 0;
  std::int64_t checks = 0;  // hypothesis instances examined
  std::vector<FuzzViolation> violations;
};

struct FuzzOptions {
  int trials = 10000;
  int n_max = 9;
  std::uint64_t seed = 0;
  ExecutionPolicy policy;
};

// Seed of trial t, independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// G(n, p).
Graph random_graph(std::mt19937_64& rng, int n, double p);

// Each trial draws n ~ U{2..n_max} and p ~ U(0,1), samples G(n,p), and checks
// every hypothesis instance on it. Deterministic in the seed regardless of
// thread count. Throws ParameterError unless 2 <= n_max <= 12.
FuzzReport lemma_fuzz(FuzzProperty property, const FuzzOptions& options);

// Re-evaluates a recorded violation from its graph and parameters.
bool replay_violation(FuzzProperty property, const FuzzViolation& violation);

}  // namespace turan
