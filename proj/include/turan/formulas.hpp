#pragma once

#include <cstdint>

namespace turan {

using Count = std::int64_t;

// Parameters of the extremal formulas. `k` is only read by the clique-count
// formula with a clique bound.
struct FormulaParams {
  int n = 0;
  int r = 0;
  int s = 0;
  int k = 0;
};

// Checked evaluation enforces each formula's validity window; unchecked
// evaluation is for exploring outside it and only rejects arguments that
// would make a term meaningless (negative sizes).
enum class Window { kChecked, kUnchecked };

// Exact binomial coefficient; 0 when k < 0 or k > n. Throws
// std::overflow_error if the value does not fit in 64 bits.
Count binomial(Count n, Count k);

// t(n, r): edges of the Turan graph T(n, r).
Count turan_number(int n, int r);

// N(T(t, k), K_r): the r-th elementary symmetric polynomial of the part
// sizes of T(t, k).
Count turan_clique_count(int t, int k, int r);

// Largest edge count of an n-vertex graph with no K_{r+1} and no s+1
// independent edges: max{t(2s+1, r), t(s, r-1) + (n-s)s}.
// Window: n >= 2s+1, r >= 2.
Count ex_clique_matching(const FormulaParams& p, Window w = Window::kChecked);

// Most K_r copies with no s+1 independent edges:
// max{C(2s+1, r), C(s, r) + (n-s) C(s, r-1)}. Window: r >= 2, n >= 2s+1.
Count gex_matching(const FormulaParams& p, Window w = Window::kChecked);

// Most K_r copies with no s-edge linear forest, with a = ceil((s+1)/2) and
// b = floor((s-1)/2): max{C(s, r), C(a, r) + (n-a) C(b, r-1)}.
// Window: r >= 2, s >= 1, n >= s+1.
Count gex_linear_forest(const FormulaParams& p, Window w = Window::kChecked);

// Most K_r copies with no K_{k+1} and no s+1 independent edges, using
// D(t, k, r) = turan_clique_count:
// max{D(2s+1, k, r), D(s, k-1, r) + (n-s) D(s, k-1, r-1)}.
// Window: n >= 2s+1, k >= r >= 3.
Count gex_clique_matching(const FormulaParams& p, Window w = Window::kChecked);

// Largest edge count with no K_{r+1} and no s-edge linear forest, with
// m = floor((s-1)/2): max{t(s, r), t(m, r-1) + (n-m) m}.
// Window: n >= 2s+1, r >= 2, s >= 1.
Count ex_clique_linear_forest(const FormulaParams& p, Window w = Window::kChecked);

}  // namespace turan
