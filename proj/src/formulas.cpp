#include "turan/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/errors.hpp"

namespace turan {
namespace {

Count add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count overflow");
  return out;
}

Count mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count overflow");
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

std::vector<Count> part_sizes(int n, int r) {
  std::vector<Count> sizes(static_cast<std::size_t>(r), n / r);
  for (int p = 0; p < n % r; ++p) ++sizes[static_cast<std::size_t>(p)];
  return sizes;
}

}  // namespace

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (Count i = 0; i < k; ++i) {
    // acc * (n - i) is divisible by (i + 1) at every step.
    acc = acc * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (acc > static_cast<unsigned __int128>(INT64_MAX)) {
      throw std::overflow_error("binomial overflow");
    }
  }
  return static_cast<Count>(acc);
}

Count turan_number(int n, int r) {
  require(r >= 1, "turan_number needs r >= 1");
  require(n >= 0, "turan_number needs n >= 0");
  Count squares = 0;
  for (Count size : part_sizes(n, r)) squares = add(squares, mul(size, size));
  return (mul(n, n) - squares) / 2;
}

Count turan_clique_count(int t, int k, int r) {
  require(k >= 1 && r >= 1, "turan_clique_count needs k >= 1 and r >= 1");
  require(t >= 0, "turan_clique_count needs t >= 0");
  // elem[j] = e_j over the parts seen so far.
  std::vector<Count> elem(static_cast<std::size_t>(r) + 1, 0);
  elem[0] = 1;
  for (Count size : part_sizes(t, k)) {
    for (int j = r; j >= 1; --j) {
      elem[static_cast<std::size_t>(j)] =
          add(elem[static_cast<std::size_t>(j)], mul(elem[static_cast<std::size_t>(j) - 1], size));
    }
  }
  return elem[static_cast<std::size_t>(r)];
}

Count ex_clique_matching(const FormulaParams& p, Window w) {
  const auto [n, r, s, k] = p;
  if (w == Window::kChecked) {
    require(r >= 2 && s >= 0 && n >= 2 * s + 1, "clique+matching formula needs n >= 2s+1, r >= 2");
  }
  require(r >= 2 && s >= 0 && n >= s, "clique+matching formula needs r >= 2, 0 <= s <= n");
  return std::max(turan_number(2 * s + 1, r), add(turan_number(s, r - 1), mul(n - s, s)));
}

Count gex_matching(const FormulaParams& p, Window w) {
  const auto [n, r, s, k] = p;
  if (w == Window::kChecked) {
    require(r >= 2 && s >= 0 && n >= 2 * s + 1, "matching formula needs n >= 2s+1, r >= 2");
  }
  require(r >= 1 && s >= 0 && n >= s, "matching formula needs r >= 1, 0 <= s <= n");
  return std::max(binomial(2 * s + 1, r), add(binomial(s, r), mul(n - s, binomial(s, r - 1))));
}

Count gex_linear_forest(const FormulaParams& p, Window w) {
  const auto [n, r, s, k] = p;
  if (w == Window::kChecked) {
    require(r >= 2 && s >= 1 && n >= s + 1, "linear forest formula needs n >= s+1, r >= 2, s >= 1");
  }
  const int a = (s + 2) / 2;
  const int b = (s - 1) / 2;
  require(r >= 1 && s >= 1 && n >= a, "linear forest formula needs r >= 1, s >= 1, n >= ceil((s+1)/2)");
  return std::max(binomial(s, r), add(binomial(a, r), mul(n - a, binomial(b, r - 1))));
}

Count gex_clique_matching(const FormulaParams& p, Window w) {
  const auto [n, r, s, k] = p;
  if (w == Window::kChecked) {
    require(k >= r && r >= 3 && s >= 0 && n >= 2 * s + 1,
            "clique-count formula needs n >= 2s+1, k >= r >= 3");
  }
  require(k >= 2 && r >= 2 && s >= 0 && n >= s,
          "clique-count formula needs k >= 2, r >= 2, 0 <= s <= n");
  return std::max(turan_clique_count(2 * s + 1, k, r),
                  add(turan_clique_count(s, k - 1, r),
                      mul(n - s, turan_clique_count(s, k - 1, r - 1))));
}

Count ex_clique_linear_forest(const FormulaParams& p, Window w) {
  const auto [n, r, s, k] = p;
  if (w == Window::kChecked) {
    require(r >= 2 && s >= 1 && n >= 2 * s + 1,
            "clique+linear forest formula needs n >= 2s+1, r >= 2, s >= 1");
  }
  const int m = (s - 1) / 2;
  require(r >= 2 && s >= 1 && n >= m, "clique+linear forest formula needs r >= 2, s >= 1, n >= floor((s-1)/2)");
  return std::max(turan_number(s, r), add(turan_number(m, r - 1), mul(n - m, m)));
}

}  // namespace turan
