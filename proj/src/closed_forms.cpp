#include "lrw/closed_forms.hpp"

#include <algorithm>

namespace lrw {

namespace {

void require_nonnegative(std::initializer_list<int> values) {
  for (int v : values)
    if (v < 0) throw invalid_input("closed forms need nonnegative parameters");
}

Partition from_coeffs(std::vector<int> coeffs) {
  return partition_from_weight(DominantWeight(std::move(coeffs)));
}

// Partition with the given column heights.
Partition from_columns(std::vector<int> heights) {
  std::sort(heights.begin(), heights.end(), std::greater<>());
  while (!heights.empty() && heights.back() == 0) heights.pop_back();
  return conjugate(Partition(heights));
}

}  // namespace

Partition abc_partition(int a, int b, int c) {
  require_nonnegative({a, b, c});
  return from_coeffs({a, b, c});
}

Partition partition_24(int a, int b) {
  require_nonnegative({a, b});
  return from_coeffs({0, a, 0, b});
}

WDecomposition closed_form_rectangle(int m, int ell, Family family) {
  if (m < 1 || ell < 1) throw invalid_input("rectangle needs m >= 1 and ell >= 1");
  const Partition rect(std::vector<int>(static_cast<std::size_t>(ell), m));
  WDecomposition out{family, rect, {}};
  if (family == Family::o) {
    // Column heights drawn from ell, ell-2, ...; counts[j] columns of height ell-2j.
    const int steps = ell / 2;
    std::vector<int> counts(static_cast<std::size_t>(steps) + 1, 0);
    auto emit = [&] {
      std::vector<int> heights;
      for (int j = 0; j <= steps; ++j)
        heights.insert(heights.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(j)]), ell - 2 * j);
      out.terms[from_columns(std::move(heights))] = 1;
    };
    auto rec = [&](auto&& self, int j, int left) -> void {
      if (j == steps) {
        counts[static_cast<std::size_t>(j)] = left;
        emit();
        return;
      }
      for (int k = 0; k <= left; ++k) {
        counts[static_cast<std::size_t>(j)] = k;
        self(self, j + 1, left - k);
      }
    };
    rec(rec, 0, m);
    return out;
  }
  // c^{rect}_{mu nu} is 1 exactly when mu is the rotated complement of nu.
  for (const auto& nu : domino_partitions_within(rect, false)) {
    std::vector<int> parts(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) parts[static_cast<std::size_t>(i)] = m - nu[static_cast<std::size_t>(ell - 1 - i)];
    out.terms[Partition(parts)] = 1;
  }
  return out;
}

WDecomposition closed_form_abc(int a, int b, int c) {
  WDecomposition out{Family::o, abc_partition(a, b, c), {}};
  for (int s = 0; s <= a; ++s)
    for (int r = 0; r <= b; ++r)
      for (int t = 0; s + t <= c; ++t) out.terms[from_coeffs({a - s + t, b - r + s, c - s - t})] += 1;
  return out;
}

WDecomposition closed_form_24(int a, int b) {
  const Partition top = partition_24(a, b);
  WDecomposition out{Family::o, top, {}};
  const int cap = a + b;
  for (int c1 = 0; c1 <= a; ++c1)
    for (int c2 = 0; c2 <= cap; ++c2)
      for (int c4 = 0; c4 <= cap; ++c4) {
        const int c3 = c1;
        const Partition mu = from_coeffs({c1, c2, c3, c4});
        if (!contains(top, mu)) continue;
        const coeff_t mult =
            1 + std::min({c2, a - c3, b - c3 - c4, a + b - c1 - c2 - c3 - c4});
        if (mult > 0) out.terms[mu] = mult;
      }
  return out;
}

}  // namespace lrw
