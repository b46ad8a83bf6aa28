#pragma once

// Brute-force reference computations that share no code with the library
// beyond the Partition value type.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lrw/core.hpp"

namespace oracle {

using Poly = std::map<std::vector<int>, long long>;

inline void add_into(Poly& target, const Poly& p, long long scale = 1) {
  for (const auto& [m, c] : p) {
    auto& slot = target[m];
    slot += scale * c;
    if (slot == 0) target.erase(m);
  }
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly one(int vars) { return {{std::vector<int>(static_cast<std::size_t>(vars), 0), 1}}; }

// Skew Schur polynomial by filling cells row by row, each cell at least its
// left neighbour and strictly above its upper neighbour.
inline Poly skew_schur_poly(const lrw::Partition& outer, const lrw::Partition& inner, int vars) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[static_cast<std::size_t>(r)]; c < outer[static_cast<std::size_t>(r)]; ++c) cells.push_back({r, c});
  std::map<std::pair<int, int>, int> value;
  std::vector<int> mono(static_cast<std::size_t>(vars), 0);
  Poly out;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      out[mono] += 1;
      return;
    }
    const auto [r, c] = cells[i];
    int low = 1;
    if (auto it = value.find({r, c - 1}); it != value.end()) low = std::max(low, it->second);
    if (auto it = value.find({r - 1, c}); it != value.end()) low = std::max(low, it->second + 1);
    for (int v = low; v <= vars; ++v) {
      value[{r, c}] = v;
      ++mono[static_cast<std::size_t>(v - 1)];
      fill(i + 1);
      --mono[static_cast<std::size_t>(v - 1)];
    }
    value.erase({r, c});
  };
  fill(0);
  return out;
}

inline Poly schur_poly(const lrw::Partition& lambda, int vars) { return skew_schur_poly(lambda, {}, vars); }

// Complete homogeneous symmetric polynomial h_k.
inline Poly h_poly(int k, int vars) {
  if (k < 0) return {};
  return schur_poly(k == 0 ? lrw::Partition{} : lrw::Partition{k}, vars);
}

// Schur expansion of a symmetric polynomial: repeatedly strip the
// lexicographically largest monomial.
inline std::map<lrw::Partition, long long> to_schur(Poly p, int vars) {
  std::map<lrw::Partition, long long> out;
  while (!p.empty()) {
    const auto top = std::prev(p.end());
    const lrw::Partition lambda(top->first);
    const long long c = top->second;
    out[lambda] += c;
    add_into(p, schur_poly(lambda, vars), -c);
  }
  return out;
}

inline long long lr(const lrw::Partition& lambda, const lrw::Partition& mu, const lrw::Partition& nu) {
  const int vars = std::max(lrw::size(lambda), 1);
  if (lrw::size(lambda) != lrw::size(mu) + lrw::size(nu)) return 0;
  const auto product = to_schur(times(schur_poly(mu, vars), schur_poly(nu, vars)), vars);
  const auto it = product.find(lambda);
  return it == product.end() ? 0 : it->second;
}

// det(h_{lambda_i - nu_j - i + j}) as a polynomial, by cofactor expansion.
inline Poly jacobi_trudi_poly(const lrw::Partition& lambda, const lrw::Partition& nu, int vars) {
  const int r = std::max(lambda.length(), nu.length());
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(r), std::vector<Poly>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          h_poly(lambda[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(j)] - i + j, vars);
  std::function<Poly(int, std::vector<int>&)> det = [&](int row, std::vector<int>& cols) -> Poly {
    if (row == r) return one(vars);
    Poly out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const int col = cols[k];
      const Poly& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (entry.empty()) continue;
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      add_into(out, times(entry, det(row + 1, rest)), k % 2 == 0 ? 1 : -1);
    }
    return out;
  };
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cols[static_cast<std::size_t>(j)] = j;
  return det(0, cols);
}

// Positive roots from a Cartan matrix by the root-string algorithm: for a
// positive root beta and simple root alpha_i, beta + alpha_i is a root iff
// p - <beta, alpha_i^vee> > 0, where p is how far the string extends down.
inline std::set<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    roots.insert(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer)
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  return roots;
}

}  // namespace oracle
