#include "lrw/looproot.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lrw/parallel.hpp"

namespace lrw {

namespace {

void require_bcd(const LieSpec& spec) {
  if (spec.type() == LieType::A)
    throw unsupported_family("root data here covers types B, C and D only, got " + spec.name());
}

int height(const RootLatticeElement& r) { return std::accumulate(r.coords.begin(), r.coords.end(), 0); }

std::vector<std::vector<int>> positive_roots_eps(const LieSpec& spec) {
  const int n = spec.rank();
  std::vector<std::vector<int>> out;
  auto unit = [n](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (auto [i, c] : entries) v[static_cast<std::size_t>(i)] += c;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(unit({{i, 1}, {j, -1}}));
      out.push_back(unit({{i, 1}, {j, 1}}));
    }
  for (int i = 0; i < n; ++i) {
    if (spec.type() == LieType::B) out.push_back(unit({{i, 1}}));
    if (spec.type() == LieType::C) out.push_back(unit({{i, 2}}));
  }
  return out;
}

RootLatticeElement beta_kl(const LieSpec& spec, int k, int l) {
  // alpha_k + ... + alpha_{l-1} + 2 alpha_l + ... then the family-specific tail.
  const int n = spec.rank();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = k; i < l; ++i) c[static_cast<std::size_t>(i - 1)] = 1;
  switch (spec.type()) {
    case LieType::B:
      for (int i = l; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = 2;
      break;
    case LieType::C:
      for (int i = l; i <= n - 1; ++i) c[static_cast<std::size_t>(i - 1)] = 2;
      c[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case LieType::D:
      for (int i = l; i <= n - 2; ++i) c[static_cast<std::size_t>(i - 1)] = 2;
      c[static_cast<std::size_t>(n - 2)] = 1;
      c[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case LieType::A:
      break;
  }
  return {std::move(c)};
}

RootLatticeElement plus(const RootLatticeElement& a, const RootLatticeElement& b, int sign = 1) {
  RootLatticeElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += sign * b.coords[i];
  return out;
}

RootLatticeElement simple_root(int rank, int i) {
  RootLatticeElement e{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  e.coords[static_cast<std::size_t>(i)] = 1;
  return e;
}

}  // namespace

std::vector<RootLatticeElement> positive_roots(const LieSpec& spec) {
  require_bcd(spec);
  std::vector<RootLatticeElement> out;
  for (const auto& eps : positive_roots_eps(spec)) {
    auto coords = spec.eps_to_root(eps);
    if (!coords) throw error("positive root outside the root lattice");
    out.push_back({std::move(*coords)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a.coords > b.coords;
  });
  return out;
}

BetaSet beta_roots(const LieSpec& spec) {
  require_bcd(spec);
  BetaSet set{spec, {}, spec.type() == LieType::D ? spec.rank() - 1 : spec.rank()};
  for (int k = 1; k <= set.label_n - 1; ++k)
    for (int l = k + 1; l <= set.label_n - 1; ++l) set.roots.push_back({beta_kl(spec, k, l), k, l});
  if (spec.type() == LieType::C) {
    const int n = spec.rank();
    RootLatticeElement extra{std::vector<int>(static_cast<std::size_t>(n), 2)};
    extra.coords[static_cast<std::size_t>(n - 1)] = 1;
    set.roots.push_back({std::move(extra), 0, 0});
  }
  const auto roots = positive_roots(spec);
  for (const auto& b : set.roots)
    if (std::find(roots.begin(), roots.end(), b.root) == roots.end())
      throw error("beta root is not a positive root of " + spec.name());
  return set;
}

bool type_a_support(const RootLatticeElement& eta, const LieSpec& spec) {
  if (eta.rank() != spec.rank()) throw invalid_input("root has wrong rank for " + spec.name());
  if (!eta.is_nonnegative()) throw invalid_input("type_a_support needs nonnegative coordinates");
  if (eta.is_zero()) throw invalid_input("type_a_support needs a nonzero root");
  const int n = spec.rank();
  // The Dynkin diagram is a tree: strip leaves outside the support until the
  // minimal connected subset containing it remains.
  std::vector<bool> keep(static_cast<std::size_t>(n), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!keep[static_cast<std::size_t>(i)] || eta.coords[static_cast<std::size_t>(i)] != 0) continue;
      int degree = 0;
      for (int j = 0; j < n; ++j)
        if (keep[static_cast<std::size_t>(j)] && spec.adjacent(i, j)) ++degree;
      if (degree <= 1) {
        keep[static_cast<std::size_t>(i)] = false;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!keep[static_cast<std::size_t>(i)]) continue;
    int degree = 0;
    for (int j = 0; j < n; ++j) {
      if (!keep[static_cast<std::size_t>(j)] || !spec.adjacent(i, j)) continue;
      if (spec.cartan(i, j) != -1 || spec.cartan(j, i) != -1) return false;
      ++degree;
    }
    if (degree > 2) return false;
  }
  return true;
}

std::vector<std::vector<int>> cone_membership(const RootLatticeElement& diff, const BetaSet& betas) {
  if (diff.rank() != betas.spec.rank()) throw invalid_input("root has wrong rank for " + betas.spec.name());
  std::vector<std::vector<int>> out;
  const std::size_t count = betas.size();
  std::vector<int> s(count, 0);
  std::function<void(std::size_t, RootLatticeElement&)> search = [&](std::size_t j, RootLatticeElement& rest) {
    if (j == count) {
      if (rest.is_zero()) out.push_back(s);
      return;
    }
    const auto& beta = betas.roots[j].root.coords;
    int bound = -1;
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] > 0) {
        const int ratio = rest.coords[i] / beta[i];
        bound = bound < 0 ? ratio : std::min(bound, ratio);
      }
    for (int v = 0; v <= std::max(bound, 0); ++v) {
      s[j] = v;
      search(j + 1, rest);
      for (std::size_t i = 0; i < beta.size(); ++i) rest.coords[i] -= beta[i];
    }
    for (std::size_t i = 0; i < beta.size(); ++i) rest.coords[i] += (std::max(bound, 0) + 1) * beta[i];
    s[j] = 0;
  };
  if (!diff.is_nonnegative()) return out;
  RootLatticeElement rest = diff;
  search(0, rest);
  return out;
}

std::vector<std::vector<int>> cone_membership(const RootLatticeElement& diff, const LieSpec& spec) {
  return cone_membership(diff, beta_roots(spec));
}

CommuteReport commute_check(const LieSpec& spec) {
  CommuteReport report{beta_roots(spec), {}};
  const auto roots_list = positive_roots(spec);
  const std::set<RootLatticeElement> roots(roots_list.begin(), roots_list.end());
  const auto& betas = report.betas.roots;
  const int n = spec.rank();
  const int count = static_cast<int>(betas.size());
  // The allowed exception: beta_{k, n-1} - alpha_{n-1} in the (k, l) labelling.
  const int exception_l = report.betas.label_n - 1;

  std::vector<std::vector<CommuteViolation>> found(static_cast<std::size_t>(count) * static_cast<std::size_t>(count) + static_cast<std::size_t>(count));
  detail::parallel_for(found.size(), [&](std::size_t task) {
    auto& out = found[task];
    if (task >= static_cast<std::size_t>(count) * static_cast<std::size_t>(count)) {
      const int r = static_cast<int>(task - static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
      const auto& br = betas[static_cast<std::size_t>(r)];
      for (int i = 0; i < n; ++i) {
        const auto diff = plus(br.root, simple_root(n, i), -1);
        if (!roots.count(diff)) continue;
        bool later = false;
        for (int s = r; s < count; ++s)
          if (betas[static_cast<std::size_t>(s)].root == diff) later = true;
        const bool allowed = !br.extra() && br.l == exception_l && i + 1 == exception_l;
        if (!later && !allowed) out.push_back({"iii", r + 1, 0, i + 1, diff});
      }
      return;
    }
    const int r = static_cast<int>(task) / count;
    const int s = static_cast<int>(task) % count;
    const auto sum = plus(betas[static_cast<std::size_t>(r)].root, betas[static_cast<std::size_t>(s)].root);
    if (roots.count(sum)) out.push_back({"i", r + 1, s + 1, 0, sum});
    for (int i = 0; i < n; ++i) {
      const auto lowered = plus(sum, simple_root(n, i), -1);
      if (roots.count(lowered)) out.push_back({"ii", r + 1, s + 1, i + 1, lowered});
    }
  });
  for (auto& part : found)
    for (auto& v : part) report.violations.push_back(std::move(v));
  return report;
}

}  // namespace lrw
