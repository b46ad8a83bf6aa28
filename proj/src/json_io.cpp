#include "lrw/json_io.hpp"

#include <algorithm>

namespace lrw {

json to_json(const Partition& p) { return json(p.vec()); }

json to_json(const DominantWeight& w) { return json(w.vec()); }

json to_json(const RootLatticeElement& r) { return json(r.coords); }

bool output_order(const Partition& a, const Partition& b) {
  const int sa = size(a), sb = size(b);
  return sa != sb ? sa > sb : a > b;
}

json to_json(const Expansion& e) {
  json terms = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    terms.push_back({{"partition", to_json(it->first)}, {"coeff", it->second}});
  return {{"basis", std::string(to_string(e.basis()))}, {"terms", std::move(terms)}};
}

json to_json(const WDecomposition& w) {
  std::vector<std::pair<Partition, coeff_t>> sorted(w.terms.begin(), w.terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return output_order(x.first, y.first); });
  json terms = json::array();
  for (const auto& [p, m] : sorted) terms.push_back({{"partition", to_json(p)}, {"mult", m}});
  return {{"family", std::string(to_string(w.family))}, {"top", to_json(w.top)}, {"terms", std::move(terms)}};
}

json to_json(const SkewTableau& t) {
  return {{"outer", to_json(t.shape.outer())}, {"inner", to_json(t.shape.inner())}, {"rows", t.rows}};
}

json fermionic_to_json(const LieSpec& spec, const FactorList& factors,
                       const std::map<DominantWeight, coeff_t>& decomposition) {
  json fs = json::array();
  for (const auto& f : factors.factors()) fs.push_back({{"m", f.m}, {"node", f.node}});
  json terms = json::array();
  // Highest weights first: reverse lexicographic order of coefficient vectors.
  for (auto it = decomposition.rbegin(); it != decomposition.rend(); ++it)
    terms.push_back({{"weight", to_json(it->first)}, {"mult", it->second}});
  return {{"algebra", spec.name()}, {"factors", std::move(fs)}, {"terms", std::move(terms)}};
}

json root_to_json(const LieSpec& spec, const RootLatticeElement& root) {
  return {{"alpha", to_json(root)}, {"omega", spec.root_to_weight(root.coords)}};
}

json to_json(const BetaSet& betas) {
  json roots = json::array();
  for (std::size_t j = 0; j < betas.roots.size(); ++j) {
    const auto& b = betas.roots[j];
    json entry = root_to_json(betas.spec, b.root);
    entry["index"] = j + 1;
    if (b.extra()) {
      entry["label"] = "extra";
    } else {
      entry["label"] = json::array({b.k, b.l});
    }
    roots.push_back(std::move(entry));
  }
  const int offset = betas.spec.type() == LieType::D ? 1 : 0;
  return {{"algebra", betas.spec.name()}, {"label_n", betas.label_n}, {"label_offset", offset},
          {"count", betas.roots.size()}, {"roots", std::move(roots)}};
}

json to_json(const CommuteReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json entry = {{"clause", v.clause}, {"r", v.r}};
    if (v.s != 0) entry["s"] = v.s;
    if (v.node != 0) entry["node"] = v.node;
    entry["root"] = root_to_json(report.betas.spec, v.witness);
    violations.push_back(std::move(entry));
  }
  return {{"algebra", report.betas.spec.name()}, {"beta_count", report.betas.size()},
          {"label_offset", report.betas.spec.type() == LieType::D ? 1 : 0},
          {"ok", report.ok()}, {"violations", std::move(violations)}};
}

}  // namespace lrw
