#include "lrw/fermionic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>

#include "lrw/parallel.hpp"

namespace lrw {

FactorList::FactorList(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw invalid_input("factor list must be nonempty");
  for (const auto& f : factors_)
    if (f.m < 1 || f.node < 1) throw invalid_input("factors need m >= 1 and node >= 1");
}

void FactorList::check_against(const LieSpec& spec) const {
  for (const auto& f : factors_)
    if (f.node > spec.rank())
      throw invalid_input("factor node " + std::to_string(f.node) + " exceeds rank of " + spec.name());
}

DominantWeight top_weight(const LieSpec& spec, const FactorList& factors) {
  factors.check_against(spec);
  std::vector<int> w(static_cast<std::size_t>(spec.rank()), 0);
  for (const auto& f : factors.factors()) w[static_cast<std::size_t>(f.node - 1)] += f.m;
  return DominantWeight(std::move(w));
}

std::optional<std::vector<int>> alpha_coords(const LieSpec& spec, const FactorList& factors,
                                             const DominantWeight& lambda) {
  if (lambda.rank() != spec.rank()) throw invalid_input("weight rank does not match " + spec.name());
  const auto top = top_weight(spec, factors);
  std::vector<int> diff(static_cast<std::size_t>(spec.rank()));
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = top[i] - lambda[i];
  std::vector<int> out;
  for (const auto& q : spec.weight_to_root(diff)) {
    if (q.denominator() != 1 || q.numerator() < 0) return std::nullopt;
    out.push_back(static_cast<int>(q.numerator()));
  }
  return out;
}

namespace {

/// Multiplicity vectors: mults[k][h] = number of parts of size h in nu^{(k)}.
using Multiplicities = std::vector<std::vector<int>>;

std::vector<int> part_multiplicities(const Partition& p) {
  std::vector<int> m(static_cast<std::size_t>(p[0]) + 1, 0);
  for (int part : p.parts()) ++m[static_cast<std::size_t>(part)];
  return m;
}

long long vacancy_from(const LieSpec& spec, const std::vector<Factor>& factors, const Multiplicities& mults,
                       int k, int n) {
  long long p = 0;
  for (const auto& f : factors)
    if (f.node - 1 == k) p += std::min(n, f.m);
  const auto& own = mults[static_cast<std::size_t>(k)];
  for (std::size_t h = 1; h < own.size(); ++h) p -= 2LL * std::min<long long>(n, static_cast<long long>(h)) * own[h];
  for (int j = 0; j < spec.rank(); ++j) {
    if (!spec.adjacent(k, j)) continue;
    const long long ckj = -spec.cartan(k, j);
    const long long cjk = -spec.cartan(j, k);
    const auto& other = mults[static_cast<std::size_t>(j)];
    for (std::size_t h = 1; h < other.size(); ++h)
      p += std::min(ckj * n, cjk * static_cast<long long>(h)) * other[h];
  }
  return p;
}

/// Past this part size the vacancy number at node k no longer changes.
int stable_bound(const LieSpec& spec, const std::vector<Factor>& factors, const Multiplicities& mults, int k) {
  int bound = 1;
  for (const auto& f : factors)
    if (f.node - 1 == k) bound = std::max(bound, f.m);
  for (int j = 0; j < spec.rank(); ++j) {
    if (j != k && !spec.adjacent(k, j)) continue;
    const int largest = static_cast<int>(mults[static_cast<std::size_t>(j)].size()) - 1;
    bound = std::max(bound, 3 * largest);
  }
  return bound;
}

coeff_t binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  boost::multiprecision::checked_int128_t r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r.convert_to<coeff_t>();
}

class ConfigurationSum {
 public:
  ConfigurationSum(const LieSpec& spec, const FactorList& factors, const std::vector<int>& n)
      : spec_(spec), factors_(factors.factors()), n_(n) {
    const auto r = static_cast<std::size_t>(spec.rank());
    mults_.assign(r, std::vector<int>(1, 0));
    complete_at_.assign(r, {});
    for (int j = 0; j < spec.rank(); ++j) {
      int last = j;
      for (int i = 0; i < spec.rank(); ++i)
        if (spec.adjacent(i, j)) last = std::max(last, i);
      complete_at_[static_cast<std::size_t>(last)].push_back(j);
    }
    choices_.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      for (const auto& p : partitions_of(n_[k])) choices_[k].push_back(part_multiplicities(p));
    }
  }

  coeff_t total() {
    total_ = 0;
    descend(0);
    return total_;
  }

 private:
  bool admissible(int k) const {
    const int bound = stable_bound(spec_, factors_, mults_, k);
    for (int n = 1; n <= bound + 1; ++n)
      if (vacancy_from(spec_, factors_, mults_, k, n) < 0) return false;
    return true;
  }

  coeff_t weight() const {
    coeff_t product = 1;
    for (int k = 0; k < spec_.rank(); ++k) {
      const auto& own = mults_[static_cast<std::size_t>(k)];
      for (std::size_t n = 1; n < own.size(); ++n) {
        if (own[n] == 0) continue;
        const long long p = vacancy_from(spec_, factors_, mults_, k, static_cast<int>(n));
        product *= binomial(p + own[n], own[n]);
        if (product == 0) return 0;
      }
    }
    return product;
  }

  void descend(std::size_t k) {
    if (k == choices_.size()) {
      total_ += weight();
      return;
    }
    for (const auto& choice : choices_[k]) {
      mults_[k] = choice;
      bool ok = true;
      for (int j : complete_at_[k])
        if (!admissible(j)) {
          ok = false;
          break;
        }
      if (ok) descend(k + 1);
    }
    mults_[k].assign(1, 0);
  }

  const LieSpec& spec_;
  const std::vector<Factor>& factors_;
  std::vector<int> n_;
  Multiplicities mults_;
  std::vector<std::vector<int>> complete_at_;
  std::vector<std::vector<std::vector<int>>> choices_;
  coeff_t total_ = 0;
};

struct Candidate {
  DominantWeight weight;
  std::vector<int> n;
};

std::vector<Candidate> dominant_candidates(const LieSpec& spec, const FactorList& factors) {
  const auto top = top_weight(spec, factors);
  std::vector<int> box;
  for (const auto& q : spec.weight_to_root(top.vec()))
    box.push_back(static_cast<int>(q.numerator() / q.denominator()));
  std::vector<Candidate> out;
  std::vector<int> n(box.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == box.size()) {
      auto shift = spec.root_to_weight(n);
      std::vector<int> w(top.vec());
      for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] -= shift[j];
        if (w[j] < 0) return;
      }
      out.push_back({DominantWeight(std::move(w)), n});
      return;
    }
    for (int v = 0; v <= box[i]; ++v) {
      n[i] = v;
      walk(i + 1);
    }
    n[i] = 0;
  };
  walk(0);
  return out;
}

template <class Runner>
std::map<DominantWeight, coeff_t> decomp_impl(const LieSpec& spec, const FactorList& factors, Runner&& run) {
  const auto candidates = dominant_candidates(spec, factors);
  std::vector<coeff_t> mult(candidates.size(), 0);
  run(candidates.size(), [&](std::size_t i) {
    mult[i] = ConfigurationSum(spec, factors, candidates[i].n).total();
  });
  std::map<DominantWeight, coeff_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (mult[i] > 0) out.emplace(candidates[i].weight, mult[i]);
  return out;
}

}  // namespace

long long vacancy(const LieSpec& spec, const FactorList& factors, const Configuration& config, int k, int n) {
  factors.check_against(spec);
  if (static_cast<int>(config.nus.size()) != spec.rank())
    throw invalid_input("configuration needs one partition per node");
  if (k < 1 || k > spec.rank() || n < 1) throw invalid_input("vacancy needs 1 <= k <= rank and n >= 1");
  Multiplicities mults;
  for (const auto& p : config.nus) mults.push_back(part_multiplicities(p));
  return vacancy_from(spec, factors.factors(), mults, k - 1, n);
}

coeff_t fermionic_multiplicity(const LieSpec& spec, const FactorList& factors, const DominantWeight& lambda) {
  const auto n = alpha_coords(spec, factors, lambda);
  if (!n) return 0;
  return ConfigurationSum(spec, factors, *n).total();
}

std::map<DominantWeight, coeff_t> fermionic_decomp(const LieSpec& spec, const FactorList& factors) {
  return decomp_impl(spec, factors, [](std::size_t n, auto&& body) { detail::parallel_for(n, body); });
}

std::map<DominantWeight, coeff_t> fermionic_decomp_serial(const LieSpec& spec, const FactorList& factors) {
  return decomp_impl(spec, factors, [](std::size_t n, auto&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
  });
}

}  // namespace lrw
