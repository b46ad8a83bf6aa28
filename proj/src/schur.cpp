#include "lrw/schur.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lr_filler.hpp"
#include "lrw/parallel.hpp"
#include "lrw/tableaux.hpp"

namespace lrw {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::schur: return "schur";
    case Basis::h_monomial: return "h";
    case Basis::sp: return "sp";
    case Basis::o: return "o";
  }
  return "?";
}

Expansion::Expansion(Basis basis, map_type terms) : basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Expansion Expansion::single(Partition p, coeff_t c, Basis basis) {
  Expansion e(basis);
  e.add(p, c);
  return e;
}

coeff_t Expansion::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Expansion::add(const Partition& p, coeff_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Expansion::add_scaled(const Expansion& other, coeff_t scale) {
  if (other.basis_ != basis_)
    throw basis_mismatch(std::string("cannot combine ") + std::string(to_string(basis_)) +
                         " and " + std::string(to_string(other.basis_)) + " expansions");
  if (scale == 0) return;
  for (const auto& [p, c] : other.terms_) add(p, c * scale);
}

const Partition& Expansion::leading_key() const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (size_then_lex_greater(it->first, best->first)) best = it;
  return best->first;
}

namespace {

void require_schur(const Expansion& a, const char* op) {
  if (a.basis() != Basis::schur)
    throw basis_mismatch(std::string(op) + " needs a Schur-basis expansion, got " +
                         std::string(to_string(a.basis())));
}

/// Shapes that can carry a nonzero c^lambda_{mu nu}.
std::vector<Partition> product_candidates(const Partition& mu, const Partition& nu) {
  std::vector<Partition> out;
  const int width = mu[0] + nu[0];
  const int height = mu.length() + nu.length();
  for (auto& lambda : partitions_of(mu.size() + nu.size())) {
    if (lambda[0] > width || lambda.length() > height) continue;
    if (contains(lambda, mu) && contains(lambda, nu)) out.push_back(std::move(lambda));
  }
  return out;
}

struct ProductTask {
  std::size_t left;
  std::size_t right;
  Partition lambda;
};

template <class Runner>
Expansion mult_impl(const Expansion& a, const Expansion& b, Runner&& run) {
  require_schur(a, "mult");
  require_schur(b, "mult");
  const std::vector<std::pair<Partition, coeff_t>> lhs(a.terms().begin(), a.terms().end());
  const std::vector<std::pair<Partition, coeff_t>> rhs(b.terms().begin(), b.terms().end());
  std::vector<ProductTask> tasks;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j)
      for (auto& lambda : product_candidates(lhs[i].first, rhs[j].first))
        tasks.push_back({i, j, std::move(lambda)});

  std::vector<coeff_t> lr(tasks.size(), 0);
  run(tasks.size(), [&](std::size_t t) {
    const auto& task = tasks[t];
    lr[t] = lr_coefficient(task.lambda, lhs[task.left].first, rhs[task.right].first);
  });

  Expansion out(Basis::schur);
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (lr[t] != 0)
      out.add(tasks[t].lambda, lr[t] * lhs[tasks[t].left].second * rhs[tasks[t].right].second);
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

void fill_ssyt(const Partition& lambda, int num_vars, std::size_t cell,
               const std::vector<std::pair<int, int>>& cells, std::vector<std::vector<int>>& grid,
               std::vector<int>& exponents, Polynomial& out) {
  if (cell == cells.size()) {
    ++out[exponents];
    return;
  }
  const auto [r, c] = cells[cell];
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  for (int v = lo; v <= num_vars; ++v) {
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    ++exponents[static_cast<std::size_t>(v - 1)];
    fill_ssyt(lambda, num_vars, cell + 1, cells, grid, exponents, out);
    --exponents[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

Expansion schur_product(const Partition& mu, const Partition& nu) {
  return mult(schur(mu), schur(nu));
}

Expansion mult(const Expansion& a, const Expansion& b) {
  return mult_impl(a, b, [](std::size_t n, auto&& body) { detail::parallel_for(n, body); });
}

Expansion mult_serial(const Expansion& a, const Expansion& b) {
  return mult_impl(a, b, [](std::size_t n, auto&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
  });
}

Expansion skew_schur_expand(const Partition& lambda, const Partition& nu) {
  Expansion out(Basis::schur);
  if (!contains(lambda, nu)) return out;
  const SkewShape shape(lambda, nu);
  detail::LrFiller filler(shape, nullptr);
  filler.run([&](const detail::LrFiller& f) { out.add(f.current_content(), 1); });
  return out;
}

Expansion skew(const Expansion& a, const Partition& nu) {
  require_schur(a, "skew");
  Expansion out(Basis::schur);
  for (const auto& [lambda, c] : a.terms()) out.add_scaled(skew_schur_expand(lambda, nu), c);
  return out;
}

Expansion omega(const Expansion& a) {
  require_schur(a, "omega");
  Expansion out(Basis::schur);
  for (const auto& [lambda, c] : a.terms()) out.add(conjugate(lambda), c);
  return out;
}

Expansion jacobi_trudi(const Partition& lambda, const Partition& nu) {
  const int r = std::max(lambda.length(), nu.length());
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  Expansion out(Basis::h_monomial);
  do {
    std::vector<int> factors;
    bool vanishes = false;
    for (int i = 0; i < r && !vanishes; ++i) {
      const int j = perm[static_cast<std::size_t>(i)];
      const int k = lambda[i] - nu[j] - i + j;
      if (k < 0) vanishes = true;
      else if (k > 0) factors.push_back(k);
    }
    if (vanishes) continue;
    std::sort(factors.begin(), factors.end(), std::greater<>());
    out.add(Partition(std::move(factors)), permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Expansion h_monomial_to_schur(const Expansion& a) {
  if (a.basis() != Basis::h_monomial)
    throw basis_mismatch("h_monomial_to_schur needs an h-monomial expansion");
  Expansion out(Basis::schur);
  for (const auto& [factors, c] : a.terms()) {
    Expansion product = schur({});
    for (int k : factors.parts()) product = mult(product, schur(Partition{k}));
    out.add_scaled(product, c);
  }
  return out;
}

Polynomial schur_polynomial(const Partition& lambda, int num_vars) {
  if (num_vars < 1) throw invalid_input("schur_polynomial needs at least one variable");
  Polynomial out;
  if (lambda.length() > num_vars) return out;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r) {
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  std::vector<int> exponents(static_cast<std::size_t>(num_vars), 0);
  fill_ssyt(lambda, num_vars, 0, cells, grid, exponents, out);
  return out;
}

}  // namespace lrw
