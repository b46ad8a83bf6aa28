#include "lrw/verify.hpp"

#include <functional>

#include "lrw/closed_forms.hpp"
#include "lrw/parallel.hpp"

namespace lrw {

VerifyLevel parse_verify_level(std::string_view text) {
  if (text == "quick") return VerifyLevel::quick;
  if (text == "full") return VerifyLevel::full;
  throw invalid_input("verify level must be quick or full, got '" + std::string(text) + "'");
}

std::string_view to_string(VerifyLevel level) { return level == VerifyLevel::quick ? "quick" : "full"; }

int VerifyReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.passed ? 1 : 0;
  return n;
}

int VerifyReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

json VerifyReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"expected", c.expected},
                    {"actual", c.actual}});
  return {{"level", std::string(lrw::to_string(level))},
          {"summary", {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}}},
          {"checks", std::move(list)}};
}

VerifyConfig parse_verify_config(std::string_view text) {
  VerifyConfig config;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return config;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw invalid_input("configuration must be a JSON object");
  if (doc.contains("level")) config.level = parse_verify_level(doc.at("level").get<std::string>());
  if (doc.contains("max_boxes")) {
    config.max_boxes = doc.at("max_boxes").get<int>();
    if (config.max_boxes < 0) throw invalid_input("max_boxes must be nonnegative");
  }
  return config;
}

namespace {

using CheckFn = std::function<VerifyCheck()>;

VerifyCheck compare(std::string name, json expected, json actual) {
  const bool ok = expected == actual;
  return {std::move(name), ok, std::move(expected), std::move(actual)};
}

// Collects failures of a property sweep; only the first few are reported.
struct Sweep {
  std::string name;
  long cases = 0;
  long failures = 0;
  json examples = json::array();

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
  }

  VerifyCheck finish() && {
    return {std::move(name), failures == 0, {{"failures", 0}},
            {{"cases", cases}, {"failures", failures}, {"examples", std::move(examples)}}};
  }
};

json terms_json(std::initializer_list<Partition> parts) {
  WDecomposition w{Family::o, {}, {}};
  for (const auto& p : parts) w.terms[p] = 1;
  return to_json(w)["terms"];
}

std::string label(const Partition& p) { return "<" + to_string(p) + ">"; }

// Root-lattice coordinates of lambda - mu at the given spec, or nullopt when
// the difference is not a nonnegative integral combination of simple roots.
std::optional<RootLatticeElement> weight_difference(const LieSpec& spec, const Partition& lambda,
                                                    const Partition& mu) {
  const auto wl = weight_from_partition(lambda, spec.rank()).vec();
  const auto wm = weight_from_partition(mu, spec.rank()).vec();
  std::vector<int> diff(wl.size());
  for (std::size_t i = 0; i < wl.size(); ++i) diff[i] = wl[i] - wm[i];
  RootLatticeElement out;
  for (const auto& q : spec.weight_to_root(diff)) {
    if (q.denominator() != 1 || q.numerator() < 0) return std::nullopt;
    out.coords.push_back(static_cast<int>(q.numerator()));
  }
  return out;
}

// Decomposes a symmetric polynomial into Schur polynomials by peeling off the
// lexicographically largest monomial.
Expansion polynomial_to_schur(Polynomial poly, int num_vars) {
  Expansion out;
  while (!poly.empty()) {
    auto top = std::prev(poly.end());
    const Partition lambda(top->first);
    const coeff_t c = top->second;
    out.add(lambda, c);
    for (const auto& [mono, k] : schur_polynomial(lambda, num_vars)) {
      auto& slot = poly[mono];
      slot -= c * k;
      if (slot == 0) poly.erase(mono);
    }
  }
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<CheckFn> quick_checks() {
  std::vector<CheckFn> checks;
  checks.push_back([] {
    const auto p = partition_from_weight(parse_weight("1,2,1@rank=3"));
    const auto w = weight_from_partition(Partition{4, 3, 1}, 3);
    return compare("weight dictionary 1,2,1 <-> 4,3,1", {{"partition", {4, 3, 1}}, {"weight", {1, 2, 1}}},
                   {{"partition", to_json(p)}, {"weight", to_json(w)}});
  });
  checks.push_back([] {
    return compare("containment of <2,2> in <3,2,1>", true, contains(Partition{3, 2, 1}, Partition{2, 2}));
  });
  checks.push_back([] {
    return compare("W_O(<3,2,1>) six components",
                   terms_json({{3, 2, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {1, 1}, {2}}),
                   to_json(w_decomp(Partition{3, 2, 1}, Family::o))["terms"]);
  });
  checks.push_back([] {
    json actual = json::array();
    for (const Partition& inner : {Partition{}, Partition{1, 1}, Partition{2, 2}})
      actual.push_back(enumerate_lr_tableaux(SkewShape(Partition{3, 2, 1}, inner)).size());
    return compare("LR tableaux on <3,2,1>/{0,<1,1>,<2,2>}", {1, 3, 2}, actual);
  });
  checks.push_back([] {
    const Partition top = partition_24(1, 1);
    std::size_t total = 0;
    for (const auto& nu : domino_partitions_within(top, true)) total += enumerate_lr_tableaux(SkewShape(top, nu)).size();
    return compare("LR tableaux behind W_O(omega_2 + omega_4)", 7, total);
  });
  checks.push_back([] {
    return compare("omega_2 multiplicity in W_O(omega_2 + omega_4)", 2,
                   w_decomp(partition_24(1, 1), Family::o).mult(Partition{1, 1}));
  });
  checks.push_back([] {
    const LieSpec d5(LieType::D, 5);
    json actual = json::array();
    for (const auto& b : beta_roots(d5).roots) actual.push_back(d5.root_to_weight(b.root.coords));
    return compare("D5 beta roots in weight coordinates",
                   {{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {-1, 0, 1, 0, 0}}, actual);
  });
  checks.push_back([] {
    json expected = json::array(), actual = json::array();
    for (int m = 3; m <= 8; ++m) {
      expected.push_back(beta_roots(LieSpec(LieType::B, m)).size());
      actual.push_back(beta_roots(LieSpec(LieType::D, m + 1)).size());
    }
    return compare("beta counts B_m vs D_{m+1}, m = 3..8", expected, actual);
  });
  checks.push_back([] {
    return compare("closed form abc(1,1,1)", terms_json({{3, 2, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {1, 1}, {2}}),
                   to_json(closed_form_abc(1, 1, 1))["terms"]);
  });
  checks.push_back([] {
    return compare("closed form 24(1,1) equals W_O", to_json(w_decomp(partition_24(1, 1), Family::o)),
                   to_json(closed_form_24(1, 1)));
  });
  checks.push_back([] {
    return compare("closed form rectangle(1,2,O)", terms_json({{1, 1}, {}}),
                   to_json(closed_form_rectangle(1, 2, Family::o))["terms"]);
  });
  checks.push_back([] {
    const LieSpec d5(LieType::D, 5);
    const auto diff = weight_difference(d5, Partition{3, 2, 1}, Partition{2, 2});
    json actual = diff ? json(cone_membership(*diff, d5)) : json(nullptr);
    return compare("D5 cone solutions for <3,2,1> - 2 omega_2", {{0, 1, 0}}, actual);
  });
  return checks;
}

std::vector<CheckFn> full_checks() {
  std::vector<CheckFn> checks;
  checks.push_back([] {
    Sweep s{"conjugation is an involution, |p| <= 12"};
    for (const auto& p : partitions_up_to(12)) s.record(conjugate(conjugate(p)) == p, label(p));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"weight dictionary round trip, |p| <= 10, rank <= 8"};
    for (const auto& p : partitions_up_to(10))
      for (int rank = std::max(p.length(), 1); rank <= 8; ++rank)
        s.record(partition_from_weight(weight_from_partition(p, rank)) == p, label(p));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"containment is a partial order, |p| <= 8"};
    const auto all = partitions_up_to(8);
    for (const auto& a : all) {
      s.record(contains(a, a), label(a));
      for (const auto& b : all) {
        if (!contains(a, b)) continue;
        if (contains(b, a)) s.record(a == b, label(a) + " " + label(b));
        for (const auto& c : all)
          if (contains(b, c)) s.record(contains(a, c), label(a) + " " + label(b) + " " + label(c));
      }
    }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"LR coefficients against Schur polynomial products, |mu| + |nu| <= 6"};
    for (const auto& mu : partitions_up_to(6))
      for (const auto& nu : partitions_up_to(6 - size(mu))) {
        const int vars = std::max(size(mu) + size(nu), 1);
        const auto oracle =
            polynomial_to_schur(multiply(schur_polynomial(mu, vars), schur_polynomial(nu, vars)), vars);
        Expansion direct;
        for (const auto& lambda : partitions_of(size(mu) + size(nu)))
          direct.add(lambda, lr_coefficient(lambda, mu, nu));
        s.record(direct == oracle, label(mu) + " * " + label(nu));
      }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"Jacobi-Trudi agrees with skew expansion, |lambda| <= 7"};
    for (const auto& lambda : partitions_up_to(7))
      for (const auto& nu : partitions_contained_in(lambda))
        s.record(h_monomial_to_schur(jacobi_trudi(lambda, nu)) == skew_schur_expand(lambda, nu),
                 label(lambda) + "/" + label(nu));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"closed form rectangles, m, ell <= 4"};
    for (int m = 1; m <= 4; ++m)
      for (int ell = 1; ell <= 4; ++ell)
        for (Family f : {Family::sp, Family::o}) {
          const Partition rect(std::vector<int>(static_cast<std::size_t>(ell), m));
          s.record(closed_form_rectangle(m, ell, f) == w_decomp(rect, f),
                   std::to_string(m) + "x" + std::to_string(ell) + " " + std::string(to_string(f)));
        }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"closed form abc, a, b, c <= 3"};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          s.record(closed_form_abc(a, b, c) == w_decomp(abc_partition(a, b, c), Family::o),
                   std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"closed form 24, a, b <= 3"};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        s.record(closed_form_24(a, b) == w_decomp(partition_24(a, b), Family::o),
                 std::to_string(a) + "," + std::to_string(b));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"tensor property, |mu| + |nu| <= 6"};
    for (Family f : {Family::sp, Family::o})
      for (const auto& mu : partitions_up_to(6))
        for (const auto& nu : partitions_up_to(6 - size(mu)))
          s.record(w_tensor_check(mu, nu, f).equal(),
                   std::string(to_string(f)) + " " + label(mu) + " " + label(nu));
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"d coefficients: Sp = O, top degree = LR, even grading, |mu|, |nu| <= 4"};
    for (const auto& mu : partitions_up_to(4))
      for (const auto& nu : partitions_up_to(4)) {
        const auto sp = classical_product(mu, nu, Family::sp);
        const auto o = classical_product(mu, nu, Family::o);
        s.record(sp.terms() == o.terms(), "sp vs o " + label(mu) + " " + label(nu));
        const int top = size(mu) + size(nu);
        for (const auto& [lambda, d] : sp.terms()) {
          const int deficit = top - size(lambda);
          s.record(deficit >= 0 && deficit % 2 == 0, "grading " + label(mu) + " " + label(nu) + " " + label(lambda));
          if (deficit == 0) s.record(d == lr_coefficient(lambda, mu, nu), "top " + label(lambda));
        }
        for (const auto& lambda : partitions_of(top))
          s.record(d_coefficient(mu, nu, lambda) == lr_coefficient(lambda, mu, nu), "top " + label(lambda));
      }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"fermionic formula on rectangles, m, ell <= 3"};
    for (LieType t : {LieType::B, LieType::C, LieType::D})
      for (int m = 1; m <= 3; ++m)
        for (int ell = 1; ell <= 3; ++ell) {
          const Partition rect(std::vector<int>(static_cast<std::size_t>(ell), m));
          const StableFamily sf = t == LieType::C ? StableFamily::sp
                                  : t == LieType::B ? StableFamily::o_odd
                                                    : StableFamily::o_even;
          const int low = std::max(min_stable_rank(rect, sf), t == LieType::D ? 4 : 2);
          const auto w = w_decomp(rect, t == LieType::C ? Family::sp : Family::o);
          for (int rank = low; rank <= low + 1; ++rank) {
            const LieSpec spec(t, rank);
            std::map<DominantWeight, coeff_t> expected;
            for (const auto& [mu, mult] : w.terms) expected[weight_from_partition(mu, rank)] = mult;
            s.record(fermionic_decomp(spec, FactorList({{m, ell}})) == expected,
                     spec.name() + " " + std::to_string(m) + " omega_" + std::to_string(ell));
          }
        }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"commutation clauses, ranks 3..8"};
    for (LieType t : {LieType::B, LieType::C, LieType::D})
      for (int rank = t == LieType::D ? 4 : 3; rank <= 8; ++rank) {
        const auto report = commute_check(LieSpec(t, rank));
        for (const auto& v : report.violations)
          s.record(false, report.betas.spec.name() + " clause " + v.clause + " r=" + std::to_string(v.r) +
                              " i=" + std::to_string(v.node));
        s.record(true, report.betas.spec.name());
      }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"components lie inside lambda; trivial component iff domino class, |lambda| <= 8"};
    for (const auto& lambda : partitions_up_to(8))
      for (Family f : {Family::sp, Family::o}) {
        const auto w = w_decomp(lambda, f);
        for (const auto& [mu, m] : w.terms) s.record(contains(lambda, mu), label(lambda) + " " + label(mu));
        const bool in_class = f == Family::sp ? in_Yh(lambda) : in_Yv(lambda);
        s.record(w.mult(Partition{}) == (in_class ? 1 : 0), std::string(to_string(f)) + " " + label(lambda));
      }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"type-A supported differences vanish, |lambda| <= 6, rank 6"};
    struct Case {
      LieType type;
      Family family;
      int max_rows;
    };
    for (const Case c : {Case{LieType::B, Family::o, 5}, Case{LieType::C, Family::sp, 5}, Case{LieType::D, Family::o, 4}}) {
      const LieSpec spec(c.type, 6);
      for (const auto& lambda : partitions_up_to(6)) {
        if (lambda.length() > c.max_rows) continue;
        for (const auto& [mu, m] : w_decomp(lambda, c.family).terms) {
          const auto eta = weight_difference(spec, lambda, mu);
          const std::string what = spec.name() + " " + label(lambda) + " " + label(mu);
          if (!eta) {
            s.record(false, what + " outside Q+");
            continue;
          }
          s.record(eta->is_zero() || !type_a_support(*eta, spec), what);
        }
      }
    }
    return std::move(s).finish();
  });
  checks.push_back([] {
    Sweep s{"D5 cone condition with the r bounds, a, b, c <= 2"};
    const LieSpec d5(LieType::D, 5);
    const auto betas = beta_roots(d5);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          const Partition lambda = abc_partition(a, b, c);
          for (const auto& [mu, m] : w_decomp(lambda, Family::o).terms) {
            const auto diff = weight_difference(d5, lambda, mu);
            bool ok = false;
            if (diff)
              for (const auto& sol : cone_membership(*diff, betas))
                ok = ok || (sol[0] <= b && sol[1] <= a && sol[1] + sol[2] <= c);
            s.record(ok, label(lambda) + " " + label(mu));
          }
        }
    return std::move(s).finish();
  });
  return checks;
}

}  // namespace

VerifyReport run_verify_suite(VerifyLevel level) {
  auto checks = quick_checks();
  if (level == VerifyLevel::full)
    for (auto& c : full_checks()) checks.push_back(std::move(c));
  std::vector<VerifyCheck> results(checks.size());
  detail::parallel_for(checks.size(), [&](std::size_t i) {
    try {
      results[i] = checks[i]();
    } catch (const std::exception& e) {
      results[i] = {"check " + std::to_string(i + 1), false, "no exception", e.what()};
    }
  });
  return {level, std::move(results)};
}

}  // namespace lrw
