#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrw/closed_forms.hpp"
#include "lrw/verify.hpp"

using namespace lrw;

namespace {

enum exit_code { ok = 0, check_failed = 1, usage = 2, cap_exceeded = 3 };

struct cap_error : error {
  using error::error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// One command result: the JSON document and its flat tabular form.
struct Output {
  json doc;
  Table table;
  int status = ok;
};

struct Globals {
  std::string format = "json";
  int max_boxes = 10;
};

std::string cell(const Partition& p) { return to_string(p); }

std::string cell(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void emit(const Output& out, const Globals& g) {
  if (g.format == "json") {
    std::cout << out.doc.dump() << '\n';
    return;
  }
  auto line = [](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "\t" : "") << fields[i];
    std::cout << '\n';
  };
  line(out.table.header);
  for (const auto& r : out.table.rows) line(r);
}

void cap(const Globals& g, int boxes, const std::string& what) {
  if (boxes > g.max_boxes)
    throw cap_error(what + " has " + std::to_string(boxes) + " boxes, above the cap of " +
                    std::to_string(g.max_boxes) + " (raise --max-boxes or LRWKIT_MAX_BOXES)");
}

Output expansion_output(const Expansion& e) {
  Output out{to_json(e), {{"partition", "coeff"}, {}}};
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    out.table.rows.push_back({cell(it->first), std::to_string(it->second)});
  return out;
}

Output wdecomp_output(const WDecomposition& w) {
  Output out{to_json(w), {{"family", "partition", "mult"}, {}}};
  for (const auto& t : out.doc["terms"])
    out.table.rows.push_back({std::string(to_string(w.family)), cell(t["partition"].get<std::vector<int>>()),
                              std::to_string(t["mult"].get<coeff_t>())});
  return out;
}

LieSpec spec_from(const std::string& type, int rank) { return LieSpec(parse_lie_type(type), rank); }

Factor parse_factor(const std::string& text) {
  // m x node, for example "2x3" = V(2 omega_3).
  const auto x = text.find('x');
  if (x == std::string::npos) throw invalid_input("factor must look like MxNODE, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::logic_error&) {
    throw invalid_input("factor must look like MxNODE, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric functions, classical branching and root combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("LRWKIT_MAX_BOXES")) {
    try {
      g.max_boxes = std::stoi(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: LRWKIT_MAX_BOXES must be an integer\n";
      return usage;
    }
  }
  app.add_option("--format", g.format, "json (one JSON document per line) or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--max-boxes", g.max_boxes, "Refuse inputs with more boxes than this")
      ->check(CLI::NonNegativeNumber);

  std::function<Output()> action;

  // part
  auto* part = app.add_subcommand("part", "Partition data and the weight dictionary");
  std::string part_text, weight_text, contains_text;
  int part_rank = 0;
  auto* part_opt = part->add_option("partition", part_text, "Partition such as 4,3,1");
  auto* weight_opt = part->add_option("--weight", weight_text, "Weight such as 1,2,1@rank=3");
  part->add_option("--rank", part_rank, "Also report the weight at this rank");
  part->add_option("--contains", contains_text, "Test whether this partition fits inside");
  part_opt->excludes(weight_opt);
  part->callback([&] {
    action = [&] {
      if (part_text.empty() && weight_text.empty()) throw invalid_input("give a partition or --weight");
      const Partition p = weight_text.empty() ? parse_partition(part_text) : partition_from_weight(parse_weight(weight_text));
      json doc = {{"partition", to_json(p)}, {"size", size(p)}, {"length", p.length()},
                  {"conjugate", to_json(conjugate(p))}};
      Table t{{"partition", "size", "length", "conjugate"}, {{cell(p), std::to_string(size(p)), std::to_string(p.length()), cell(conjugate(p))}}};
      if (part_rank > 0) {
        const auto w = weight_from_partition(p, part_rank);
        doc["weight"] = to_json(w);
        t.header.push_back("weight");
        t.rows[0].push_back(to_string(w));
      }
      if (!contains_text.empty()) {
        const bool c = contains(p, parse_partition(contains_text));
        doc["contains"] = c;
        t.header.push_back("contains");
        t.rows[0].push_back(c ? "true" : "false");
      }
      return Output{doc, t};
    };
  });

  // schur
  auto* schur_cmd = app.add_subcommand("schur", "Schur function arithmetic");
  schur_cmd->require_subcommand(1);
  std::string sa, sb;
  auto* s_mult = schur_cmd->add_subcommand("mult", "s_mu * s_nu");
  s_mult->add_option("mu", sa)->required();
  s_mult->add_option("nu", sb)->required();
  s_mult->callback([&] {
    action = [&] {
      const auto mu = parse_partition(sa), nu = parse_partition(sb);
      cap(g, size(mu) + size(nu), "product");
      return expansion_output(schur_product(mu, nu));
    };
  });
  auto* s_skew = schur_cmd->add_subcommand("skew", "s_{lambda/nu} in the Schur basis");
  s_skew->add_option("lambda", sa)->required();
  s_skew->add_option("nu", sb)->required();
  s_skew->callback([&] {
    action = [&] {
      const auto lambda = parse_partition(sa);
      cap(g, size(lambda), "lambda");
      return expansion_output(skew_schur_expand(lambda, parse_partition(sb)));
    };
  });
  auto* s_jt = schur_cmd->add_subcommand("jt", "Jacobi-Trudi expansion in h-monomials");
  s_jt->add_option("lambda", sa)->required();
  s_jt->add_option("nu", sb, "Inner shape (default empty)");
  s_jt->callback([&] {
    action = [&] {
      const auto lambda = parse_partition(sa);
      cap(g, size(lambda), "lambda");
      return expansion_output(jacobi_trudi(lambda, parse_partition(sb)));
    };
  });
  auto* s_omega = schur_cmd->add_subcommand("omega", "omega(s_lambda)");
  s_omega->add_option("lambda", sa)->required();
  s_omega->callback([&] {
    action = [&] { return expansion_output(omega(schur(parse_partition(sa)))); };
  });

  // lr
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or tableaux");
  std::string lr_lambda, lr_mu, lr_nu;
  bool lr_list = false;
  lr->add_option("lambda", lr_lambda)->required();
  lr->add_option("mu", lr_mu)->required();
  lr->add_option("nu", lr_nu, "Content; required unless --tableaux");
  lr->add_flag("--tableaux", lr_list, "List the LR tableaux of shape lambda/mu");
  lr->callback([&] {
    action = [&] {
      const auto lambda = parse_partition(lr_lambda), mu = parse_partition(lr_mu);
      cap(g, size(lambda), "lambda");
      if (!lr_list) {
        if (lr_nu.empty()) throw invalid_input("lr needs nu, or --tableaux");
        const auto nu = parse_partition(lr_nu);
        const coeff_t c = lr_coefficient(lambda, mu, nu);
        return Output{{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"coeff", c}},
                      {{"lambda", "mu", "nu", "coeff"}, {{cell(lambda), cell(mu), cell(nu), std::to_string(c)}}}};
      }
      const SkewShape shape(lambda, mu);
      const auto tableaux = lr_nu.empty() ? enumerate_lr_tableaux(shape)
                                          : enumerate_lr_tableaux(shape, parse_partition(lr_nu));
      json list = json::array();
      Table t{{"index", "content", "rows"}, {}};
      for (std::size_t i = 0; i < tableaux.size(); ++i) {
        list.push_back(to_json(tableaux[i]));
        std::string rows;
        for (std::size_t r = 0; r < tableaux[i].rows.size(); ++r) rows += (r ? "/" : "") + cell(tableaux[i].rows[r]);
        t.rows.push_back({std::to_string(i + 1), cell(content(tableaux[i])), rows});
      }
      return Output{{{"count", tableaux.size()}, {"tableaux", std::move(list)}}, t};
    };
  });

  // branch
  auto* branch_cmd = app.add_subcommand("branch", "Schur function in the sp or o basis, or back");
  std::string br_lambda, br_to = "sp", br_from;
  branch_cmd->add_option("lambda", br_lambda)->required();
  auto* to_opt = branch_cmd->add_option("--to", br_to, "Target basis: sp or o");
  auto* from_opt = branch_cmd->add_option("--from", br_from, "Rewrite sp_lambda or o_lambda in Schur functions");
  to_opt->excludes(from_opt);
  branch_cmd->callback([&] {
    action = [&] {
      const auto lambda = parse_partition(br_lambda);
      cap(g, size(lambda), "lambda");
      if (!br_from.empty()) return expansion_output(to_schur(Expansion::single(lambda, 1, basis_of(parse_family(br_from)))));
      return expansion_output(branch_schur(lambda, parse_family(br_to)));
    };
  });

  // dcoef
  auto* dcoef = app.add_subcommand("dcoef", "Stable classical tensor product coefficients");
  std::string d_mu, d_nu, d_lambda, d_family = "sp";
  dcoef->add_option("mu", d_mu)->required();
  dcoef->add_option("nu", d_nu)->required();
  dcoef->add_option("lambda", d_lambda, "Single coefficient; omit for the full product");
  dcoef->add_option("--family", d_family, "sp or o");
  dcoef->callback([&] {
    action = [&] {
      const auto mu = parse_partition(d_mu), nu = parse_partition(d_nu);
      cap(g, size(mu) + size(nu), "product");
      const Family f = parse_family(d_family);
      if (d_lambda.empty()) return expansion_output(classical_product(mu, nu, f));
      const auto lambda = parse_partition(d_lambda);
      const coeff_t d = d_coefficient(mu, nu, lambda, f);
      return Output{{{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"lambda", to_json(lambda)}, {"coeff", d}},
                    {{"mu", "nu", "lambda", "coeff"}, {{cell(mu), cell(nu), cell(lambda), std::to_string(d)}}}};
    };
  });

  // wdecomp
  auto* wdecomp = app.add_subcommand("wdecomp", "Irreducible decomposition of W_Sp or W_O");
  std::string w_lambda, w_family = "o";
  wdecomp->add_option("lambda", w_lambda)->required();
  wdecomp->add_option("--family", w_family, "sp or o");
  wdecomp->callback([&] {
    action = [&] {
      const auto lambda = parse_partition(w_lambda);
      cap(g, size(lambda), "lambda");
      return wdecomp_output(w_decomp(lambda, parse_family(w_family)));
    };
  });

  // wtensor
  auto* wtensor = app.add_subcommand("wtensor", "Check W(mu) (x) W(nu) against sum of c W(lambda)");
  std::string t_mu, t_nu, t_family = "o";
  wtensor->add_option("mu", t_mu)->required();
  wtensor->add_option("nu", t_nu)->required();
  wtensor->add_option("--family", t_family, "sp or o");
  wtensor->callback([&] {
    action = [&] {
      const auto mu = parse_partition(t_mu), nu = parse_partition(t_nu);
      cap(g, size(mu) + size(nu), "product");
      const auto sides = w_tensor_check(mu, nu, parse_family(t_family));
      Output out{{{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"equal", sides.equal()},
                  {"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}},
                 {{"side", "partition", "coeff"}, {}}};
      for (const auto& [name, e] : {std::pair{"lhs", &sides.lhs}, std::pair{"rhs", &sides.rhs}})
        for (auto it = e->terms().rbegin(); it != e->terms().rend(); ++it)
          out.table.rows.push_back({name, cell(it->first), std::to_string(it->second)});
      out.status = sides.equal() ? ok : check_failed;
      return out;
    };
  });

  // fermionic
  auto* ferm = app.add_subcommand("fermionic", "Fermionic formula for a tensor product of V(m omega_node)");
  std::string f_type;
  int f_rank = 0;
  std::vector<std::string> f_factors;
  std::string f_weight;
  ferm->add_option("--type", f_type, "A, B, C or D")->required();
  ferm->add_option("--rank", f_rank)->required();
  ferm->add_option("--factor", f_factors, "MxNODE, repeatable")->required();
  ferm->add_option("--weight", f_weight, "Single multiplicity at this weight");
  ferm->callback([&] {
    action = [&] {
      const LieSpec spec = spec_from(f_type, f_rank);
      std::vector<Factor> list;
      int boxes = 0;
      for (const auto& s : f_factors) {
        list.push_back(parse_factor(s));
        boxes += list.back().m * list.back().node;
      }
      const FactorList factors(list);
      factors.check_against(spec);
      cap(g, boxes, "tensor product");
      if (!f_weight.empty()) {
        auto w = parse_weight(f_weight.find('@') == std::string::npos ? f_weight + "@rank=" + std::to_string(f_rank) : f_weight);
        if (w.rank() != f_rank) throw invalid_input("weight rank does not match --rank");
        const coeff_t n = fermionic_multiplicity(spec, factors, w);
        return Output{{{"algebra", spec.name()}, {"weight", to_json(w)}, {"mult", n}},
                      {{"algebra", "weight", "mult"}, {{spec.name(), cell(w.vec()), std::to_string(n)}}}};
      }
      const auto decomposition = fermionic_decomp(spec, factors);
      Output out{fermionic_to_json(spec, factors, decomposition), {{"algebra", "weight", "mult"}, {}}};
      for (auto it = decomposition.rbegin(); it != decomposition.rend(); ++it)
        out.table.rows.push_back({spec.name(), cell(it->first.vec()), std::to_string(it->second)});
      return out;
    };
  });

  // roots
  auto* roots = app.add_subcommand("roots", "Positive roots, beta roots, cone and commutation checks");
  roots->require_subcommand(1);
  std::string r_type;
  int r_rank = 0;
  std::string r_diff;
  bool r_weight_input = false;
  for (auto* sub : {roots->add_subcommand("positive", "All positive roots"),
                    roots->add_subcommand("beta", "The ordered beta roots"),
                    roots->add_subcommand("cone", "Nonnegative beta expansions of a root lattice element"),
                    roots->add_subcommand("commute", "Check the commutation clauses")}) {
    sub->add_option("--type", r_type, "B, C or D")->required();
    sub->add_option("--rank", r_rank)->required();
    if (sub->get_name() == "cone") {
      sub->add_option("diff", r_diff, "Simple-root coordinates, e.g. 1,2,2,1,1")->required();
      sub->add_flag("--weight-coords", r_weight_input, "Read diff in fundamental-weight coordinates");
    }
    const std::string name = sub->get_name();
    sub->callback([&, name] {
      action = [&, name] {
        const LieSpec spec = spec_from(r_type, r_rank);
        if (name == "positive") {
          json list = json::array();
          Table t{{"alpha", "omega"}, {}};
          for (const auto& r : positive_roots(spec)) {
            list.push_back(root_to_json(spec, r));
            t.rows.push_back({cell(r.coords), cell(spec.root_to_weight(r.coords))});
          }
          return Output{{{"algebra", spec.name()}, {"count", list.size()}, {"roots", std::move(list)}}, t};
        }
        if (name == "beta") {
          const auto betas = beta_roots(spec);
          Output out{to_json(betas), {{"index", "label", "alpha", "omega"}, {}}};
          for (std::size_t j = 0; j < betas.roots.size(); ++j) {
            const auto& b = betas.roots[j];
            out.table.rows.push_back({std::to_string(j + 1),
                                      b.extra() ? "extra" : std::to_string(b.k) + "," + std::to_string(b.l),
                                      cell(b.root.coords), cell(spec.root_to_weight(b.root.coords))});
          }
          return out;
        }
        if (name == "cone") {
          std::vector<int> coords;
          std::stringstream ss(r_diff);
          for (std::string item; std::getline(ss, item, ',');) {
            try {
              coords.push_back(std::stoi(item));
            } catch (const std::logic_error&) {
              throw invalid_input("diff must be comma-separated integers");
            }
          }
          if (static_cast<int>(coords.size()) != spec.rank()) throw invalid_input("diff needs one entry per simple root");
          RootLatticeElement diff;
          if (r_weight_input) {
            for (const auto& q : spec.weight_to_root(coords)) {
              if (q.denominator() != 1) throw invalid_input("weight difference is not in the root lattice");
              diff.coords.push_back(static_cast<int>(q.numerator()));
            }
          } else {
            diff.coords = coords;
          }
          int height = 0;
          for (int c : diff.coords) height += std::abs(c);
          cap(g, height, "root lattice element");
          const auto sols = cone_membership(diff, spec);
          Output out{{{"algebra", spec.name()}, {"diff", root_to_json(spec, diff)}, {"solutions", sols}},
                     {{"solution"}, {}}};
          for (const auto& s : sols) out.table.rows.push_back({cell(s)});
          return out;
        }
        const auto report = commute_check(spec);
        Output out{to_json(report), {{"clause", "r", "s", "node", "alpha"}, {}}};
        for (const auto& v : report.violations)
          out.table.rows.push_back({v.clause, std::to_string(v.r), std::to_string(v.s), std::to_string(v.node),
                                    cell(v.witness.coords)});
        out.status = report.ok() ? ok : check_failed;
        return out;
      };
    });
  }

  // closed forms
  auto* closed = app.add_subcommand("closed", "Closed-form decompositions of special W_O and W_Sp");
  closed->require_subcommand(1);
  int ca = 0, cb = 0, cc = 0;
  std::string c_family = "o";
  auto* c_rect = closed->add_subcommand("rect", "W(m omega_ell)");
  c_rect->add_option("m", ca)->required();
  c_rect->add_option("ell", cb)->required();
  c_rect->add_option("--family", c_family, "sp or o");
  c_rect->callback([&] { action = [&] { return wdecomp_output(closed_form_rectangle(ca, cb, parse_family(c_family))); }; });
  auto* c_abc = closed->add_subcommand("abc", "W_O(a omega_1 + b omega_2 + c omega_3)");
  c_abc->add_option("a", ca)->required();
  c_abc->add_option("b", cb)->required();
  c_abc->add_option("c", cc)->required();
  c_abc->callback([&] { action = [&] { return wdecomp_output(closed_form_abc(ca, cb, cc)); }; });
  auto* c_24 = closed->add_subcommand("24", "W_O(a omega_2 + b omega_4)");
  c_24->add_option("a", ca)->required();
  c_24->add_option("b", cb)->required();
  c_24->callback([&] { action = [&] { return wdecomp_output(closed_form_24(ca, cb)); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  std::string v_level, v_config, v_out;
  verify->add_option("--level", v_level, "quick or full (overrides the config file)");
  verify->add_option("--config", v_config, "JSON file with keys level and max_boxes")->check(CLI::ExistingFile);
  verify->add_option("--out", v_out, "Also write the report to this file");
  verify->callback([&] {
    action = [&] {
      VerifyConfig config;
      if (!v_config.empty()) {
        std::ifstream in(v_config);
        std::stringstream buf;
        buf << in.rdbuf();
        config = parse_verify_config(buf.str());
      }
      if (!v_level.empty()) config.level = parse_verify_level(v_level);
      const auto report = run_verify_suite(config.level);
      Output out{report.to_json(), {{"name", "status"}, {}}};
      for (const auto& c : report.checks) out.table.rows.push_back({c.name, c.passed ? "pass" : "fail"});
      if (!v_out.empty()) {
        std::ofstream file(v_out);
        if (!file) throw invalid_input("cannot write " + v_out);
        file << out.doc.dump(2) << '\n';
      }
      out.status = report.ok() ? ok : check_failed;
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    const Output out = action();
    emit(out, g);
    return out.status;
  } catch (const cap_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
