#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

#include "cattrace/acceptance.hpp"
#include "cattrace/generate.hpp"
#include "cattrace/hochschild.hpp"
#include "cattrace/report.hpp"
#include "cattrace/serialize.hpp"
#include "cattrace/tworep.hpp"

using namespace cattrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  std::string format = "json";
  std::string out;
  uint64_t seed = 1;
  RunCaps caps;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");
  cmd->add_option("--seed", opts.seed, "seed for randomized sweeps");
  cmd->add_option("--cap-order", opts.caps.enumeration_order_cap,
                  "group order cap for cocycle enumeration");
  cmd->add_option("--max-degree", opts.caps.max_degree, "top Hochschild degree");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(opts.out, std::ios::binary);
    f << text;
  }
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  f >> j;
  return j;
}

NamedAction named_instance(const std::string& name) {
  if (name == "sign-kz2") return sign_action_on_group_algebra_z2();
  if (name == "swap-kxk") return swap_action_on_kxk();
  if (name == "inner-m2") return inner_action_on_m2();
  if (name == "inversion-kz3") return inversion_action_on_kz3();
  throw std::invalid_argument("unknown named instance: " + name);
}

NamedAction action_from_opts(const std::string& named, const std::string& input) {
  if (!named.empty()) return named_instance(named);
  if (!input.empty()) {
    GroupAction action = action_from_json(load_json(input));
    return NamedAction{"file:" + input, action.algebra, action};
  }
  throw std::invalid_argument("specify --named or --input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for categorical traces, 2-characters, twisted group algebras, "
               "crossed products and low-degree Hochschild cohomology"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // ---- group ----------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "group builders and inspection");
  auto* group_build = group_cmd->add_subcommand("build", "build a group and print its table");
  static CommonOpts g_opts;
  static std::string g_spec, g_generators;
  group_build->add_option("--group", g_spec, "group spec, e.g. Z4, Z2xZ2, S3, D4, Q8");
  group_build->add_option("--generators", g_generators,
                          "permutation generators, e.g. \"1,0,2;1,2,0\" closes to S3");
  add_common(group_build, g_opts);
  group_build->callback([&] {
    GroupPtr g;
    if (!g_generators.empty()) {
      std::vector<std::vector<int>> gens;
      std::stringstream ss(g_generators);
      std::string part;
      while (std::getline(ss, part, ';')) {
        std::vector<int> perm;
        std::stringstream ps(part);
        std::string tok;
        while (std::getline(ps, tok, ',')) perm.push_back(std::stoi(tok));
        gens.push_back(std::move(perm));
      }
      g = from_permutation_generators(gens, g_opts.caps.order_cap, "closure");
    } else if (!g_spec.empty()) {
      g = parse_group_spec(g_spec);
    } else {
      throw std::invalid_argument("specify --group or --generators");
    }
    Json j = to_json(*g);
    const auto& conj = g->conjugacy();
    Json result{{"group", j},
                {"classes", (int)conj.classes.size()},
                {"commuting_pairs", (int)g->commuting_pairs().size()},
                {"exponent", g->exponent()}};
    emit(g_opts, make_report("group build", Json{{"group", g_spec}}, g_opts.seed, g_opts.caps,
                             result)
                     .dump(2));
  });

  // ---- cocycle ---------------------------------------------------------
  auto* co_cmd = app.add_subcommand("cocycle", "2-cocycle tools");
  static CommonOpts co_opts;
  static std::string co_group, co_input;
  static int co_modulus = 2;
  static uint64_t co_index = 0;

  auto* co_validate = co_cmd->add_subcommand("validate", "check the cocycle identity");
  co_validate->add_option("--input", co_input, "cocycle JSON file")->required();
  add_common(co_validate, co_opts);
  co_validate->callback([&] {
    Cocycle c = cocycle_from_json(load_json(co_input));
    auto violations = validate(c);
    Json vio = Json::array();
    for (size_t i = 0; i < violations.size() && i < 16; ++i)
      vio.push_back(Json::array({violations[i].g, violations[i].h, violations[i].k}));
    Json result{{"valid", violations.empty()},
                {"violation_count", violations.size()},
                {"violations", vio}};
    emit(co_opts, make_report("cocycle validate", Json{{"file", co_input}}, co_opts.seed,
                              co_opts.caps, result)
                      .dump(2));
    if (!violations.empty()) exit_code = kExitVerifyFail;
  });

  auto* co_enum = co_cmd->add_subcommand("enumerate", "dimension and count of the cocycle space");
  co_enum->add_option("--group", co_group)->required();
  co_enum->add_option("--modulus", co_modulus, "prime modulus");
  add_common(co_enum, co_opts);
  co_enum->callback([&] {
    GroupPtr g = parse_group_spec(co_group);
    CocycleEnumerator en(g, co_modulus, co_opts.caps.enumeration_order_cap);
    auto counts = cohomology_class_count(g, co_modulus, co_opts.caps.enumeration_order_cap);
    Json result{{"dim_z2", counts.dim_z2},
                {"dim_b2", counts.dim_b2},
                {"class_count", counts.class_count},
                {"cocycle_count", en.count()}};
    emit(co_opts, make_report("cocycle enumerate",
                              Json{{"group", co_group}, {"modulus", co_modulus}}, co_opts.seed,
                              co_opts.caps, result)
                      .dump(2));
  });

  auto* co_regular = co_cmd->add_subcommand("regular", "c-regular classes of one cocycle");
  co_regular->add_option("--group", co_group);
  co_regular->add_option("--modulus", co_modulus);
  co_regular->add_option("--index", co_index, "index into the enumeration");
  co_regular->add_option("--input", co_input, "cocycle JSON file (overrides group/index)");
  add_common(co_regular, co_opts);
  co_regular->callback([&] {
    Cocycle c = co_input.empty()
                    ? CocycleEnumerator(parse_group_spec(co_group), co_modulus,
                                        co_opts.caps.enumeration_order_cap)
                          .at(co_index)
                    : cocycle_from_json(load_json(co_input));
    auto report = regular_classes(c);
    Json classes = Json::array();
    for (const auto& cls : report.classes) {
      Json row{{"representative", cls.representative}, {"regular", cls.is_regular}};
      if (cls.witness) row["witness"] = Json::array({cls.witness->first, cls.witness->second});
      classes.push_back(row);
    }
    Json result{{"regular_count", report.regular_count}, {"classes", classes}};
    emit(co_opts, make_report("cocycle regular", to_json(c), co_opts.seed, co_opts.caps, result)
                      .dump(2));
  });

  auto* co_chi = co_cmd->add_subcommand("chi", "closed-form 2-character table");
  co_chi->add_option("--group", co_group);
  co_chi->add_option("--modulus", co_modulus);
  co_chi->add_option("--index", co_index);
  co_chi->add_option("--input", co_input);
  add_common(co_chi, co_opts);
  co_chi->callback([&] {
    Cocycle c = co_input.empty()
                    ? CocycleEnumerator(parse_group_spec(co_group), co_modulus,
                                        co_opts.caps.enumeration_order_cap)
                          .at(co_index)
                    : cocycle_from_json(load_json(co_input));
    std::vector<std::vector<std::string>> rows;
    Json table = Json::array();
    for (auto [g, h] : c.group->commuting_pairs()) {
      CycScalar chi = two_character_closed_form(c, g, h);
      table.push_back(Json{{"g", g}, {"h", h}, {"chi", chi.to_string()}});
      rows.push_back({std::to_string(g), std::to_string(h), chi.to_string()});
    }
    if (co_opts.format == "csv") {
      emit(co_opts, render_csv({"g", "h", "chi"}, rows));
    } else {
      emit(co_opts, make_report("cocycle chi", to_json(c), co_opts.seed, co_opts.caps,
                                Json{{"table", table}})
                        .dump(2));
    }
  });

  // ---- tworep ----------------------------------------------------------
  auto* rep_cmd = app.add_subcommand("tworep", "2-representation tools");
  static CommonOpts rep_opts;
  static std::string rep_input, rep_input2;

  auto* rep_validate = rep_cmd->add_subcommand("validate", "permutation/pentagon/unit checks");
  rep_validate->add_option("--input", rep_input)->required();
  add_common(rep_validate, rep_opts);
  rep_validate->callback([&] {
    TwoRep rep = tworep_from_json(load_json(rep_input));
    auto violations = validate_two_rep(rep);
    Json vio = Json::array();
    for (const auto& v : violations) vio.push_back(v.describe());
    Json result{{"valid", violations.empty()}, {"violations", vio}};
    emit(rep_opts, make_report("tworep validate", Json{{"file", rep_input}}, rep_opts.seed,
                               rep_opts.caps, result)
                       .dump(2));
    if (!violations.empty()) exit_code = kExitVerifyFail;
  });

  auto* rep_character = rep_cmd->add_subcommand("character", "trace-space dimensions per g");
  rep_character->add_option("--input", rep_input)->required();
  add_common(rep_character, rep_opts);
  rep_character->callback([&] {
    TwoRep rep = tworep_from_json(load_json(rep_input));
    Json dims = Json::array();
    for (int g = 0; g < rep.group->order(); ++g)
      dims.push_back(Json{{"g", g}, {"dim", (int)rep.trace_basis(g).size()}});
    emit(rep_opts, make_report("tworep character", Json{{"file", rep_input}}, rep_opts.seed,
                               rep_opts.caps, Json{{"trace_dims", dims}})
                       .dump(2));
  });

  auto* rep_chi = rep_cmd->add_subcommand("chi-table", "2-character on commuting pairs");
  rep_chi->add_option("--input", rep_input)->required();
  add_common(rep_chi, rep_opts);
  rep_chi->callback([&] {
    TwoRep rep = tworep_from_json(load_json(rep_input));
    std::vector<std::vector<std::string>> rows;
    Json table = Json::array();
    for (auto [g, h] : rep.group->commuting_pairs()) {
      CycScalar chi = two_character(rep, g, h);
      table.push_back(Json{{"g", g}, {"h", h}, {"chi", chi.to_string()}});
      rows.push_back({std::to_string(g), std::to_string(h), chi.to_string()});
    }
    if (rep_opts.format == "csv")
      emit(rep_opts, render_csv({"g", "h", "chi"}, rows));
    else
      emit(rep_opts, make_report("tworep chi-table", Json{{"file", rep_input}}, rep_opts.seed,
                                 rep_opts.caps, Json{{"table", table}})
                         .dump(2));
  });

  auto* rep_box = rep_cmd->add_subcommand("boxprod", "external product of two representations");
  rep_box->add_option("--input", rep_input)->required();
  rep_box->add_option("--input2", rep_input2)->required();
  add_common(rep_box, rep_opts);
  rep_box->callback([&] {
    TwoRep a = tworep_from_json(load_json(rep_input));
    TwoRep b = tworep_from_json(load_json(rep_input2));
    TwoRep ab = box_rep(a, b);
    emit(rep_opts, make_report("tworep boxprod",
                               Json{{"file", rep_input}, {"file2", rep_input2}}, rep_opts.seed,
                               rep_opts.caps, to_json(ab))
                       .dump(2));
  });

  auto* rep_inner = rep_cmd->add_subcommand("innerprod", "inner product of two representations");
  rep_inner->add_option("--input", rep_input)->required();
  rep_inner->add_option("--input2", rep_input2)->required();
  add_common(rep_inner, rep_opts);
  rep_inner->callback([&] {
    TwoRep a = tworep_from_json(load_json(rep_input));
    TwoRep b = tworep_from_json(load_json(rep_input2));
    int dim = inner_product_dim(a, b);
    CycScalar cs = inner_product_character_sum(a, b);
    bool match = cs.is_rational() && is_integer(cs.rational_part()) &&
                 Rational((long)dim) == cs.rational_part();
    Json result{{"inner_product_dim", dim},
                {"character_sum", cs.to_string()},
                {"formula_match", match}};
    emit(rep_opts, make_report("tworep innerprod",
                               Json{{"file", rep_input}, {"file2", rep_input2}}, rep_opts.seed,
                               rep_opts.caps, result)
                       .dump(2));
    if (!match) exit_code = kExitVerifyFail;
  });

  auto* rep_twisted = rep_cmd->add_subcommand("twisted-algebra", "R_rho presentation");
  rep_twisted->add_option("--input", rep_input)->required();
  add_common(rep_twisted, rep_opts);
  rep_twisted->callback([&] {
    TwoRep rep = tworep_from_json(load_json(rep_input));
    auto p = twisted_group_algebra(rep);
    Json basis = Json::array();
    for (auto [g, j] : p.basis) basis.push_back(Json::array({g, j}));
    Json result{{"dim", p.algebra->dim()},
                {"basis", basis},
                {"center_dim", (int)center(*p.algebra).size()},
                {"algebra", to_json(*p.algebra)}};
    emit(rep_opts, make_report("tworep twisted-algebra", Json{{"file", rep_input}}, rep_opts.seed,
                               rep_opts.caps, result)
                       .dump(2));
  });

  // ---- rep-report ------------------------------------------------------
  auto* report_cmd = app.add_subcommand("rep-report", "full verification report for one rep");
  static CommonOpts rr_opts;
  static std::string rr_input;
  report_cmd->add_option("--input", rr_input)->required();
  add_common(report_cmd, rr_opts);
  report_cmd->callback([&] {
    TwoRep rep = tworep_from_json(load_json(rr_input));
    Json j = rep_report(rep, rr_opts.seed, rr_opts.caps);
    emit(rr_opts, j.dump(2));
    if (!j["result"]["valid"].get<bool>() ||
        (j["result"].contains("corollary_match") && !j["result"]["corollary_match"].get<bool>()))
      exit_code = kExitVerifyFail;
  });

  // ---- schur -----------------------------------------------------------
  auto* schur_cmd = app.add_subcommand(
      "schur", "sweep all cocycles: regular classes vs center dim vs character sum");
  static CommonOpts schur_opts;
  static std::string schur_group;
  static int schur_modulus = 2;
  schur_cmd->add_option("--group", schur_group)->required();
  schur_cmd->add_option("--modulus", schur_modulus, "prime modulus");
  add_common(schur_cmd, schur_opts);
  schur_cmd->callback([&] {
    SchurSweep sweep = schur_sweep(parse_group_spec(schur_group), schur_modulus,
                                   schur_opts.caps.enumeration_order_cap);
    if (schur_opts.format == "csv")
      emit(schur_opts, schur_csv(sweep));
    else
      emit(schur_opts, schur_report(sweep, schur_opts.seed, schur_opts.caps).dump(2));
    if (!sweep.all_equal) exit_code = kExitVerifyFail;
  });

  // ---- algebra ---------------------------------------------------------
  auto* alg_cmd = app.add_subcommand("algebra", "structure-constant algebra tools");
  static CommonOpts alg_opts;
  static std::string alg_input, alg_input2, alg_named;
  static int alg_count = 20;

  auto* alg_center = alg_cmd->add_subcommand("center", "center dimension and basis size");
  alg_center->add_option("--input", alg_input)->required();
  add_common(alg_center, alg_opts);
  alg_center->callback([&] {
    auto a = algebra_from_json(load_json(alg_input));
    auto errs = a.validate();
    if (!errs.empty()) throw std::invalid_argument("invalid algebra: " + errs.front());
    auto simple = count_simples(a);
    Json result{{"center_dim", simple.center_dim},
                {"radical_probe_dim", simple.radical_probe_dim},
                {"caveat", simple.caveat}};
    if (simple.simple_count) result["simple_count"] = *simple.simple_count;
    emit(alg_opts, make_report("algebra center", Json{{"file", alg_input}}, alg_opts.seed,
                               alg_opts.caps, result)
                       .dump(2));
  });

  auto* alg_crossed = alg_cmd->add_subcommand("crossed", "crossed product A x| G");
  alg_crossed->add_option("--input", alg_input, "group action JSON file");
  alg_crossed->add_option("--named", alg_named, "sign-kz2|swap-kxk|inner-m2|inversion-kz3");
  add_common(alg_crossed, alg_opts);
  alg_crossed->callback([&] {
    NamedAction na = action_from_opts(alg_named, alg_input);
    StructAlgebra cp = crossed_product(na.algebra, na.action);
    Json result{{"dim", cp.dim()},
                {"center_dim", (int)center(cp).size()},
                {"algebra", to_json(cp)}};
    emit(alg_opts, make_report("algebra crossed", Json{{"instance", na.name}}, alg_opts.seed,
                               alg_opts.caps, result)
                       .dump(2));
  });

  auto* alg_decompose = alg_cmd->add_subcommand("decompose", "center decomposition over classes");
  alg_decompose->add_option("--input", alg_input, "group action JSON file");
  alg_decompose->add_option("--named", alg_named, "sign-kz2|swap-kxk|inner-m2|inversion-kz3");
  add_common(alg_decompose, alg_opts);
  alg_decompose->callback([&] {
    NamedAction na = action_from_opts(alg_named, alg_input);
    auto rep = center_decomposition(na.algebra, na.action);
    Json classes = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : rep.classes) {
      classes.push_back(Json{{"class_rep", c.representative},
                             {"center_dim", c.center_dim},
                             {"invariant_dim", c.invariant_dim}});
      rows.push_back({std::to_string(c.representative), std::to_string(c.center_dim),
                      std::to_string(c.invariant_dim)});
    }
    Json result{{"classes", classes},
                {"sum_invariant_dims", rep.sum_invariant_dims},
                {"crossed_center_dim", rep.crossed_center_dim},
                {"dims_match", rep.dims_match},
                {"assembled_central", rep.assembled_central},
                {"assembled_spans_center", rep.assembled_spans_center},
                {"assembled_multiplicative", rep.assembled_multiplicative}};
    if (alg_opts.format == "csv")
      emit(alg_opts, render_csv({"class_rep", "center_dim", "invariant_dim"}, rows));
    else
      emit(alg_opts, make_report("algebra decompose", Json{{"instance", na.name}}, alg_opts.seed,
                                 alg_opts.caps, result)
                         .dump(2));
    if (!rep.ok()) exit_code = kExitVerifyFail;
  });

  auto* alg_schur = alg_cmd->add_subcommand("schur", "same sweep as the top-level schur command");
  static std::string alg_group;
  static int alg_modulus = 2;
  alg_schur->add_option("--group", alg_group)->required();
  alg_schur->add_option("--modulus", alg_modulus);
  add_common(alg_schur, alg_opts);
  alg_schur->callback([&] {
    SchurSweep sweep = schur_sweep(parse_group_spec(alg_group), alg_modulus,
                                   alg_opts.caps.enumeration_order_cap);
    if (alg_opts.format == "csv")
      emit(alg_opts, schur_csv(sweep));
    else
      emit(alg_opts, schur_report(sweep, alg_opts.seed, alg_opts.caps).dump(2));
    if (!sweep.all_equal) exit_code = kExitVerifyFail;
  });

  auto* alg_kunneth = alg_cmd->add_subcommand("kunneth", "degree-zero Kunneth for two algebras");
  alg_kunneth->add_option("--input", alg_input)->required();
  alg_kunneth->add_option("--input2", alg_input2)->required();
  add_common(alg_kunneth, alg_opts);
  alg_kunneth->callback([&] {
    auto a = std::make_shared<const StructAlgebra>(algebra_from_json(load_json(alg_input)));
    auto b = std::make_shared<const StructAlgebra>(algebra_from_json(load_json(alg_input2)));
    auto r = kunneth_center(a, regular_bimodule(a), b, regular_bimodule(b));
    Json result{{"dim_a", r.dim_a},
                {"dim_b", r.dim_b},
                {"dim_tensor", r.dim_tensor},
                {"map_bijective", r.map_bijective}};
    emit(alg_opts, make_report("algebra kunneth",
                               Json{{"file", alg_input}, {"file2", alg_input2}}, alg_opts.seed,
                               alg_opts.caps, result)
                       .dump(2));
    if (!r.map_bijective) exit_code = kExitVerifyFail;
  });

  auto* alg_adjunction =
      alg_cmd->add_subcommand("adjunction", "randomized induction/restriction adjunction sweep");
  alg_adjunction->add_option("--count", alg_count, "number of instances");
  add_common(alg_adjunction, alg_opts);
  alg_adjunction->callback([&] {
    std::mt19937_64 rng(alg_opts.seed);
    std::vector<NamedAction> actions = {sign_action_on_group_algebra_z2(), swap_action_on_kxk(),
                                        inversion_action_on_kz3()};
    int passed = 0;
    Json rows = Json::array();
    for (int i = 0; i < alg_count; ++i) {
      const NamedAction& na = actions[rng() % actions.size()];
      auto crossed = std::make_shared<const StructAlgebra>(crossed_product(na.algebra, na.action));
      Module m;
      m.algebra = na.algebra;
      m.dim = na.algebra->dim();
      for (int b = 0; b < m.dim; ++b) m.act.push_back(na.algebra->left_matrix(b));
      Module n;
      n.algebra = crossed;
      if (rng() % 2 == 0) {
        n.dim = crossed->dim();
        for (int b = 0; b < n.dim; ++b) n.act.push_back(crossed->left_matrix(b));
      } else {
        n = induce_module(na.algebra, na.action, crossed, m);
      }
      auto res = induction_adjunction_check(na.algebra, na.action, m, n);
      rows.push_back(Json{{"instance", na.name},
                          {"hom_ind", res.hom_ind},
                          {"hom_res", res.hom_res},
                          {"equal", res.ok()}});
      if (res.ok()) ++passed;
    }
    Json result{{"instances", alg_count}, {"passed", passed}, {"rows", rows}};
    emit(alg_opts, make_report("algebra adjunction", Json{{"count", alg_count}}, alg_opts.seed,
                               alg_opts.caps, result)
                       .dump(2));
    if (passed != alg_count) exit_code = kExitVerifyFail;
  });

  // ---- hh ----------------------------------------------------------------
  auto* hh_cmd = app.add_subcommand("hh", "Hochschild cohomology");
  static CommonOpts hh_opts;
  static std::string hh_input, hh_input2, hh_named;
  static bool hh_normalized = false;

  auto* hh_dims = hh_cmd->add_subcommand("dims", "HH dimensions of an algebra");
  hh_dims->add_option("--input", hh_input)->required();
  hh_dims->add_flag("--normalized", hh_normalized, "use the normalized subcomplex");
  add_common(hh_dims, hh_opts);
  hh_dims->callback([&] {
    auto a = std::make_shared<const StructAlgebra>(algebra_from_json(load_json(hh_input)));
    auto r = hochschild_dims(a, regular_bimodule(a), hh_opts.caps.max_degree, hh_normalized,
                             hh_opts.caps.hh_cap);
    Json table = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (size_t n = 0; n < r.dims.size(); ++n) {
      table.push_back(Json{{"degree", n}, {"dim", r.dims[n]}});
      rows.push_back({std::to_string(n), std::to_string(r.dims[n])});
    }
    if (hh_opts.format == "csv")
      emit(hh_opts, render_csv({"degree", "dim"}, rows));
    else
      emit(hh_opts, make_report("hh dims", Json{{"file", hh_input}}, hh_opts.seed, hh_opts.caps,
                                Json{{"table", table}})
                        .dump(2));
  });

  auto* hh_kunneth = hh_cmd->add_subcommand("kunneth", "HH Kunneth comparison for A, B, A(x)B");
  hh_kunneth->add_option("--input", hh_input)->required();
  hh_kunneth->add_option("--input2", hh_input2)->required();
  add_common(hh_kunneth, hh_opts);
  hh_kunneth->callback([&] {
    auto a = std::make_shared<const StructAlgebra>(algebra_from_json(load_json(hh_input)));
    auto b = std::make_shared<const StructAlgebra>(algebra_from_json(load_json(hh_input2)));
    int degree = std::min(hh_opts.caps.max_degree, 2);
    auto r = kunneth_hh(a, b, degree, hh_opts.caps.hh_cap);
    Json result{{"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}};
    emit(hh_opts, make_report("hh kunneth", Json{{"file", hh_input}, {"file2", hh_input2}},
                              hh_opts.seed, hh_opts.caps, result)
                      .dump(2));
    if (!r.equal) exit_code = kExitVerifyFail;
  });

  auto* hh_orbifold = hh_cmd->add_subcommand("orbifold", "HH(A x| G) vs invariant twisted sum");
  hh_orbifold->add_option("--input", hh_input, "group action JSON file");
  hh_orbifold->add_option("--named", hh_named, "sign-kz2|swap-kxk|inner-m2|inversion-kz3");
  add_common(hh_orbifold, hh_opts);
  hh_orbifold->callback([&] {
    NamedAction na = action_from_opts(hh_named, hh_input);
    int degree = std::min(hh_opts.caps.max_degree, 2);
    auto r = orbifold_hh_check(na.algebra, na.action, degree, hh_opts.caps.hh_cap);
    Json result{{"crossed", r.crossed},
                {"invariants", r.invariants},
                {"action_commutes", r.action_commutes_with_differential},
                {"equal", r.equal}};
    emit(hh_opts, make_report("hh orbifold", Json{{"instance", na.name}}, hh_opts.seed,
                              hh_opts.caps, result)
                      .dump(2));
    if (!r.equal) exit_code = kExitVerifyFail;
  });

  // ---- accept ------------------------------------------------------------
  auto* accept_cmd = app.add_subcommand("accept", "run the full verification suite");
  static CommonOpts acc_opts;
  add_common(accept_cmd, acc_opts);
  accept_cmd->callback([&] {
    auto results = run_acceptance(acc_opts.seed);
    for (const auto& r : results)
      std::fprintf(stderr, "%s  [%d] %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.index,
                   r.name.c_str(), r.details.c_str(), r.seconds);
    Json j = acceptance_report(results, acc_opts.seed, acc_opts.caps);
    emit(acc_opts, j.dump(2));
    if (!all_passed(results)) exit_code = kExitVerifyFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}
