#include "cattrace/report.hpp"

#include <sstream>

#include "cattrace/tworep.hpp"

namespace cattrace {

Json caps_to_json(const RunCaps& caps) {
  return Json{{"order_cap", caps.order_cap},
              {"enumeration_order_cap", caps.enumeration_order_cap},
              {"max_degree", caps.max_degree},
              {"hh_cap", caps.hh_cap}};
}

Json make_report(const std::string& command, const Json& inputs, uint64_t seed,
                 const RunCaps& caps, const Json& result) {
  return Json{{"command", command},
              {"inputs", inputs},
              {"input_hash", content_hash(inputs)},
              {"seed", seed},
              {"caps", caps_to_json(caps)},
              {"result", result}};
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << row[i] << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
  return os.str();
}

SchurSweep schur_sweep(const GroupPtr& group, int modulus, int order_cap) {
  SchurSweep sweep;
  sweep.group_name = group->name();
  sweep.modulus = modulus;
  const auto& G = *group;
  sweep.class_count = (int)G.conjugacy().classes.size();
  CocycleEnumerator en(group, modulus, order_cap);
  sweep.cocycle_count = en.count();
  sweep.all_equal = true;
  auto commuting = G.commuting_pairs();
  for (uint64_t i = 0; i < sweep.cocycle_count; ++i) {
    Cocycle c = en.at(i);
    SchurRow row;
    row.index = i;
    row.regular_classes = regular_classes(c).regular_count;
    row.center_dim = (int)center(twisted_group_algebra_from_cocycle(c)).size();
    CycScalar total = CycScalar::zero(modulus);
    for (auto [g, h] : commuting) total = cyc_add(total, two_character_closed_form(c, g, h));
    CycScalar avg = cyc_scale(total, Rational(1, G.order()));
    if (!avg.is_rational() || !is_integer(avg.rational_part()))
      throw std::logic_error("character sum is not an integer");
    row.character_sum = to_long_checked(avg.rational_part());
    row.equal = row.regular_classes == row.center_dim &&
                (long)row.regular_classes == row.character_sum;
    sweep.all_equal &= row.equal;
    sweep.rows.push_back(row);
  }
  return sweep;
}

Json schur_report(const SchurSweep& sweep, uint64_t seed, const RunCaps& caps) {
  Json rows = Json::array();
  for (const auto& r : sweep.rows)
    rows.push_back(Json{{"index", r.index},
                        {"regular_classes", r.regular_classes},
                        {"center_dim", r.center_dim},
                        {"character_sum", r.character_sum},
                        {"equal", r.equal}});
  Json inputs{{"group", sweep.group_name}, {"modulus", sweep.modulus}};
  Json result{{"class_count", sweep.class_count},
              {"cocycle_count", sweep.cocycle_count},
              {"all_equal", sweep.all_equal},
              {"rows", rows}};
  return make_report("schur", inputs, seed, caps, result);
}

std::string schur_csv(const SchurSweep& sweep) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : sweep.rows)
    rows.push_back({std::to_string(r.index), std::to_string(r.regular_classes),
                    std::to_string(r.center_dim), std::to_string(r.character_sum),
                    r.equal ? "true" : "false"});
  return render_csv({"index", "regular_classes", "center_dim", "character_sum", "equal"}, rows);
}

Json rep_report(const TwoRep& rep, uint64_t seed, const RunCaps& caps) {
  Json inputs{{"rep", to_json(rep)}};
  auto violations = validate_two_rep(rep);
  Json violation_list = Json::array();
  for (const auto& v : violations) violation_list.push_back(v.describe());
  Json result;
  result["valid"] = violations.empty();
  result["violations"] = violation_list;
  if (violations.empty()) {
    const auto& G = *rep.group;
    Json chi = Json::array();
    for (auto [g, h] : G.commuting_pairs())
      chi.push_back(Json{{"g", g}, {"h", h}, {"chi", two_character(rep, g, h).to_string()}});
    result["chi_table"] = chi;
    auto presentation = twisted_group_algebra(rep);
    Json basis = Json::array();
    for (auto [g, j] : presentation.basis) basis.push_back(Json::array({g, j}));
    result["twisted_algebra"] = Json{{"dim", presentation.algebra->dim()}, {"basis", basis}};
    int inv = invariants_dim(rep);
    CycScalar cs = character_sum(rep);
    result["invariants_dim"] = inv;
    result["character_sum"] = cs.to_string();
    result["corollary_match"] =
        cs.is_rational() && is_integer(cs.rational_part()) &&
        Rational((long)inv) == cs.rational_part();
  }
  return make_report("rep-report", inputs, seed, caps, result);
}

}  // namespace cattrace
