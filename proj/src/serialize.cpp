#include "cattrace/serialize.hpp"

#include <sstream>

namespace cattrace {

Json to_json(const CycScalar& s) {
  Json coeffs = Json::array();
  for (const auto& q : s.coeffs()) {
    auto [num, den] = rational_to_decimal(q);
    coeffs.push_back(Json::array({num, den}));
  }
  return Json{{"conductor", s.conductor()}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return CycScalar((long)j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return CycScalar(rational_from_decimal(s, "1"));
    return CycScalar(rational_from_decimal(s.substr(0, slash), s.substr(slash + 1)));
  }
  int conductor = j.at("conductor").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_array())
      coeffs.push_back(rational_from_decimal(c.at(0).get<std::string>(), c.at(1).get<std::string>()));
    else if (c.is_number_integer())
      coeffs.push_back(Rational((long)c.get<long long>()));
    else
      throw std::invalid_argument("bad coefficient in scalar JSON");
  }
  if ((int)coeffs.size() != euler_phi(conductor))
    throw std::invalid_argument("scalar coefficient count must be phi(conductor)");
  return CycScalar::from_reduced(conductor, std::move(coeffs));
}

Json to_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"conductor", m.conductor()},
              {"entries", rows}};
}

CycMatrix matrix_from_json(const Json& j) {
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  int conductor = j.value("conductor", 1);
  std::vector<CycScalar> entries;
  for (const auto& row : j.at("entries"))
    for (const auto& cell : row) entries.push_back(promote(scalar_from_json(cell), conductor));
  return CycMatrix::from_entries(rows, cols, std::move(entries));
}

Json to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()},   {"order", g.order()},       {"table", g.table()},
              {"identity", g.identity()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const Json& j) {
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  int identity = j.value("identity", 0);
  std::string name = j.value("name", std::string{});
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(table), identity, std::move(name), std::move(labels)));
}

GroupPtr group_from_json_or_spec(const Json& j) {
  if (j.is_string()) return parse_group_spec(j.get<std::string>());
  return group_from_json(j);
}

Json to_json(const Cocycle& c) {
  return Json{{"group", to_json(*c.group)}, {"modulus", c.modulus}, {"exps", c.exps}};
}

Cocycle cocycle_from_json(const Json& j) {
  GroupPtr g = group_from_json_or_spec(j.at("group"));
  return Cocycle(g, j.at("modulus").get<int>(),
                 j.at("exps").get<std::vector<std::vector<int>>>());
}

Json to_json(const VectMatrix& f) {
  return Json{{"m_src", f.m_src}, {"m_dst", f.m_dst}, {"dims", f.dims}};
}

VectMatrix vectmatrix_from_json(const Json& j) {
  VectMatrix f(j.at("m_dst").get<int>(), j.at("m_src").get<int>());
  f.dims = j.at("dims").get<std::vector<std::vector<int>>>();
  if ((int)f.dims.size() != f.m_dst) throw std::invalid_argument("dims table shape mismatch");
  for (const auto& row : f.dims) {
    if ((int)row.size() != f.m_src) throw std::invalid_argument("dims table shape mismatch");
    for (int d : row)
      if (d < 0) throw std::invalid_argument("negative entry dimension");
  }
  return f;
}

Json to_json(const TwoNat& n) {
  Json blocks = Json::array();
  for (int i = 0; i < n.source.m_dst; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n.source.m_src; ++j) row.push_back(to_json(n.blocks[i][j]));
    blocks.push_back(row);
  }
  return Json{{"source", to_json(n.source)}, {"target", to_json(n.target)},
              {"conductor", n.conductor}, {"blocks", blocks}};
}

TwoNat twonat_from_json(const Json& j) {
  TwoNat n(vectmatrix_from_json(j.at("source")), vectmatrix_from_json(j.at("target")),
           j.value("conductor", 1));
  const auto& blocks = j.at("blocks");
  for (int i = 0; i < n.source.m_dst; ++i)
    for (int jj = 0; jj < n.source.m_src; ++jj) {
      CycMatrix b = matrix_from_json(blocks.at(i).at(jj));
      if (b.rows() != n.target.dims[i][jj] || b.cols() != n.source.dims[i][jj])
        throw std::invalid_argument("block shape does not match the dims tables");
      n.blocks[i][jj] = mat_promote(b, n.conductor);
    }
  return n;
}

Json to_json(const TwoRep& rep) {
  Json perm = Json::object();
  for (int g = 0; g < rep.group->order(); ++g) perm[std::to_string(g)] = rep.perm[g];
  Json lambda = Json::object();
  for (int g = 0; g < rep.group->order(); ++g)
    for (int h = 0; h < rep.group->order(); ++h) {
      Json cell = Json::array();
      for (const auto& s : rep.lambda[g][h]) cell.push_back(to_json(s));
      lambda[std::to_string(g) + "," + std::to_string(h)] = cell;
    }
  Json unit = Json::array();
  for (const auto& s : rep.unit_lambda) unit.push_back(to_json(s));
  return Json{{"group", to_json(*rep.group)}, {"m", rep.m}, {"conductor", rep.conductor},
              {"perm", perm}, {"lambda", lambda}, {"unit_lambda", unit}};
}

TwoRep tworep_from_json(const Json& j) {
  TwoRep rep;
  rep.group = group_from_json_or_spec(j.at("group"));
  rep.m = j.at("m").get<int>();
  rep.conductor = j.value("conductor", 1);
  int n = rep.group->order();
  rep.perm.assign(n, {});
  for (int g = 0; g < n; ++g) {
    rep.perm[g] = j.at("perm").at(std::to_string(g)).get<std::vector<int>>();
    if ((int)rep.perm[g].size() != rep.m) throw std::invalid_argument("permutation length mismatch");
  }
  rep.lambda.assign(n, std::vector<std::vector<CycScalar>>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Json& cell = j.at("lambda").at(std::to_string(g) + "," + std::to_string(h));
      if ((int)cell.size() != rep.m) throw std::invalid_argument("lambda length mismatch");
      for (const auto& s : cell)
        rep.lambda[g][h].push_back(promote(scalar_from_json(s), rep.conductor));
    }
  for (const auto& s : j.at("unit_lambda"))
    rep.unit_lambda.push_back(promote(scalar_from_json(s), rep.conductor));
  if ((int)rep.unit_lambda.size() != rep.m)
    throw std::invalid_argument("unit_lambda length mismatch");
  return rep;
}

Json to_json(const StructAlgebra& a) {
  Json sc = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < a.dim(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < a.dim(); ++k) row.push_back(to_json(a.sc(i, j, k)));
      plane.push_back(row);
    }
    sc.push_back(plane);
  }
  Json unit = Json::array();
  for (const auto& s : a.unit()) unit.push_back(to_json(s));
  return Json{{"dim", a.dim()}, {"conductor", a.conductor()}, {"sc", sc}, {"unit", unit}};
}

StructAlgebra algebra_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  int conductor = j.value("conductor", 1);
  std::vector<CycScalar> sc;
  sc.reserve((size_t)dim * dim * dim);
  for (const auto& plane : j.at("sc"))
    for (const auto& row : plane)
      for (const auto& cell : row) sc.push_back(promote(scalar_from_json(cell), conductor));
  std::vector<CycScalar> unit;
  for (const auto& cell : j.at("unit")) unit.push_back(promote(scalar_from_json(cell), conductor));
  return StructAlgebra(dim, conductor, std::move(sc), std::move(unit));
}

Json to_json(const GroupAction& a) {
  Json autos = Json::array();
  for (const auto& m : a.autos) autos.push_back(to_json(m));
  return Json{{"group", to_json(*a.group)}, {"algebra", to_json(*a.algebra)}, {"auto", autos}};
}

GroupAction action_from_json(const Json& j) {
  GroupAction a;
  a.group = group_from_json_or_spec(j.at("group"));
  a.algebra = std::make_shared<const StructAlgebra>(algebra_from_json(j.at("algebra")));
  for (const auto& m : j.at("auto"))
    a.autos.push_back(mat_promote(matrix_from_json(m), a.algebra->conductor()));
  auto errs = a.validate();
  if (!errs.empty()) throw std::invalid_argument("invalid group action: " + errs.front());
  return a;
}

std::string content_hash(const Json& j) {
  std::string dump = j.dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace cattrace
