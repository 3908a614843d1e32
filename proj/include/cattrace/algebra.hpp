#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cattrace/cocycle.hpp"
#include "cattrace/group.hpp"
#include "cattrace/matrix.hpp"

namespace cattrace {

// Associative unital algebra by structure constants over one cyclotomic
// field: e_i * e_j = sum_k sc[i][j][k] e_k.
class StructAlgebra {
 public:
  StructAlgebra(int dim, int conductor, std::vector<CycScalar> sc, std::vector<CycScalar> unit);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  const CycScalar& sc(int i, int j, int k) const { return sc_[((size_t)i * dim_ + j) * dim_ + k]; }
  const std::vector<CycScalar>& unit() const { return unit_; }

  std::vector<CycScalar> mul(const std::vector<CycScalar>& x, const std::vector<CycScalar>& y) const;
  CycMatrix left_matrix(int i) const;   // L_{e_i}
  CycMatrix right_matrix(int i) const;  // R_{e_i}
  CycMatrix left_matrix_of(const std::vector<CycScalar>& x) const;

  // Associativity on all basis triples plus the two unit laws.
  std::vector<std::string> validate() const;

  StructAlgebra promoted(int conductor) const;

 private:
  int dim_, conductor_;
  std::vector<CycScalar> sc_;
  std::vector<CycScalar> unit_;
};

using AlgebraPtr = std::shared_ptr<const StructAlgebra>;

// Left module given by action matrices per algebra basis element.
struct Module {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<CycMatrix> act;

  std::vector<std::string> validate() const;
};

// A-A-bimodule; left_act must be an algebra map, right_act an anti-map,
// and the two actions commute.
struct Bimodule {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<CycMatrix> left_act, right_act;

  std::vector<std::string> validate() const;
};

// G acting by unit-preserving algebra automorphisms.
struct GroupAction {
  GroupPtr group;
  AlgebraPtr algebra;
  std::vector<CycMatrix> autos;

  const CycMatrix& auto_of(int g) const { return autos[g]; }
  std::vector<std::string> validate() const;
};

struct EquivariantBimodule {
  Bimodule base;
  GroupAction action;
  std::vector<CycMatrix> compat;  // u_g, with u_g(a.m.b) = g(a).u_g(m).g(b)

  std::vector<std::string> validate() const;
};

// Builders.
StructAlgebra diagonal_algebra(int n, int conductor = 1);          // k^n
StructAlgebra matrix_algebra(int n, int conductor = 1);            // n x n matrices
StructAlgebra group_algebra(const GroupPtr& g, int conductor = 1);
StructAlgebra twisted_group_algebra_from_cocycle(const Cocycle& c);
StructAlgebra tensor_algebra(const StructAlgebra& a, const StructAlgebra& b);

Bimodule regular_bimodule(const AlgebraPtr& a);
// Right action precomposed with auto[g]: (m g) . a = (m . g(a)) g.
Bimodule twisted_bimodule(const AlgebraPtr& a, const GroupAction& action, int g);
Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n, const AlgebraPtr& ab);

// Centers as kernel bases (column vectors).
std::vector<CycMatrix> center(const StructAlgebra& a);
std::vector<CycMatrix> bimodule_center(const Bimodule& m);

StructAlgebra crossed_product(const AlgebraPtr& a, const GroupAction& action);
inline int crossed_index(int i, int g, int group_order) { return i * group_order + g; }

struct CenterDecompositionClass {
  int representative = 0;
  int center_dim = 0;       // dim Center_A(Ag)
  int invariant_dim = 0;    // dim Center_A(Ag)^{C_g}
  std::vector<CycMatrix> center_basis;
  std::vector<CycMatrix> invariant_basis;
};

struct CenterDecompositionReport {
  std::vector<CenterDecompositionClass> classes;
  int sum_invariant_dims = 0;
  int crossed_center_dim = 0;
  bool dims_match = false;
  // Conjugation-transported central lifts, one per invariant basis element.
  std::vector<std::vector<CycScalar>> assembled;
  bool assembled_central = false;
  bool assembled_spans_center = false;
  bool assembled_multiplicative = false;
  bool ok() const {
    return dims_match && assembled_central && assembled_spans_center && assembled_multiplicative;
  }
};

CenterDecompositionReport center_decomposition(const AlgebraPtr& a, const GroupAction& action);

int module_hom_dim(const Module& m, const Module& n);

Module induce_module(const AlgebraPtr& a, const GroupAction& action,
                     const AlgebraPtr& crossed, const Module& m);
Module restrict_module(const AlgebraPtr& a, const GroupAction& action,
                       const AlgebraPtr& crossed, const Module& n);

struct AdjunctionReport {
  int hom_ind = 0;  // dim Hom_{A x| G}(Ind M, N)
  int hom_res = 0;  // dim Hom_A(M, Res N)
  bool ok() const { return hom_ind == hom_res; }
};

AdjunctionReport induction_adjunction_check(const AlgebraPtr& a, const GroupAction& action,
                                            const Module& m, const Module& n);

struct CountSimplesReport {
  int center_dim = 0;
  int radical_probe_dim = 0;  // kernel of (x,y) -> trace(L_{xy})
  bool semisimple_probe_passed = false;
  std::optional<int> simple_count;  // claimed only when the probe passes
  std::string caveat;
};

CountSimplesReport count_simples(const StructAlgebra& a);

struct KunnethCenterReport {
  int dim_a = 0, dim_b = 0;      // centers of the factors
  int dim_tensor = 0;            // center of the tensor bimodule
  bool map_bijective = false;    // Kronecker of center bases is a basis
};

KunnethCenterReport kunneth_center(const AlgebraPtr& a, const Bimodule& m, const AlgebraPtr& b,
                                   const Bimodule& n);

struct EquivariantTraceReport {
  std::vector<CycMatrix> center_basis;
  std::vector<CycMatrix> action_on_center;  // per g, in center coordinates
  int invariant_dim = 0;
  std::vector<CycMatrix> invariant_basis;   // in center coordinates
};

EquivariantTraceReport equivariant_trace_action(const EquivariantBimodule& e);

// M = sum_g Ag with u_s transporting the g-summand to sgs^{-1} by auto_s.
EquivariantBimodule equivariant_sum_bimodule(const AlgebraPtr& a, const GroupAction& action);

// R = sum_g Center_A(Ag) with product inherited from the crossed product,
// the twisted group algebra in the bimodule model.
struct TwistedCenterAlgebra {
  AlgebraPtr algebra;                    // structure constants on center coordinates
  std::vector<int> offsets;              // start of each g-block
  std::vector<std::vector<CycMatrix>> center_bases;  // per g
  std::vector<CycMatrix> g_action;       // G-action in center coordinates
};

TwistedCenterAlgebra twisted_center_algebra(const AlgebraPtr& a, const GroupAction& action);

// Trivial action of G on A (every auto = identity).
GroupAction trivial_action(const GroupPtr& g, const AlgebraPtr& a);

}  // namespace cattrace
