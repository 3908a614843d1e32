#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cattrace/serialize.hpp"

namespace cattrace {

struct RunCaps {
  int order_cap = 64;
  int enumeration_order_cap = 8;
  int max_degree = 3;
  int hh_cap = 20000;
};

Json caps_to_json(const RunCaps& caps);

// Standard report envelope; reports carry no timestamps so identical
// inputs give byte-identical output.
Json make_report(const std::string& command, const Json& inputs, uint64_t seed,
                 const RunCaps& caps, const Json& result);

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

// One row per enumerated cocycle: regular-class count, twisted-algebra
// center dimension, and the closed-form character sum; the three agree for
// every cocycle when the underlying theory holds.
struct SchurRow {
  uint64_t index = 0;
  int regular_classes = 0;
  int center_dim = 0;
  long character_sum = 0;
  bool equal = false;
};

struct SchurSweep {
  std::string group_name;
  int modulus = 0;
  uint64_t cocycle_count = 0;
  int class_count = 0;
  std::vector<SchurRow> rows;
  bool all_equal = false;
};

SchurSweep schur_sweep(const GroupPtr& group, int modulus, int order_cap = 8);
Json schur_report(const SchurSweep& sweep, uint64_t seed, const RunCaps& caps);
std::string schur_csv(const SchurSweep& sweep);

// Validation, character table, twisted-algebra dimensions, and the
// invariants-vs-character-sum comparison for one 2-representation.
Json rep_report(const TwoRep& rep, uint64_t seed, const RunCaps& caps);

}  // namespace cattrace
