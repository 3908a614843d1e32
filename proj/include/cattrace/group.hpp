#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cattrace {

struct ConjugacyData {
  std::vector<std::vector<int>> classes;       // sorted members, rep = first = minimal index
  std::vector<int> class_of;                   // element -> class index
  std::vector<std::vector<int>> centralizers;  // per element, sorted
};

// Finite group as a validated multiplication table. Element 0 is the
// identity unless stated otherwise at construction. Immutable once built.
class FiniteGroup {
 public:
  static constexpr int kDefaultOrderCap = 64;

  // Validates Latin-square, identity, inverses; associativity for N <= cap.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, int identity,
                                std::string name = "", std::vector<std::string> labels = {},
                                int assoc_check_cap = kDefaultOrderCap);

  int order() const { return order_; }
  int op(int g, int h) const { return table_[g][h]; }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_[g]; }
  int conjugate(int h, int g) const { return op(op(h, g), inverse_[h]); }  // h g h^-1
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  const ConjugacyData& conjugacy() const;

  // All ordered pairs (g, h) with gh = hg, lexicographic.
  std::vector<std::pair<int, int>> commuting_pairs() const;

  // Opposite group: product reversed, same labels.
  FiniteGroup opposite() const;

 private:
  FiniteGroup() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
  std::vector<std::string> labels_;
  mutable std::optional<ConjugacyData> conjugacy_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic(int n);
GroupPtr dihedral(int n);     // order 2n
GroupPtr quaternion8();
GroupPtr symmetric(int n);    // n <= 5
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
// BFS closure; elements indexed in discovery order, identity first,
// generators in the given order. Throws when closure exceeds the cap.
GroupPtr from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                     int cap = FiniteGroup::kDefaultOrderCap,
                                     std::string name = "");

// Parses "Z4", "Z2xZ2", "S3", "D4" (dihedral of order 8), "Q8", "1".
GroupPtr parse_group_spec(const std::string& spec);

}  // namespace cattrace
