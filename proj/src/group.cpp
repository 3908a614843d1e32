#include "cattrace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cattrace {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, int identity,
                                    std::string name, std::vector<std::string> labels,
                                    int assoc_check_cap) {
  int n = (int)table.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table)
    if ((int)row.size() != n) throw std::invalid_argument("group table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  if (identity < 0 || identity >= n) throw std::invalid_argument("identity index out of range");

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]) throw std::invalid_argument("group table row is not a permutation");
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]]) throw std::invalid_argument("group table column is not a permutation");
      seen_col[table[j][i]] = true;
    }
  }
  for (int g = 0; g < n; ++g)
    if (table[identity][g] != g || table[g][identity] != g)
      throw std::invalid_argument("identity law fails at element " + std::to_string(g));

  std::vector<int> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inverse[g] = h;
        break;
      }
    if (inverse[g] < 0) throw std::invalid_argument("no two-sided inverse for element " + std::to_string(g));
  }

  if (n <= assoc_check_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw std::invalid_argument("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
  }

  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  } else if ((int)labels.size() != n) {
    throw std::invalid_argument("label count does not match order");
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  return g;
}

int FiniteGroup::element_order(int g) const {
  int x = g, ord = 1;
  while (x != identity_) {
    x = op(x, g);
    ++ord;
  }
  return ord;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order_; ++g)
    for (int h = g + 1; h < order_; ++h)
      if (op(g, h) != op(h, g)) return false;
  return true;
}

const ConjugacyData& FiniteGroup::conjugacy() const {
  if (conjugacy_) return *conjugacy_;
  ConjugacyData data;
  data.class_of.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    if (data.class_of[g] >= 0) continue;
    // g is minimal in its orbit since smaller elements are already assigned.
    std::vector<int> members;
    for (int h = 0; h < order_; ++h) {
      int c = conjugate(h, g);
      if (data.class_of[c] < 0) {
        data.class_of[c] = (int)data.classes.size();
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    data.classes.push_back(std::move(members));
  }
  data.centralizers.assign(order_, {});
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (op(g, h) == op(h, g)) data.centralizers[g].push_back(h);
  conjugacy_ = std::move(data);
  return *conjugacy_;
}

std::vector<std::pair<int, int>> FiniteGroup::commuting_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (op(g, h) == op(h, g)) pairs.emplace_back(g, h);
  return pairs;
}

FiniteGroup FiniteGroup::opposite() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h) t[g][h] = table_[h][g];
  return from_table(std::move(t), identity_, name_ + "^op", labels_);
}

GroupPtr cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(t), 0, "Z" + std::to_string(n), std::move(labels)));
}

GroupPtr dihedral(int n) {
  if (n <= 0) throw std::invalid_argument("dihedral: n must be positive");
  // Elements (i, e): rotation r^i for e=0 at index i, reflection s r^i at n+i.
  int order = 2 * n;
  auto idx = [n](int i, int e) { return e * n + ((i % n + n) % n); };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int i2 = 0; i2 < n; ++i2) {
          // (i1,e1)*(i2,e2) = (i1 + (-1)^{e1} i2, e1+e2)
          int i = e1 == 0 ? i1 + i2 : i1 - i2;
          t[idx(i1, e1)][idx(i2, e2)] = idx(i, (e1 + e2) % 2);
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    labels[idx(i, 0)] = "r^" + std::to_string(i);
    labels[idx(i, 1)] = "s*r^" + std::to_string(i);
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(t), 0, "D" + std::to_string(n), std::move(labels)));
}

GroupPtr quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto mul = [](int a, int b) {
    int sa = a & 1, sb = b & 1;       // sign bits
    int xa = a >> 1, xb = b >> 1;     // 0:unit 1:i 2:j 3:k
    int sign = sa ^ sb;
    int axis;
    if (xa == 0) axis = xb;
    else if (xb == 0) axis = xa;
    else if (xa == xb) {              // i*i = j*j = k*k = -1
      axis = 0;
      sign ^= 1;
    } else {
      // cyclic rule i*j=k, j*k=i, k*i=j; reversed order flips the sign
      axis = 6 - xa - xb;
      bool forward = (xb - xa + 3) % 3 == 1;
      if (!forward) sign ^= 1;
    }
    return (axis << 1) | sign;
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(t), 0, "Q8", std::move(labels)));
}

namespace {
std::string perm_label(const std::vector<int>& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i) os << p[i] << (i + 1 < p.size() ? " " : "");
  os << "]";
  return os.str();
}
}  // namespace

GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric: n must be between 1 and 5");
  // All permutations in lexicographic order; identity comes first.
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = (int)i;
  int order = (int)perms.size();
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index[c];
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) labels[i] = perm_label(perms[i]);
  // S5 has order 120; the cubic associativity scan is skipped above the cap.
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      std::move(t), 0, "S" + std::to_string(n), std::move(labels)));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  int ng = g->order(), nh = h->order();
  int order = ng * nh;
  auto idx = [nh](int a, int b) { return a * nh + b; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a1 = 0; a1 < ng; ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          t[idx(a1, b1)][idx(a2, b2)] = idx(g->op(a1, a2), h->op(b1, b2));
  std::vector<std::string> labels(order);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      labels[idx(a, b)] = "(" + g->labels()[a] + "," + h->labels()[b] + ")";
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      std::move(t), idx(g->identity(), h->identity()), g->name() + "x" + h->name(),
      std::move(labels)));
}

GroupPtr from_permutation_generators(const std::vector<std::vector<int>>& generators, int cap,
                                     std::string name) {
  if (generators.empty()) throw std::invalid_argument("no generators given");
  size_t deg = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != deg) throw std::invalid_argument("generators act on different sets");
    std::vector<bool> seen(deg, false);
    for (int v : g) {
      if (v < 0 || v >= (int)deg || seen[v]) throw std::invalid_argument("generator is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  // BFS by right multiplication, generators in the given order.
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      std::vector<int> prod(deg);
      for (size_t i = 0; i < deg; ++i) prod[i] = elements[head][gen[i]];
      if (index.emplace(prod, (int)elements.size()).second) {
        elements.push_back(prod);
        if ((int)elements.size() > cap)
          throw std::invalid_argument("permutation closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  int order = (int)elements.size();
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(deg);
      for (size_t i = 0; i < deg; ++i) c[i] = elements[a][elements[b][i]];
      t[a][b] = index.at(c);
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) labels[i] = perm_label(elements[i]);
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(t), 0, std::move(name), std::move(labels)));
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (spec == "1" || spec == "trivial") return cyclic(1);
  // Direct products: components separated by 'x'.
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == 'x') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto atom = [](const std::string& s) -> GroupPtr {
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'C')) return cyclic(std::stoi(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'S') return symmetric(std::stoi(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'D') return dihedral(std::stoi(s.substr(1)));
    if (s == "Q8") return quaternion8();
    throw std::invalid_argument("unknown group spec: " + s);
  };
  auto parts = split(spec);
  GroupPtr g = atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atom(parts[i]));
  return g;
}

}  // namespace cattrace
