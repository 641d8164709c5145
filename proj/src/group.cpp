#include "nfourier/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "nfourier/error.hpp"

namespace nfourier {

namespace {

constexpr int kFullAssociativityBound = 512;
constexpr long kRandomTripleCount = 1000000;

std::string default_label(int i) { return "g" + std::to_string(i); }

}  // namespace

Element FiniteGroup::power(Element x, long e) const {
  Element base = x;
  if (e < 0) {
    base = inv(x);
    e = -e;
  }
  Element acc = identity_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long FiniteGroup::element_order(Element x) const {
  long m = 1;
  Element acc = x;
  while (acc != identity_) {
    acc = mul(acc, x);
    ++m;
  }
  return m;
}

GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail("MalformedTable", "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail("MalformedTable", "row " + std::to_string(i) + " has length " +
                                 std::to_string(table[i].size()) + ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail("MalformedTable", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + std::to_string(table[i][j]) + " out of range");
  }

  // Every row and column must be a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++)
        fail("MalformedTable", "row " + std::to_string(i) + " repeats element " +
                                   std::to_string(table[i][j]));
      if (seen_col[table[j][i]]++)
        fail("MalformedTable", "column " + std::to_string(i) + " repeats element " +
                                   std::to_string(table[j][i]));
    }
  }

  // Locate the two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail("NoIdentity", "no two-sided identity element");

  std::vector<Element> inv(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inv[g] = h;
        break;
      }
    if (inv[g] < 0) fail("MissingInverse", "element " + std::to_string(g) + " has no inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      fail("NonAssociative", "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ") violates associativity");
  };
  if (n <= kFullAssociativityBound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);  // fixed seed: reproducible spot check
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (long t = 0; t < kRandomTripleCount; ++t) check_triple(dist(rng), dist(rng), dist(rng));
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->identity_ = identity;
  g->mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g->mul_[i * n + j] = table[i][j];
  g->inv_ = std::move(inv);
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  } else if (static_cast<int>(labels.size()) != n) {
    fail("MalformedTable", "label count does not match order");
  }
  g->labels_ = std::move(labels);

  // Conjugacy classes: ascending scan, so each representative is the smallest
  // index in its class and classes come out sorted by representative.
  g->class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (g->class_of_[x] >= 0) continue;
    int id = static_cast<int>(g->classes_.size());
    std::set<Element> orbit;
    for (int v = 0; v < n; ++v) orbit.insert(g->conj(v, x));
    std::vector<Element> members(orbit.begin(), orbit.end());
    for (Element m : members) g->class_of_[m] = id;
    g->classes_.push_back(std::move(members));
  }

  g->abelian_ = true;
  for (int a = 0; a < n && g->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  long expn = 1;
  for (int x = 0; x < n; ++x) expn = std::lcm(expn, g->element_order(x));
  g->exponent_ = expn;
  return g;
}

GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap) {
  if (degree < 1) fail("NotAPermutation", "degree must be >= 1");
  using Perm = std::vector<int>;
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& p = generators[gi];
    if (static_cast<int>(p.size()) != degree)
      fail("NotAPermutation", "generator " + std::to_string(gi) + " has wrong length");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        fail("NotAPermutation", "generator " + std::to_string(gi) + " is not a bijection");
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
    Perm r(degree);
    for (int x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };

  std::vector<Perm> elements{id};
  std::map<Perm, int> index{{id, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      Perm next = compose(elements[cur], gen);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= order_cap)
          fail("OrderLimitExceeded",
               "closure exceeds cap of " + std::to_string(order_cap) + " elements");
        elements.push_back(std::move(next));
        todo.push(static_cast<int>(elements.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    for (int v : elements[i]) os << v << (degree > 10 ? "." : "");
    labels[i] = os.str();
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elements[i], elements[j]));
  }
  return group_from_table(table, std::move(labels));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) fail("MalformedTable", "cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return group_from_table(table, std::move(labels));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  const int n = parent_->order();
  to_sub_.assign(n, -1);
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= n) fail("NotASubgroup", "member index out of range");
    to_sub_[members_[i]] = static_cast<int>(i);
  }
  if (members_.empty() || to_sub_[parent_->identity()] < 0)
    fail("NotASubgroup", "member set does not contain the identity");
  const int m = static_cast<int>(members_.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = parent_->label(members_[i]);
    if (to_sub_[parent_->inv(members_[i])] < 0)
      fail("NotASubgroup", "member set not closed under inverse at " + std::to_string(members_[i]));
    for (int j = 0; j < m; ++j) {
      int prod = parent_->mul(members_[i], members_[j]);
      if (to_sub_[prod] < 0)
        fail("NotASubgroup", "member set not closed under product at (" +
                                 std::to_string(members_[i]) + "," + std::to_string(members_[j]) + ")");
      table[i][j] = to_sub_[prod];
    }
  }
  group_ = group_from_table(table, std::move(labels));
}

int Subgroup::to_sub(Element parent_elt) const {
  int s = to_sub_[parent_elt];
  if (s < 0) fail("NotASubgroup", "element " + std::to_string(parent_elt) + " not in subgroup");
  return s;
}

GroupMap::GroupMap(GroupPtr src, GroupPtr tgt, std::vector<Element> im)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(im)) {
  const int n = source->order();
  if (static_cast<int>(images.size()) != n)
    fail("NotHomomorphism", "image list length does not match source order");
  for (Element v : images)
    if (v < 0 || v >= target->order()) fail("NotHomomorphism", "image index out of range");
  if (images[source->identity()] != target->identity())
    fail("NotHomomorphism", "identity does not map to identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        fail("NotHomomorphism", "multiplicativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
}

bool GroupMap::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (Element v : images)
    if (seen[v]++) return false;
  return true;
}

bool GroupMap::is_surjective() const {
  std::vector<char> seen(target->order(), 0);
  int count = 0;
  for (Element v : images)
    if (!seen[v]++) ++count;
  return count == target->order();
}

Subgroup centralizer(const GroupPtr& g, Element x) {
  std::vector<Element> members;
  for (int h = 0; h < g->order(); ++h)
    if (g->mul(h, x) == g->mul(x, h)) members.push_back(h);
  return Subgroup(g, std::move(members));
}

std::vector<Element> subgroup_closure(const GroupPtr& g, std::vector<Element> seed) {
  std::set<Element> closure{g->identity()};
  for (Element s : seed) closure.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(closure.begin(), closure.end());
    for (Element a : cur) {
      if (closure.insert(g->inv(a)).second) grew = true;
      for (Element b : cur)
        if (closure.insert(g->mul(a, b)).second) grew = true;
    }
  }
  return std::vector<Element>(closure.begin(), closure.end());
}

std::vector<Element> derived_subgroup(const GroupPtr& g) {
  std::vector<Element> comms;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
  return subgroup_closure(g, std::move(comms));
}

std::pair<GroupPtr, GroupMap> quotient_by_normal(const GroupPtr& g,
                                                 const std::vector<Element>& normal_members) {
  Subgroup n(g, normal_members);
  for (int h = 0; h < g->order(); ++h)
    for (Element m : n.members())
      require_internal(n.contains(g->conj(h, m)), "quotient requires a normal subgroup");

  // Cosets ordered by smallest member index.
  std::vector<int> coset_of(g->order(), -1);
  std::vector<Element> coset_rep;
  for (int h = 0; h < g->order(); ++h) {
    if (coset_of[h] >= 0) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(h);
    for (Element m : n.members()) coset_of[g->mul(h, m)] = id;
  }
  const int q = static_cast<int>(coset_rep.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + g->label(coset_rep[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[g->mul(coset_rep[i], coset_rep[j])];
  }
  GroupPtr quotient = group_from_table(table, std::move(labels));
  std::vector<Element> images(coset_of.begin(), coset_of.end());
  return {quotient, GroupMap(g, quotient, std::move(images))};
}

std::pair<GroupPtr, GroupMap> quotient_by_central_cyclic(const GroupPtr& g, Element z) {
  for (int h = 0; h < g->order(); ++h)
    if (g->mul(h, z) != g->mul(z, h))
      fail("NotCentral", "element " + std::to_string(z) + " does not commute with " +
                             std::to_string(h));
  std::vector<Element> cyc;
  Element acc = g->identity();
  do {
    cyc.push_back(acc);
    acc = g->mul(acc, z);
  } while (acc != g->identity());
  return quotient_by_normal(g, cyc);
}

int automorphism_order(const GroupMap& theta) {
  if (theta.source.get() != theta.target.get())
    fail("NotBijective", "automorphism must map a group to itself");
  if (!theta.is_bijective()) fail("NotBijective", "map is not a bijection");
  const int n = theta.source->order();
  std::vector<Element> cur = theta.images;
  int m = 1;
  auto is_identity = [&](const std::vector<Element>& f) {
    for (int i = 0; i < n; ++i)
      if (f[i] != i) return false;
    return true;
  };
  while (!is_identity(cur)) {
    std::vector<Element> next(n);
    for (int i = 0; i < n; ++i) next[i] = theta.images[cur[i]];
    cur = std::move(next);
    ++m;
    require_internal(m <= n * n, "automorphism order runaway");
  }
  return m;
}

std::optional<Element> conjugator(const GroupPtr& g, Element from, Element to) {
  for (int v = 0; v < g->order(); ++v)
    if (g->conj(v, from) == to) return v;
  return std::nullopt;
}

std::vector<Element> generating_set(const GroupPtr& g) {
  std::vector<Element> gens;
  std::set<Element> in_closure{g->identity()};
  for (int x = 0; x < g->order(); ++x) {
    if (in_closure.count(x)) continue;
    gens.push_back(x);
    std::vector<Element> closure = subgroup_closure(g, gens);
    in_closure = std::set<Element>(closure.begin(), closure.end());
    if (static_cast<int>(closure.size()) == g->order()) break;
  }
  return gens;
}

}  // namespace nfourier
