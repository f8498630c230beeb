#include "bhh/hopf/group.hpp"

#include <array>
#include <set>

namespace bhh {

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  std::size_t n = table_.size();
  if (n == 0) throw Error("group must be nonempty");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error("group table is not square");
    for (auto x : row)
      if (x >= n) throw Error("group table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw Error("group table is not associative");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (auto x : inverse_)
    if (x == n) throw Error("group table lacks inverses");
  if (labels_.size() != n) {
    labels_.clear();
    for (std::size_t a = 0; a < n; ++a) labels_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
  }
}

GroupTable GroupTable::trivial() { return GroupTable({{0}}, {"e"}); }

GroupTable GroupTable::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> l;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    l.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return GroupTable(t, l);
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2}; composition (p*q)(i) = p(q(i))
  std::vector<std::array<int, 3>> p = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> l = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{p[a][p[b][0]], p[a][p[b][1]], p[a][p[b][2]]};
      for (std::size_t k = 0; k < 6; ++k)
        if (p[k] == c) t[a][b] = k;
    }
  return GroupTable(t, l);
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
  std::size_t n = a.order(), m = b.order();
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> l;
  for (std::size_t x = 0; x < n * m; ++x) {
    l.push_back("(" + a.labels_[x / m] + "," + b.labels_[x % m] + ")");
    for (std::size_t y = 0; y < n * m; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  }
  return GroupTable(t, l);
}

std::size_t GroupTable::conjugacy_classes() const {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < order(); ++x) {
    std::set<std::size_t> c;
    for (std::size_t g = 0; g < order(); ++g) c.insert(mul(mul(g, x), inverse(g)));
    classes.insert(c);
  }
  return classes.size();
}

FinHopf group_algebra(const GroupTable& g, const FieldSpec& f) {
  std::size_t n = g.order();
  FinHopf h;
  h.field = f;
  h.dim = n;
  h.labels = g.labels();
  std::vector<Triplet> m, c, e, s;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.push_back({g.mul(a, b), a * n + b, Scalar::one(f)});
    c.push_back({a * n + a, a, Scalar::one(f)});
    e.push_back({0, a, Scalar::one(f)});
    s.push_back({g.inverse(a), a, Scalar::one(f)});
  }
  h.mult = Matrix::from_triplets(f, n, n * n, m);
  h.comult = Matrix::from_triplets(f, n * n, n, c);
  h.counit = Matrix::from_triplets(f, 1, n, e);
  h.antipode = Matrix::from_triplets(f, n, n, s);
  h.unit = unit_vec(f, n, g.identity());
  h.finalize();
  return h;
}

}  // namespace bhh
