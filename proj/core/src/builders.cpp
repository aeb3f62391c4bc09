#include "twistk/builders.hpp"

#include <sstream>

#include "twistk/errors.hpp"

namespace twistk {

namespace {

// Accumulates arrow tables and assembles the immutable groupoid.
struct Assembler {
  std::vector<std::string> ids;
  std::vector<int> src, dst, units, inv;
  std::vector<std::pair<std::pair<int, int>, int>> products;

  int add(const std::string& id, int s, int d) {
    ids.push_back(id);
    src.push_back(s);
    dst.push_back(d);
    inv.push_back(-1);
    return static_cast<int>(ids.size()) - 1;
  }

  GroupoidPtr build() {
    const std::size_t n = ids.size();
    std::vector<int> table(n * n, -1);
    for (auto& [pair, gh] : products) table[pair.first * n + pair.second] = gh;
    return std::make_shared<FiniteGroupoid>(std::move(ids), std::move(src),
                                            std::move(dst), std::move(units),
                                            std::move(inv), std::move(table));
  }
};

}  // namespace

int GroupTable::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mul[a][b] == identity) return b;
  return -1;
}

void check_group(GroupTable& t) {
  const int n = t.order();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  if (static_cast<int>(t.mul.size()) != n)
    throw Error(ErrorCode::NotAGroup, "table row count mismatch");
  for (const auto& row : t.mul) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::NotAGroup, "table column count mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorCode::NotAGroup, "dangling entry");
  }
  t.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = t.mul[e][a] == a && t.mul[a][e] == a;
    if (ok) {
      t.identity = e;
      break;
    }
  }
  if (t.identity < 0) throw Error(ErrorCode::NotAGroup, "no identity element");
  for (int a = 0; a < n; ++a)
    if (t.inverse(a) < 0)
      throw Error(ErrorCode::NotAGroup, "no inverse for " + t.names[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw Error(ErrorCode::NotAGroup,
                      "not associative at (" + t.names[a] + "," + t.names[b] +
                          "," + t.names[c] + ")");
}

GroupTable make_product_cyclic_group(const std::vector<int>& moduli) {
  const int k = static_cast<int>(moduli.size());
  int n = 1;
  for (int m : moduli) {
    if (m <= 0) throw Error(ErrorCode::NotAGroup, "nonpositive modulus");
    n *= m;
  }
  auto digits = [&](int idx) {
    std::vector<int> d(k);
    for (int a = k - 1; a >= 0; --a) {
      d[a] = idx % moduli[a];
      idx /= moduli[a];
    }
    return d;
  };
  auto name = [&](const std::vector<int>& d) {
    std::ostringstream os;
    os << "(";
    for (int a = 0; a < k; ++a) os << (a ? "," : "") << d[a];
    os << ")";
    return os.str();
  };
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) t.names[i] = name(digits(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto di = digits(i), dj = digits(j);
      int idx = 0;
      for (int a = 0; a < k; ++a) idx = idx * moduli[a] + (di[a] + dj[a]) % moduli[a];
      t.mul[i][j] = idx;
    }
  }
  check_group(t);
  return t;
}

GroupoidPtr make_pair_groupoid(int n) {
  if (n < 1) throw Error(ErrorCode::MalformedTable, "pair groupoid needs n >= 1");
  Assembler a;
  std::vector<std::vector<int>> idx(n, std::vector<int>(n));
  std::vector<int> unit_arrow(n);
  // units first so that unit names can double as identity-arrow ids
  for (int i = 0; i < n; ++i) {
    int u = a.add(std::to_string(i + 1), -1, -1);
    unit_arrow[i] = u;
    a.units.push_back(u);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        idx[i][j] = unit_arrow[i];
        continue;
      }
      std::ostringstream os;
      os << "(" << i + 1 << "," << j + 1 << ")";
      idx[i][j] = a.add(os.str(), -1, -1);
    }
  // arrow (i,j): src j, dst i; (i,j)(j,k) = (i,k)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.src[idx[i][j]] = unit_arrow[j];
      a.dst[idx[i][j]] = unit_arrow[i];
      a.inv[idx[i][j]] = idx[j][i];
      for (int k = 0; k < n; ++k)
        a.products.push_back({{idx[i][j], idx[j][k]}, idx[i][k]});
    }
  return a.build();
}

GroupoidPtr make_group_groupoid(GroupTable t) {
  check_group(t);
  const int n = t.order();
  Assembler a;
  // ensure the identity arrow carries the unit's name at index of identity
  for (int i = 0; i < n; ++i) a.add(t.names[i], -1, -1);
  int e = t.identity;
  a.units.push_back(e);
  for (int i = 0; i < n; ++i) {
    a.src[i] = e;
    a.dst[i] = e;
    a.inv[i] = t.inverse(i);
    for (int j = 0; j < n; ++j) a.products.push_back({{i, j}, t.mul[i][j]});
  }
  return a.build();
}

GroupoidPtr make_discrete_groupoid(const std::vector<std::string>& points) {
  Assembler a;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int u = a.add(points[i], -1, -1);
    a.src[u] = u;
    a.dst[u] = u;
    a.inv[u] = u;
    a.units.push_back(u);
    a.products.push_back({{u, u}, u});
  }
  return a.build();
}

GroupoidPtr make_transformation_groupoid(
    GroupTable group, const std::vector<std::string>& space,
    const std::vector<std::vector<int>>& action) {
  check_group(group);
  const int m = group.order();
  const int n = static_cast<int>(space.size());
  if (static_cast<int>(action.size()) != m)
    throw Error(ErrorCode::NotAnAction, "action table row count mismatch");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::NotAnAction, "action table column count mismatch");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error(ErrorCode::NotAnAction, "action image out of range");
  }
  for (int x = 0; x < n; ++x)
    if (action[group.identity][x] != x)
      throw Error(ErrorCode::NotAnAction,
                  "identity moves point " + space[x]);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int x = 0; x < n; ++x)
        if (action[group.mul[g][h]][x] != action[g][action[h][x]])
          throw Error(ErrorCode::NotAnAction,
                      "compatibility fails at (" + group.names[g] + "," +
                          group.names[h] + "," + space[x] + ")");

  Assembler a;
  std::vector<int> unit_arrow(n);
  std::vector<std::vector<int>> idx(n, std::vector<int>(m));  // (x, gamma)
  for (int x = 0; x < n; ++x) {
    unit_arrow[x] = a.add(space[x], -1, -1);
    a.units.push_back(unit_arrow[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g) {
      if (g == group.identity) {
        idx[x][g] = unit_arrow[x];
        continue;
      }
      idx[x][g] = a.add("(" + space[x] + "," + group.names[g] + ")", -1, -1);
    }
  // arrow (x,gamma): src x, dst gamma.x; compose((gamma.x,delta),(x,gamma)) = (x,delta gamma)
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g) {
      int arr = idx[x][g];
      int gx = action[g][x];
      a.src[arr] = unit_arrow[x];
      a.dst[arr] = unit_arrow[gx];
      a.inv[arr] = idx[gx][group.inverse(g)];
      for (int d = 0; d < m; ++d)
        a.products.push_back({{idx[gx][d], arr}, idx[x][group.mul[d][g]]});
    }
  return a.build();
}

GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts) {
  Assembler a;
  int offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const FiniteGroupoid& G = *parts[p];
    std::string prefix = std::to_string(p) + ":";
    for (int g = 0; g < G.num_arrows(); ++g)
      a.add(prefix + G.id(g), offset + G.src(g), offset + G.dst(g));
    for (int g = 0; g < G.num_arrows(); ++g) {
      a.inv[offset + g] = offset + G.inv(g);
      for (int h = 0; h < G.num_arrows(); ++h)
        if (G.compose(g, h) >= 0)
          a.products.push_back({{offset + g, offset + h}, offset + G.compose(g, h)});
    }
    for (int u : G.units()) a.units.push_back(offset + u);
    offset += G.num_arrows();
  }
  return a.build();
}

GroupoidPtr relabel(const FiniteGroupoid& G, const std::vector<int>& perm) {
  const int n = G.num_arrows();
  if (static_cast<int>(perm.size()) != n)
    throw Error(ErrorCode::MalformedTable, "relabel: bad permutation size");
  std::vector<std::string> ids(n);
  std::vector<int> src(n), dst(n), inv(n), units;
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int g = 0; g < n; ++g) {
    ids[perm[g]] = G.id(g);
    src[perm[g]] = perm[G.src(g)];
    dst[perm[g]] = perm[G.dst(g)];
    inv[perm[g]] = perm[G.inv(g)];
  }
  for (int u : G.units()) units.push_back(perm[u]);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (G.compose(g, h) >= 0)
        table[static_cast<std::size_t>(perm[g]) * n + perm[h]] =
            perm[G.compose(g, h)];
  return std::make_shared<FiniteGroupoid>(std::move(ids), std::move(src),
                                          std::move(dst), std::move(units),
                                          std::move(inv), std::move(table));
}

}  // namespace twistk
