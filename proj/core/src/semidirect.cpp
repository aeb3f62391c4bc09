#include "twistk/semidirect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "twistk/errors.hpp"

namespace twistk {

int DirectedAction::p_position(int element) const {
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P[i] == element) return static_cast<int>(i);
  return -1;
}

bool DirectedAction::in_dom(int p_pos, int x) const {
  return std::binary_search(dom[p_pos].begin(), dom[p_pos].end(), x);
}

int DirectedAction::apply(int p_pos, int x) const {
  auto it = T[p_pos].find(x);
  return it == T[p_pos].end() ? -1 : it->second;
}

ValidationReport validate_directed_action(const DirectedAction& a,
                                          bool left_divisibility) {
  ValidationReport rep;
  const int np = static_cast<int>(a.P.size());
  const int nx = static_cast<int>(a.space.size());

  int e_pos = a.p_position(a.gamma.identity);
  if (e_pos < 0) {
    rep.fail("condition 2", "identity not in P");
    return rep;
  }
  if (static_cast<int>(a.dom[e_pos].size()) != nx)
    rep.fail("condition 2", "dom(e) != X");
  for (int x : a.dom[e_pos])
    if (a.apply(e_pos, x) != x)
      rep.fail("condition 2", "T_e moves " + a.space[x]);

  for (int i = 0; i < np; ++i) {
    std::vector<bool> hit(nx, false);
    for (int x : a.dom[i]) {
      int y = a.apply(i, x);
      if (y < 0 || y >= nx) {
        rep.fail("well-formed", "T_" + a.gamma.names[a.P[i]] +
                                    " undefined or out of range at " +
                                    a.space[x]);
        continue;
      }
      if (hit[y])
        rep.fail("condition 1", "T_" + a.gamma.names[a.P[i]] + " not injective");
      hit[y] = true;
    }
  }
  if (!rep.ok()) return rep;

  // P closed under multiplication, and condition (3)
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      int pq = a.gamma.mul[a.P[i]][a.P[j]];
      int pq_pos = a.p_position(pq);
      if (pq_pos < 0) {
        rep.fail("closure", "P not closed: " + a.gamma.names[a.P[i]] + "*" +
                                a.gamma.names[a.P[j]] + " = " +
                                a.gamma.names[pq]);
        continue;
      }
      for (int x = 0; x < nx; ++x) {
        bool chain = a.in_dom(j, x) && a.in_dom(i, a.apply(j, x));
        if (chain != a.in_dom(pq_pos, x)) {
          rep.fail("condition 3", "dom(" + a.gamma.names[pq] + ") vs dom(" +
                                      a.gamma.names[a.P[i]] + " after " +
                                      a.gamma.names[a.P[j]] + ") differ at " +
                                      a.space[x]);
          continue;
        }
        if (chain && a.apply(pq_pos, x) != a.apply(i, a.apply(j, x)))
          rep.fail("condition 3", "T value mismatch at (" + a.gamma.names[a.P[i]] +
                                      "," + a.gamma.names[a.P[j]] + "," +
                                      a.space[x] + ")");
      }
    }
  }
  if (!rep.ok()) return rep;

  // directedness: r is an upper bound of p when r in pP (or Pp)
  auto bounds = [&](int i, int r) {
    for (int s = 0; s < np; ++s) {
      int prod = left_divisibility ? a.gamma.mul[a.P[s]][a.P[i]]
                                   : a.gamma.mul[a.P[i]][a.P[s]];
      if (prod == a.P[r]) return true;
    }
    return false;
  };
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      std::vector<int> common;
      std::set_intersection(a.dom[i].begin(), a.dom[i].end(),
                            a.dom[j].begin(), a.dom[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      bool found = false;
      for (int r = 0; r < np && !found; ++r) {
        if (!bounds(i, r) || !bounds(j, r)) continue;
        found = std::all_of(common.begin(), common.end(),
                            [&](int x) { return a.in_dom(r, x); });
      }
      if (!found)
        rep.fail("directedness", "no upper bound for (" +
                                     a.gamma.names[a.P[i]] + "," +
                                     a.gamma.names[a.P[j]] + ")");
    }
  rep.note("basic open sets are trivially clopen in the finite discrete topology");
  return rep;
}

SemidirectGroupoid build_semidirect_groupoid(const DirectedAction& a) {
  {
    auto rep = validate_directed_action(a);
    if (!rep.ok()) {
      const auto& v = rep.violations.front();
      auto code = v.kind == "directedness" ? ErrorCode::NotDirected
                                           : ErrorCode::ConditionViolation;
      throw Error(code, v.kind + " [" + v.witness + "]");
    }
  }
  const int np = static_cast<int>(a.P.size());
  const int nx = static_cast<int>(a.space.size());
  const int ng = a.gamma.order();

  // triples (x, gamma, y), deduplicated across witnessing (p, q) pairs
  std::map<std::tuple<int, int, int>, int> index;
  std::vector<std::tuple<int, int, int>> triples;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      int g = a.gamma.mul[a.gamma.inverse(a.P[i])][a.P[j]];
      for (int x : a.dom[i])
        for (int y : a.dom[j])
          if (a.apply(i, x) == a.apply(j, y))
            index.emplace(std::make_tuple(x, g, y), 0);
    }
  triples.reserve(index.size());
  for (auto& [t, id] : index) {
    id = static_cast<int>(triples.size());
    triples.push_back(t);
  }
  const int narr = static_cast<int>(triples.size());

  std::vector<std::string> ids(narr);
  std::vector<int> src(narr), dst(narr), inv(narr), label(narr), units;
  std::vector<int> unit_of_point(nx, -1);
  for (int g = 0; g < narr; ++g) {
    auto [x, gm, y] = triples[g];
    if (x == y && gm == a.gamma.identity) {
      ids[g] = a.space[x];
      unit_of_point[x] = g;
      units.push_back(g);
    } else {
      ids[g] = "(" + a.space[x] + "," + a.gamma.names[gm] + "," + a.space[y] + ")";
    }
    label[g] = gm;
  }
  for (int x = 0; x < nx; ++x)
    if (unit_of_point[x] < 0)
      throw Error(ErrorCode::AxiomViolation,
                  "unit triple missing for " + a.space[x]);

  auto lookup = [&](int x, int gm, int y) {
    auto it = index.find({x, gm, y});
    return it == index.end() ? -1 : it->second;
  };
  for (int g = 0; g < narr; ++g) {
    auto [x, gm, y] = triples[g];
    src[g] = unit_of_point[y];
    dst[g] = unit_of_point[x];
    inv[g] = lookup(y, a.gamma.inverse(gm), x);
    if (inv[g] < 0)
      throw Error(ErrorCode::AxiomViolation, "inverse triple missing for " + ids[g]);
  }

  std::vector<int> table(static_cast<std::size_t>(narr) * narr, -1);
  for (int g = 0; g < narr; ++g) {
    auto [x, gm, y] = triples[g];
    for (int h = 0; h < narr; ++h) {
      auto [x2, gm2, z] = triples[h];
      if (y != x2) continue;
      int prod = lookup(x, a.gamma.mul[gm][gm2], z);
      if (prod < 0)
        throw Error(ErrorCode::AxiomViolation,
                    "product triple missing for (" + ids[g] + ", " + ids[h] + ")");
      table[static_cast<std::size_t>(g) * narr + h] = prod;
    }
  }
  (void)ng;

  SemidirectGroupoid out;
  out.groupoid = std::make_shared<FiniteGroupoid>(
      std::move(ids), std::move(src), std::move(dst), std::move(units),
      std::move(inv), std::move(table));
  out.label = std::move(label);
  return out;
}

ValidationReport validate_group_cocycle(const GroupCocycle& gc, double tol) {
  ValidationReport rep;
  const int n = gc.group.order();
  if (static_cast<int>(gc.values.size()) != n) {
    rep.fail("completeness", "value table has wrong size");
    return rep;
  }
  for (const auto& row : gc.values)
    if (static_cast<int>(row.size()) != n) {
      rep.fail("completeness", "value table has wrong size");
      return rep;
    }
  const int e = gc.group.identity;
  for (int g = 0; g < n; ++g) {
    if (!gc.at(g, e).equals(CircleValue::one(), tol))
      rep.fail("normalization", "w(" + gc.group.names[g] + ", e) != 1");
    if (!gc.at(e, g).equals(CircleValue::one(), tol))
      rep.fail("normalization", "w(e, " + gc.group.names[g] + ") != 1");
  }
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        CircleValue lhs = gc.at(g1, g2) * gc.at(gc.group.mul[g1][g2], g3);
        CircleValue rhs = gc.at(g1, gc.group.mul[g2][g3]) * gc.at(g2, g3);
        if (!lhs.equals(rhs, tol))
          rep.fail("cocycle identity",
                   "(" + gc.group.names[g1] + "," + gc.group.names[g2] + "," +
                       gc.group.names[g3] + ")",
                   lhs.distance(rhs));
      }
  return rep;
}

TwoCocycle induce_cocycle_from_group(const GroupCocycle& gc,
                                     const SemidirectGroupoid& g) {
  const FiniteGroupoid& G = *g.groupoid;
  TwoCocycle w(g.groupoid);
  for (auto [x, y] : composable_pairs(G).pairs)
    w.set(x, y, gc.at(g.label[x], g.label[y]));
  auto rep = validate_cocycle(w);
  if (!rep.ok())
    throw Error(ErrorCode::CocycleViolation,
                "induced table is not a cocycle (bug-level): " + rep.summary());
  return w;
}

CocycleHomotopy induce_homotopy_from_group(
    const std::vector<std::pair<double, GroupCocycle>>& samples,
    const SemidirectGroupoid& g) {
  std::vector<std::pair<double, TwoCocycle>> out;
  out.reserve(samples.size());
  for (const auto& [t, gc] : samples)
    out.emplace_back(t, induce_cocycle_from_group(gc, g));
  return CocycleHomotopy::table_of_samples(std::move(out));
}

GroupCocycle bilinear_cocycle(const std::vector<int>& moduli,
                              const std::vector<std::vector<int>>& Q) {
  const int k = static_cast<int>(moduli.size());
  if (static_cast<int>(Q.size()) != k)
    throw Error(ErrorCode::MalformedTable, "Q has wrong shape");
  for (const auto& row : Q)
    if (static_cast<int>(row.size()) != k)
      throw Error(ErrorCode::MalformedTable, "Q has wrong shape");

  std::int64_t L = 1;
  for (int m : moduli) L = std::lcm(L, static_cast<std::int64_t>(m));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::int64_t q = Q[a][b];
      if ((q * moduli[a]) % L != 0 || (q * moduli[b]) % L != 0)
        throw Error(ErrorCode::NotWellDefinedOnQuotient,
                    "Q[" + std::to_string(a) + "][" + std::to_string(b) +
                        "] is not compatible with the moduli");
    }

  GroupCocycle gc;
  gc.group = make_product_cyclic_group(moduli);
  const int n = gc.group.order();
  auto digits = [&](int idx) {
    std::vector<int> d(k);
    for (int a = k - 1; a >= 0; --a) {
      d[a] = idx % moduli[a];
      idx /= moduli[a];
    }
    return d;
  };
  gc.values.assign(n, std::vector<CircleValue>(n, CircleValue::one()));
  for (int i = 0; i < n; ++i) {
    auto di = digits(i);
    for (int j = 0; j < n; ++j) {
      auto dj = digits(j);
      std::int64_t expo = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          expo = (expo + static_cast<std::int64_t>(Q[a][b]) * di[a] * dj[b]) % L;
      gc.values[i][j] = CircleValue::turns(((expo % L) + L) % L, L);
    }
  }
  auto rep = validate_group_cocycle(gc);
  if (!rep.ok())
    throw Error(ErrorCode::CocycleViolation,
                "bilinear table failed re-validation: " + rep.summary());
  return gc;
}

}  // namespace twistk
