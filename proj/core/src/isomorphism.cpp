#include "twistk/isomorphism.hpp"

#include <algorithm>

#include "twistk/errors.hpp"

namespace twistk {

namespace {

struct UnitProfile {
  int out_degree, in_degree, isotropy_order;
  bool operator==(const UnitProfile&) const = default;
};

UnitProfile profile(const FiniteGroupoid& G, int u) {
  UnitProfile p{0, 0, 0};
  for (int g = 0; g < G.num_arrows(); ++g) {
    if (G.src(g) == u) ++p.out_degree;
    if (G.dst(g) == u) ++p.in_degree;
    if (G.src(g) == u && G.dst(g) == u) ++p.isotropy_order;
  }
  return p;
}

struct Search {
  const FiniteGroupoid& A;
  const FiniteGroupoid& B;
  std::vector<int> map;      // A arrow -> B arrow, -1 unassigned
  std::vector<bool> used;    // B arrow taken
  std::vector<int> order;    // assignment order, units first
  std::vector<UnitProfile> profA, profB;

  bool feasible(int g, int gp) const {
    if (A.is_unit(g) != B.is_unit(gp)) return false;
    if (A.is_unit(g) && !(profA[g] == profB[gp])) return false;
    if (map[A.src(g)] >= 0 && map[A.src(g)] != B.src(gp)) return false;
    if (map[A.dst(g)] >= 0 && map[A.dst(g)] != B.dst(gp)) return false;
    if (map[A.inv(g)] >= 0 && map[A.inv(g)] != B.inv(gp)) return false;
    // partial compose consistency against everything already assigned
    for (int h = 0; h < A.num_arrows(); ++h) {
      if (map[h] < 0) continue;
      int gh = A.compose(g, h);
      if ((gh >= 0) != (B.compose(gp, map[h]) >= 0)) return false;
      if (gh >= 0 && map[gh] >= 0 && B.compose(gp, map[h]) != map[gh])
        return false;
      int hg = A.compose(h, g);
      if ((hg >= 0) != (B.compose(map[h], gp) >= 0)) return false;
      if (hg >= 0 && map[hg] >= 0 && B.compose(map[h], gp) != map[hg])
        return false;
    }
    return true;
  }

  bool verify() const {
    for (int g = 0; g < A.num_arrows(); ++g) {
      if (B.inv(map[g]) != map[A.inv(g)]) return false;
      for (int h = 0; h < A.num_arrows(); ++h) {
        int gh = A.compose(g, h);
        int ghp = B.compose(map[g], map[h]);
        if ((gh >= 0) != (ghp >= 0)) return false;
        if (gh >= 0 && map[gh] != ghp) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order.size()) return verify();
    int g = order[pos];
    for (int gp = 0; gp < B.num_arrows(); ++gp) {
      if (used[gp] || !feasible(g, gp)) continue;
      map[g] = gp;
      used[gp] = true;
      if (extend(pos + 1)) return true;
      map[g] = -1;
      used[gp] = false;
    }
    return false;
  }
};

}  // namespace

IsomorphismResult brute_force_isomorphic(const FiniteGroupoid& a,
                                         const FiniteGroupoid& b, int limit) {
  if (a.num_arrows() > limit || b.num_arrows() > limit)
    throw Error(ErrorCode::SizeCapExceeded,
                "isomorphism search capped at " + std::to_string(limit) +
                    " arrows");
  IsomorphismResult res;
  if (a.num_arrows() != b.num_arrows() || a.num_units() != b.num_units())
    return res;

  Search s{a, b, std::vector<int>(a.num_arrows(), -1),
           std::vector<bool>(b.num_arrows(), false), {},
           std::vector<UnitProfile>(a.num_arrows()),
           std::vector<UnitProfile>(b.num_arrows())};
  for (int u : a.units()) s.profA[u] = profile(a, u);
  for (int u : b.units()) s.profB[u] = profile(b, u);

  // multiset of unit profiles must agree
  {
    auto key = [](const UnitProfile& p) {
      return std::tuple(p.out_degree, p.in_degree, p.isotropy_order);
    };
    std::vector<std::tuple<int, int, int>> pa, pb;
    for (int u : a.units()) pa.push_back(key(s.profA[u]));
    for (int u : b.units()) pb.push_back(key(s.profB[u]));
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return res;
  }

  for (int u : a.units()) s.order.push_back(u);
  for (int g = 0; g < a.num_arrows(); ++g)
    if (!a.is_unit(g)) s.order.push_back(g);

  if (s.extend(0)) {
    res.isomorphic = true;
    res.map = s.map;
  }
  return res;
}

}  // namespace twistk
