#include "twistk/twist.hpp"

#include <sstream>

#include "twistk/errors.hpp"

namespace twistk {

namespace {

// exponent of w(g,h) as a multiple of 1/m turns
std::int64_t exponent_mod_m(const CircleValue& v, int m) {
  if (!v.exact() || m % v.turns_den() != 0)
    throw Error(ErrorCode::NotRootOfUnity,
                "cocycle value " + v.str() + " is not in C_" +
                    std::to_string(m));
  return v.turns_num() * (m / v.turns_den());
}

}  // namespace

int FiniteTwist::inclusion(int unit_arrow, int k) const {
  return unit_arrow * m + ((k % m) + m) % m;
}

int FiniteTwist::circle_action(int k, int sigma) const {
  int r_sigma = total->dst(sigma);
  int base_unit = j_map[r_sigma];
  return total->compose(inclusion(base_unit, k), sigma);
}

FiniteTwist build_sigma_omega(const GroupoidPtr& g, const TwoCocycle& w,
                              int m) {
  if (w.groupoid() != g)
    throw Error(ErrorCode::GroupoidMismatch, "build_sigma_omega");
  if (m < 1) throw Error(ErrorCode::NotRootOfUnity, "m must be >= 1");
  const FiniteGroupoid& G = *g;
  const int n = G.num_arrows();

  // exponent table, validated against C_m up front
  std::vector<std::vector<std::int64_t>> expo(
      n, std::vector<std::int64_t>(n, 0));
  for (auto [a, b] : composable_pairs(G).pairs)
    expo[a][b] = exponent_mod_m(w.at(a, b), m);

  const int N = n * m;
  std::vector<std::string> ids(N);
  std::vector<int> src(N), dst(N), inv(N), units;
  std::vector<int> table(static_cast<std::size_t>(N) * N, -1);

  auto idx = [m](int arrow, int k) { return arrow * m + ((k % m) + m) % m; };

  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < m; ++k) {
      int s = idx(a, k);
      std::ostringstream os;
      os << "(" << G.id(a) << ";" << k << ")";
      ids[s] = os.str();
      src[s] = idx(G.src(a), 0);
      dst[s] = idx(G.dst(a), 0);
      // (a, z)^-1 = (a^-1, conj(z w(a^-1, a)))
      inv[s] = idx(G.inv(a), -(k + static_cast<int>(expo[G.inv(a)][a] % m)));
    }
  }
  for (int u : G.units()) units.push_back(idx(u, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = G.compose(a, b);
      if (ab < 0) continue;
      for (int k1 = 0; k1 < m; ++k1)
        for (int k2 = 0; k2 < m; ++k2)
          table[static_cast<std::size_t>(idx(a, k1)) * N + idx(b, k2)] =
              idx(ab, k1 + k2 + static_cast<int>(expo[a][b] % m));
    }

  FiniteTwist t;
  t.base = g;
  t.m = m;
  t.total = std::make_shared<FiniteGroupoid>(std::move(ids), std::move(src),
                                             std::move(dst), std::move(units),
                                             std::move(inv), std::move(table));
  t.j_map.resize(N);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < m; ++k) t.j_map[idx(a, k)] = a;
  return t;
}

ValidationReport validate_twist(const FiniteTwist& t) {
  ValidationReport rep = validate_groupoid(*t.total);
  if (!rep.ok()) return rep;
  const FiniteGroupoid& S = *t.total;
  const FiniteGroupoid& G = *t.base;
  const int m = t.m;

  // condition (1): i injective with image exactly j^-1(G^(0))
  std::vector<bool> in_image(S.num_arrows(), false);
  for (int u : G.units()) {
    for (int k = 0; k < m; ++k) {
      int s = t.inclusion(u, k);
      if (s < 0 || s >= S.num_arrows()) {
        rep.fail("condition 1", "i out of range at (" + G.id(u) + "," +
                                    std::to_string(k) + ")");
        continue;
      }
      if (in_image[s])
        rep.fail("condition 1", "i not injective at (" + G.id(u) + "," +
                                    std::to_string(k) + ")");
      in_image[s] = true;
      if (t.j_map[s] != u)
        rep.fail("condition 1", "j(i(u,z)) != u at " + G.id(u));
    }
  }
  for (int s = 0; s < S.num_arrows(); ++s) {
    bool over_unit = G.is_unit(t.j_map[s]);
    if (over_unit != in_image[s])
      rep.fail("condition 1",
               "image of i differs from j^-1(units) at " + S.id(s));
  }

  // condition (2): j surjective homomorphism, fibers of size m
  std::vector<int> fiber(G.num_arrows(), 0);
  for (int s = 0; s < S.num_arrows(); ++s) ++fiber[t.j_map[s]];
  for (int a = 0; a < G.num_arrows(); ++a)
    if (fiber[a] != m)
      rep.fail("condition 2", "fiber over " + G.id(a) + " has size " +
                                  std::to_string(fiber[a]));
  for (int s1 = 0; s1 < S.num_arrows(); ++s1) {
    if (t.j_map[S.inv(s1)] != G.inv(t.j_map[s1]))
      rep.fail("condition 2", "j does not respect inverses at " + S.id(s1));
    for (int s2 = 0; s2 < S.num_arrows(); ++s2) {
      int p = S.compose(s1, s2);
      int q = G.compose(t.j_map[s1], t.j_map[s2]);
      if ((p >= 0) != (q >= 0)) {
        rep.fail("condition 2", "j does not respect composability at (" +
                                    S.id(s1) + ", " + S.id(s2) + ")");
        continue;
      }
      if (p >= 0 && t.j_map[p] != q)
        rep.fail("condition 2", "j not a homomorphism at (" + S.id(s1) +
                                    ", " + S.id(s2) + ")");
    }
  }
  rep.note("openness of j: trivially satisfied (finite discrete topology)");

  // condition (3): centrality i(r(s),z) s = s i(d(s),z)
  for (int s = 0; s < S.num_arrows(); ++s) {
    for (int k = 0; k < m; ++k) {
      int left = S.compose(t.inclusion(t.j_map[S.dst(s)], k), s);
      int right = S.compose(s, t.inclusion(t.j_map[S.src(s)], k));
      if (left < 0 || left != right)
        rep.fail("condition 3 (centrality)",
                 "z_" + std::to_string(k) + " at " + S.id(s));
    }
  }
  return rep;
}

TwoCocycle canonical_section_cocycle(const FiniteTwist& t) {
  return section_cocycle(t, std::vector<int>(t.base->num_arrows(), 0));
}

TwoCocycle section_cocycle(const FiniteTwist& t, const std::vector<int>& k) {
  const FiniteGroupoid& G = *t.base;
  const FiniteGroupoid& S = *t.total;
  const int m = t.m;
  if (static_cast<int>(k.size()) != G.num_arrows())
    throw Error(ErrorCode::MalformedTable, "section size mismatch");

  // s'(u) = u regardless of k, so the result is normalized.
  auto section = [&](int a) {
    int kk = G.is_unit(a) ? 0 : k[a];
    return a * m + ((kk % m) + m) % m;
  };

  TwoCocycle w(t.base);
  for (auto [a, b] : composable_pairs(G).pairs) {
    int sa = section(a), sb = section(b), sab = section(G.compose(a, b));
    int prod = S.compose(S.inv(sab), S.compose(sa, sb));
    // prod lies over a unit: i^-1 reads off the C_m coordinate
    int expo = prod % m;
    w.set(a, b, CircleValue::turns(expo, m));
  }
  return w;
}

}  // namespace twistk
