#include "twistk/groupoid.hpp"

#include <sstream>

#include "twistk/errors.hpp"

namespace twistk {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> arrow_ids,
                               std::vector<int> src, std::vector<int> dst,
                               std::vector<int> units, std::vector<int> inv,
                               std::vector<int> compose_table)
    : ids_(std::move(arrow_ids)),
      src_(std::move(src)),
      dst_(std::move(dst)),
      units_(std::move(units)),
      inv_(std::move(inv)),
      table_(std::move(compose_table)) {
  const std::size_t n = ids_.size();
  if (src_.size() != n || dst_.size() != n || inv_.size() != n ||
      table_.size() != n * n) {
    throw Error(ErrorCode::MalformedTable, "table sizes inconsistent");
  }
  unit_flag_.assign(n, false);
  for (int u : units_) {
    if (u < 0 || static_cast<std::size_t>(u) >= n)
      throw Error(ErrorCode::MalformedTable, "unit index out of range");
    unit_flag_[u] = true;
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (src_[g] < 0 || static_cast<std::size_t>(src_[g]) >= n ||
        dst_[g] < 0 || static_cast<std::size_t>(dst_[g]) >= n)
      throw Error(ErrorCode::MalformedTable,
                  "dangling src/dst on arrow " + ids_[g]);
    if (!unit_flag_[src_[g]] || !unit_flag_[dst_[g]])
      throw Error(ErrorCode::MalformedTable,
                  "src/dst of arrow " + ids_[g] + " is not a unit");
    if (inv_[g] < 0 || static_cast<std::size_t>(inv_[g]) >= n)
      throw Error(ErrorCode::MalformedTable,
                  "dangling inverse on arrow " + ids_[g]);
    if (!index_.emplace(ids_[g], static_cast<int>(g)).second)
      throw Error(ErrorCode::MalformedTable, "duplicate arrow id " + ids_[g]);
  }
  for (int v : table_) {
    if (v < -1 || v >= static_cast<int>(n))
      throw Error(ErrorCode::MalformedTable, "dangling compose entry");
  }
}

int FiniteGroupoid::arrow(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FiniteGroupoid::arrows_from(int u) const {
  std::vector<int> out;
  for (int g = 0; g < num_arrows(); ++g)
    if (src_[g] == u) out.push_back(g);
  return out;
}

std::vector<int> FiniteGroupoid::arrows_into(int u) const {
  std::vector<int> out;
  for (int g = 0; g < num_arrows(); ++g)
    if (dst_[g] == u) out.push_back(g);
  return out;
}

namespace {
std::string pair_str(const FiniteGroupoid& G, int g, int h) {
  return "(" + G.id(g) + ", " + G.id(h) + ")";
}
}  // namespace

ValidationReport validate_groupoid(const FiniteGroupoid& G) {
  ValidationReport rep;
  const int n = G.num_arrows();

  // Units are identity arrows.
  for (int u : G.units()) {
    if (G.src(u) != u || G.dst(u) != u)
      rep.fail("unit law", "unit " + G.id(u) + " has src/dst != itself");
    if (G.compose(u, u) != u)
      rep.fail("unit law", "u*u != u for unit " + G.id(u));
    if (G.inv(u) != u)
      rep.fail("unit law", "inv(u) != u for unit " + G.id(u));
  }

  // compose defined exactly on {src(g)=dst(h)}, with the right endpoints.
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      int gh = G.compose(g, h);
      if (G.composable(g, h)) {
        if (gh < 0) {
          rep.fail("composability", "compose undefined on composable pair " +
                                        pair_str(G, g, h));
          continue;
        }
        if (G.src(gh) != G.src(h) || G.dst(gh) != G.dst(g))
          rep.fail("composability",
                   "endpoints of " + G.id(gh) + " wrong for " + pair_str(G, g, h));
      } else if (gh >= 0) {
        rep.fail("composability",
                 "compose defined on non-composable pair " + pair_str(G, g, h));
      }
    }
  }
  if (!rep.ok()) return rep;  // later laws assume a well-formed table

  // Unit arrows act as identities.
  for (int g = 0; g < n; ++g) {
    if (G.compose(g, G.src(g)) != g)
      rep.fail("unit law", "g*d(g) != g for " + G.id(g));
    if (G.compose(G.dst(g), g) != g)
      rep.fail("unit law", "r(g)*g != g for " + G.id(g));
  }

  // Involution and cancellation.
  for (int g = 0; g < n; ++g) {
    if (G.inv(G.inv(g)) != g)
      rep.fail("inverse law", "inv not involutive at " + G.id(g));
    if (G.compose(g, G.inv(g)) != G.dst(g))
      rep.fail("inverse law", "g*inv(g) != r(g) for " + G.id(g));
    if (G.compose(G.inv(g), g) != G.src(g))
      rep.fail("inverse law", "inv(g)*g != d(g) for " + G.id(g));
  }
  for (int g = 0; g < n && rep.ok(); ++g) {
    for (int h = 0; h < n; ++h) {
      if (!G.composable(g, h)) continue;
      int gh = G.compose(g, h);
      if (G.compose(G.inv(g), gh) != h)
        rep.fail("inverse law",
                 "inv(g)(gh) != h for " + pair_str(G, g, h));
      if (G.compose(gh, G.inv(h)) != g)
        rep.fail("inverse law", "(gh)inv(h) != g for " + pair_str(G, g, h));
    }
  }

  // Associativity on all triply-composable triples.
  for (int g = 0; g < n && rep.ok(); ++g) {
    for (int h = 0; h < n; ++h) {
      if (!G.composable(g, h)) continue;
      int gh = G.compose(g, h);
      for (int k = 0; k < n; ++k) {
        if (!G.composable(h, k)) continue;
        if (G.compose(gh, k) != G.compose(g, G.compose(h, k))) {
          std::ostringstream os;
          os << "(" << G.id(g) << "," << G.id(h) << "," << G.id(k) << ")";
          rep.fail("associativity", os.str());
        }
      }
    }
  }

  rep.note("etale/ample/Hausdorff: trivially satisfied (finite discrete topology)");
  rep.note("d and r open maps: trivially satisfied (finite discrete topology)");
  return rep;
}

ComposablePairs composable_pairs(const FiniteGroupoid& G) {
  ComposablePairs cp;
  const int n = G.num_arrows();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (G.composable(g, h)) cp.pairs.emplace_back(g, h);
  return cp;
}

IsotropyGroup isotropy(const FiniteGroupoid& G, int unit_arrow) {
  if (unit_arrow < 0 || unit_arrow >= G.num_arrows() ||
      !G.is_unit(unit_arrow))
    throw Error(ErrorCode::MalformedTable, "isotropy: not a unit");
  IsotropyGroup iso;
  std::vector<int> local(G.num_arrows(), -1);
  for (int g = 0; g < G.num_arrows(); ++g) {
    if (G.src(g) == unit_arrow && G.dst(g) == unit_arrow) {
      local[g] = static_cast<int>(iso.arrows.size());
      iso.arrows.push_back(g);
      iso.names.push_back(G.id(g));
    }
  }
  const int m = static_cast<int>(iso.arrows.size());
  iso.table.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      iso.table[a][b] = local[G.compose(iso.arrows[a], iso.arrows[b])];
  return iso;
}

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  os << violations.size() << " violation(s); first: " << violations[0].kind
     << " [" << violations[0].witness << "]";
  return os.str();
}

}  // namespace twistk
