#include "twistk/cocycle.hpp"

#include <sstream>

#include "twistk/errors.hpp"
#include "twistk/zmod.hpp"

namespace twistk {

namespace {

std::uint64_t key(int g, int h) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(h);
}

std::string pair_str(const FiniteGroupoid& G, int g, int h) {
  return "(" + G.id(g) + ", " + G.id(h) + ")";
}

}  // namespace

TwoCocycle TwoCocycle::constant_one(GroupoidPtr g) {
  TwoCocycle w(std::move(g));
  for (auto [a, b] : composable_pairs(*w.G_).pairs)
    w.set(a, b, CircleValue::one());
  return w;
}

CircleValue TwoCocycle::at(int g, int h) const {
  auto it = vals_.find(key(g, h));
  if (it == vals_.end())
    throw Error(ErrorCode::MissingPair, "no value on " + pair_str(*G_, g, h));
  return it->second;
}

bool TwoCocycle::has(int g, int h) const {
  return vals_.count(key(g, h)) > 0;
}

void TwoCocycle::set(int g, int h, CircleValue v) {
  if (!G_->composable(g, h))
    throw Error(ErrorCode::MissingPair,
                "pair not composable: " + pair_str(*G_, g, h));
  vals_[key(g, h)] = v;
}

TwoCocycle TwoCocycle::conj() const {
  TwoCocycle w(G_);
  for (const auto& [k, v] : vals_) w.vals_[k] = v.conj();
  return w;
}

bool TwoCocycle::all_exact() const {
  for (const auto& [k, v] : vals_)
    if (!v.exact()) return false;
  return true;
}

bool TwoCocycle::table_equal(const TwoCocycle& other, double tol) const {
  if (G_ != other.G_) return false;
  for (auto [g, h] : composable_pairs(*G_).pairs) {
    if (!has(g, h) || !other.has(g, h)) return false;
    if (!at(g, h).equals(other.at(g, h), tol)) return false;
  }
  return true;
}

OneCochain::OneCochain(GroupoidPtr g, std::vector<CircleValue> values)
    : G_(std::move(g)), vals_(std::move(values)) {
  if (static_cast<int>(vals_.size()) != G_->num_arrows())
    throw Error(ErrorCode::MalformedTable, "cochain size mismatch");
  for (int u : G_->units())
    if (!vals_[u].is_one())
      throw Error(ErrorCode::NormalizationViolation,
                  "cochain value on unit " + G_->id(u) + " is not 1");
}

OneCochain OneCochain::constant_one(GroupoidPtr g) {
  std::vector<CircleValue> v(g->num_arrows(), CircleValue::one());
  return OneCochain(std::move(g), std::move(v));
}

OneCochain OneCochain::pointwise_product(const OneCochain& other) const {
  if (G_ != other.G_)
    throw Error(ErrorCode::GroupoidMismatch, "cochain product");
  std::vector<CircleValue> v(vals_.size());
  for (std::size_t i = 0; i < vals_.size(); ++i) v[i] = vals_[i] * other.vals_[i];
  return OneCochain(G_, std::move(v));
}

ValidationReport validate_cocycle(const TwoCocycle& w, double tol) {
  ValidationReport rep;
  const FiniteGroupoid& G = *w.groupoid();
  auto cp = composable_pairs(G);

  for (auto [g, h] : cp.pairs)
    if (!w.has(g, h)) rep.fail("missing pair", pair_str(G, g, h));
  if (!rep.ok()) return rep;

  const bool exact = w.all_exact();
  for (int g = 0; g < G.num_arrows(); ++g) {
    if (!w.at(g, G.src(g)).equals(CircleValue::one(), exact ? 0.0 : tol))
      rep.fail("normalization", "w(g, d(g)) != 1 at " + G.id(g),
               w.at(g, G.src(g)).distance(CircleValue::one()));
    if (!w.at(G.dst(g), g).equals(CircleValue::one(), exact ? 0.0 : tol))
      rep.fail("normalization", "w(r(g), g) != 1 at " + G.id(g),
               w.at(G.dst(g), g).distance(CircleValue::one()));
  }

  for (auto [g1, g2] : cp.pairs) {
    int g12 = G.compose(g1, g2);
    for (int g3 = 0; g3 < G.num_arrows(); ++g3) {
      if (!G.composable(g2, g3)) continue;
      CircleValue lhs = w.at(g1, g2) * w.at(g12, g3);
      CircleValue rhs = w.at(g1, G.compose(g2, g3)) * w.at(g2, g3);
      if (!lhs.equals(rhs, exact ? 0.0 : tol)) {
        std::ostringstream os;
        os << "(" << G.id(g1) << "," << G.id(g2) << "," << G.id(g3) << ")";
        rep.fail("cocycle identity", os.str(), lhs.distance(rhs));
      }
    }
  }
  return rep;
}

TwoCocycle coboundary(const OneCochain& b) {
  const FiniteGroupoid& G = *b.groupoid();
  TwoCocycle w(b.groupoid());
  for (auto [g, h] : composable_pairs(G).pairs)
    w.set(g, h, b.at(g) * b.at(h) * b.at(G.compose(g, h)).conj());
  return w;
}

TwoCocycle multiply_cocycles(const TwoCocycle& w1, const TwoCocycle& w2) {
  if (w1.groupoid() != w2.groupoid())
    throw Error(ErrorCode::GroupoidMismatch, "cocycle product");
  TwoCocycle w(w1.groupoid());
  for (auto [g, h] : composable_pairs(*w1.groupoid()).pairs)
    w.set(g, h, w1.at(g, h) * w2.at(g, h));
  return w;
}

TwoCocycle normalize_cocycle(const TwoCocycle& w, double tol) {
  const FiniteGroupoid& G = *w.groupoid();

  // The identity must hold; only the unit normalization may be off.
  {
    auto cp = composable_pairs(G);
    const bool exact = w.all_exact();
    for (auto [g1, g2] : cp.pairs) {
      if (!w.has(g1, g2))
        throw Error(ErrorCode::MissingPair, pair_str(G, g1, g2));
      int g12 = G.compose(g1, g2);
      for (int g3 = 0; g3 < G.num_arrows(); ++g3) {
        if (!G.composable(g2, g3)) continue;
        CircleValue lhs = w.at(g1, g2) * w.at(g12, g3);
        CircleValue rhs = w.at(g1, G.compose(g2, g3)) * w.at(g2, g3);
        if (!lhs.equals(rhs, exact ? 0.0 : tol))
          throw Error(ErrorCode::IdentityViolation,
                      "cocycle identity fails at (" + G.id(g1) + "," +
                          G.id(g2) + "," + G.id(g3) + ")");
      }
    }
  }

  // b(g) = w(r(g), g); not unit-normalized in general, so handled as a raw
  // arrow-indexed table rather than a OneCochain.
  std::vector<CircleValue> b(G.num_arrows());
  for (int g = 0; g < G.num_arrows(); ++g) b[g] = w.at(G.dst(g), g);

  TwoCocycle out(w.groupoid());
  for (auto [g, h] : composable_pairs(G).pairs) {
    CircleValue db = b[g] * b[h] * b[G.compose(g, h)].conj();
    out.set(g, h, w.at(g, h) * db.conj());
  }
  return out;
}

std::optional<OneCochain> try_trivialize(const TwoCocycle& w, std::int64_t m,
                                         int arrow_cap) {
  const FiniteGroupoid& G = *w.groupoid();
  if (G.num_arrows() > arrow_cap)
    throw Error(ErrorCode::SizeCapExceeded, "try_trivialize cap exceeded");

  // exponent of each value as a multiple of 1/m turns
  auto cp = composable_pairs(G);
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> rhs;
  for (auto [g, h] : cp.pairs) {
    CircleValue v = w.at(g, h);
    if (!v.exact() || m % v.turns_den() != 0)
      throw Error(ErrorCode::NotRootOfUnity,
                  "value " + v.str() + " is not an m-th root of unity on " +
                      pair_str(G, g, h));
    std::vector<std::int64_t> row(G.num_arrows(), 0);
    row[g] += 1;
    row[h] += 1;
    row[G.compose(g, h)] -= 1;
    A.push_back(std::move(row));
    rhs.push_back(v.turns_num() * (m / v.turns_den()));
  }
  // force exponent 0 on units so the result is a OneCochain
  for (int u : G.units()) {
    std::vector<std::int64_t> row(G.num_arrows(), 0);
    row[u] = 1;
    A.push_back(std::move(row));
    rhs.push_back(0);
  }

  auto sol = detail::solve_mod(std::move(A), std::move(rhs), m);
  if (!sol) return std::nullopt;
  std::vector<CircleValue> b(G.num_arrows());
  for (int g = 0; g < G.num_arrows(); ++g)
    b[g] = CircleValue::turns((*sol)[g], m);
  return OneCochain(w.groupoid(), std::move(b));
}

}  // namespace twistk
