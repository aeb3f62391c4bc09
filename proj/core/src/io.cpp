#include "twistk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "twistk/errors.hpp"

namespace twistk::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    bad("not an integer: '" + s + "'");
  return v;
}

// "p/q" or "p", as a fraction
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {to_int(s), 1};
  return {to_int(s.substr(0, slash)), to_int(s.substr(slash + 1))};
}

CircleValue parse_turns(const json& v) {
  if (v.is_number_integer()) return CircleValue::turns(v.get<std::int64_t>(), 1);
  if (!v.is_string()) bad("turns must be an integer or a 'p/q' string");
  auto [p, q] = parse_fraction(v.get<std::string>());
  if (q == 0) bad("zero denominator in turns");
  return CircleValue::turns(p, q);
}

int arrow_or_bad(const FiniteGroupoid& g, const std::string& id) {
  int a = g.arrow(id);
  if (a < 0) bad("unknown arrow '" + id + "'");
  return a;
}

// exponent tuple "(a1,...,ak)"
std::vector<int> parse_tuple(const std::string& id, int k) {
  if (id.size() < 2 || id.front() != '(' || id.back() != ')')
    bad("arrow id '" + id + "' is not an integer tuple");
  std::vector<int> out;
  std::string body = id.substr(1, id.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ','))
    out.push_back(static_cast<int>(to_int(tok)));
  if (static_cast<int>(out.size()) != k)
    bad("arrow id '" + id + "' has the wrong tuple length");
  return out;
}

TwoCocycle parse_cocycle_json(const json& j, const GroupoidPtr& g);

TwoCocycle parse_values_cocycle(const json& j, const GroupoidPtr& g) {
  TwoCocycle w(g);
  for (const auto& entry : j.at("values")) {
    const auto& pr = entry.at("pair");
    int a = arrow_or_bad(*g, pr.at(0).get<std::string>());
    int b = arrow_or_bad(*g, pr.at(1).get<std::string>());
    if (entry.contains("turns"))
      w.set(a, b, parse_turns(entry.at("turns")));
    else if (entry.contains("radians"))
      w.set(a, b, CircleValue::radians(entry.at("radians").get<double>()));
    else
      bad("cocycle value entry needs 'turns' or 'radians'");
  }
  return w;
}

OneCochain parse_cochain(const json& j, const GroupoidPtr& g) {
  std::vector<CircleValue> vals(g->num_arrows(), CircleValue::one());
  for (const auto& [id, v] : j.items())
    vals[arrow_or_bad(*g, id)] = parse_turns(v);
  return OneCochain(g, std::move(vals));
}

TwoCocycle parse_bilinear_cocycle(const json& j, const GroupoidPtr& g) {
  std::vector<int> moduli = j.at("moduli").get<std::vector<int>>();
  std::vector<std::vector<int>> Q = j.at("Q").get<std::vector<std::vector<int>>>();
  GroupCocycle gc = bilinear_cocycle(moduli, Q);
  const int k = static_cast<int>(moduli.size());

  auto element_of = [&](int arrow) {
    auto d = parse_tuple(g->id(arrow), k);
    int idx = 0;
    for (int a = 0; a < k; ++a) {
      int r = d[a] % moduli[a];
      if (r < 0) r += moduli[a];
      idx = idx * moduli[a] + r;
    }
    return idx;
  };
  TwoCocycle w(g);
  for (auto [a, b] : composable_pairs(*g).pairs)
    w.set(a, b, gc.at(element_of(a), element_of(b)));
  return w;
}

TwoCocycle parse_cocycle_json(const json& j, const GroupoidPtr& g) {
  if (j.contains("values")) return parse_values_cocycle(j, g);
  if (!j.contains("family")) bad("cocycle file needs 'values' or 'family'");
  std::string fam = j.at("family").get<std::string>();
  if (fam == "coboundary") return coboundary(parse_cochain(j.at("b"), g));
  if (fam == "bilinear") return parse_bilinear_cocycle(j, g);
  if (fam == "product") {
    const auto& parts = j.at("of");
    if (parts.empty()) return TwoCocycle::constant_one(g);
    TwoCocycle w = parse_cocycle_json(parts.at(0), g);
    for (std::size_t i = 1; i < parts.size(); ++i)
      w = multiply_cocycles(w, parse_cocycle_json(parts.at(i), g));
    return w;
  }
  bad("unknown cocycle family '" + fam + "'");
}

}  // namespace

Schema detect_schema(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) return Schema::Unknown;
  if (j.contains("units") && j.contains("arrows")) return Schema::Groupoid;
  if (j.contains("values") || j.contains("family")) return Schema::Cocycle;
  if (j.contains("kind")) return Schema::Homotopy;
  if (j.contains("elements") && j.contains("table") && j.contains("zero"))
    return Schema::Semigroup;
  if (j.contains("space") && j.contains("domains") && j.contains("theta"))
    return Schema::TwistedAction;
  if (j.contains("gamma") && j.contains("P") && j.contains("X"))
    return Schema::DirectedAction;
  return Schema::Unknown;
}

GroupoidPtr parse_groupoid(const std::string& text) {
  json j = parse_json(text);
  try {
    std::vector<std::string> unit_names =
        j.at("units").get<std::vector<std::string>>();

    std::vector<std::string> ids;
    std::vector<std::string> src_names, dst_names;
    for (const auto& a : j.at("arrows")) {
      ids.push_back(a.at("id").get<std::string>());
      src_names.push_back(a.at("src").get<std::string>());
      dst_names.push_back(a.at("dst").get<std::string>());
    }
    const int n = static_cast<int>(ids.size());
    auto find_arrow = [&](const std::string& id) {
      for (int i = 0; i < n; ++i)
        if (ids[i] == id) return i;
      throw Error(ErrorCode::MalformedTable, "dangling id '" + id + "'");
    };

    // identity arrows carry the unit's name as their id
    std::vector<int> units;
    for (const auto& u : unit_names) units.push_back(find_arrow(u));

    auto find_unit = [&](const std::string& name) {
      for (std::size_t i = 0; i < unit_names.size(); ++i)
        if (unit_names[i] == name) return units[i];
      throw Error(ErrorCode::MalformedTable, "dangling unit '" + name + "'");
    };
    std::vector<int> src(n), dst(n);
    for (int i = 0; i < n; ++i) {
      src[i] = find_unit(src_names[i]);
      dst[i] = find_unit(dst_names[i]);
    }

    std::vector<int> inv(n, -1);
    for (const auto& [a, b] : j.at("inv").items())
      inv[find_arrow(a)] = find_arrow(b.get<std::string>());
    for (int i = 0; i < n; ++i)
      if (inv[i] < 0)
        throw Error(ErrorCode::MalformedTable, "inv missing for '" + ids[i] + "'");

    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (const auto& row : j.at("compose")) {
      int a = find_arrow(row.at(0).get<std::string>());
      int b = find_arrow(row.at(1).get<std::string>());
      table[static_cast<std::size_t>(a) * n + b] =
          find_arrow(row.at(2).get<std::string>());
    }
    return std::make_shared<FiniteGroupoid>(std::move(ids), std::move(src),
                                            std::move(dst), std::move(units),
                                            std::move(inv), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

TwoCocycle parse_cocycle(const std::string& text, const GroupoidPtr& g) {
  json j = parse_json(text);
  try {
    return parse_cocycle_json(j, g);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

CocycleHomotopy parse_homotopy(const std::string& text, const GroupoidPtr& g) {
  json j = parse_json(text);
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "coboundary_path")
      return CocycleHomotopy::coboundary_path(parse_cochain(j.at("b"), g));
    if (kind == "linear_lift") {
      std::unordered_map<std::uint64_t, double> c;
      for (const auto& entry : j.at("c")) {
        const auto& pr = entry.at("pair");
        int a = arrow_or_bad(*g, pr.at(0).get<std::string>());
        int b = arrow_or_bad(*g, pr.at(1).get<std::string>());
        const auto& r = entry.at("radians");
        double val;
        if (r.is_string()) {
          auto [p, q] = parse_fraction(r.get<std::string>());
          if (q == 0) bad("zero denominator in radians fraction");
          val = std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
        } else {
          val = r.get<double>();
        }
        c[CocycleHomotopy::lift_key(a, b)] = val;
      }
      return CocycleHomotopy::linear_lift(g, std::move(c));
    }
    bad("unknown homotopy kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SemigroupPtr parse_semigroup(const std::string& text) {
  json j = parse_json(text);
  try {
    std::vector<std::string> names =
        j.at("elements").get<std::vector<std::string>>();
    auto find = [&](const std::string& s) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
      bad("unknown element '" + s + "'");
    };
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
      std::vector<int> r;
      for (const auto& cell : row) r.push_back(find(cell.get<std::string>()));
      table.push_back(std::move(r));
    }
    int zero = find(j.at("zero").get<std::string>());
    return validate_inverse_semigroup(std::move(names), std::move(table), zero);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SemigroupTwistedAction parse_twisted_action(const std::string& text,
                                            const SemigroupPtr& sp) {
  json j = parse_json(text);
  const FiniteInverseSemigroup& S = *sp;
  try {
    SemigroupTwistedAction a;
    a.S = sp;
    a.space = j.at("space").get<std::vector<std::string>>();
    auto find_x = [&](const std::string& s) {
      for (std::size_t i = 0; i < a.space.size(); ++i)
        if (a.space[i] == s) return static_cast<int>(i);
      bad("unknown point '" + s + "'");
    };
    auto find_s = [&](const std::string& s) {
      int e = S.element(s);
      if (e < 0) bad("unknown semigroup element '" + s + "'");
      return e;
    };
    a.domain.resize(S.size());
    a.theta.resize(S.size());
    for (const auto& [name, pts] : j.at("domains").items()) {
      auto& d = a.domain[find_s(name)];
      for (const auto& p : pts) d.push_back(find_x(p.get<std::string>()));
      std::sort(d.begin(), d.end());
    }
    for (const auto& [name, m] : j.at("theta").items()) {
      auto& t = a.theta[find_s(name)];
      for (const auto& [x, y] : m.items())
        t[find_x(x)] = find_x(y.get<std::string>());
    }
    // default: trivial cocycle on every D_{st}
    for (int s = 0; s < S.size(); ++s)
      for (int t = 0; t < S.size(); ++t) {
        auto& m = a.omega[{s, t}];
        for (int x : a.domain[S.mul(s, t)]) m[x] = CircleValue::one();
      }
    if (j.contains("omega")) {
      for (const auto& [key, m] : j.at("omega").items()) {
        // "(s,t)"; the comma split must resolve both names
        if (key.size() < 2 || key.front() != '(' || key.back() != ')')
          bad("omega key '" + key + "' is not a pair");
        std::string body = key.substr(1, key.size() - 2);
        int s = -1, t = -1;
        for (std::size_t cut = 0; cut < body.size(); ++cut) {
          if (body[cut] != ',') continue;
          int cs = S.element(body.substr(0, cut));
          int ct = S.element(body.substr(cut + 1));
          if (cs >= 0 && ct >= 0) {
            s = cs;
            t = ct;
            break;
          }
        }
        if (s < 0) bad("omega key '" + key + "' does not name two elements");
        auto& dest = a.omega[{s, t}];
        for (const auto& [x, v] : m.items()) dest[find_x(x)] = parse_turns(v);
      }
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

DirectedAction parse_directed_action(const std::string& text) {
  json j = parse_json(text);
  try {
    DirectedAction a;
    const auto& gj = j.at("gamma");
    a.gamma.names = gj.at("elements").get<std::vector<std::string>>();
    auto find_g = [&](const std::string& s) {
      for (std::size_t i = 0; i < a.gamma.names.size(); ++i)
        if (a.gamma.names[i] == s) return static_cast<int>(i);
      bad("unknown group element '" + s + "'");
    };
    for (const auto& row : gj.at("table")) {
      std::vector<int> r;
      for (const auto& cell : row) r.push_back(find_g(cell.get<std::string>()));
      a.gamma.mul.push_back(std::move(r));
    }
    check_group(a.gamma);

    for (const auto& p : j.at("P")) a.P.push_back(find_g(p.get<std::string>()));
    std::sort(a.P.begin(), a.P.end());
    a.P.erase(std::unique(a.P.begin(), a.P.end()), a.P.end());

    a.space = j.at("X").get<std::vector<std::string>>();
    auto find_x = [&](const std::string& s) {
      for (std::size_t i = 0; i < a.space.size(); ++i)
        if (a.space[i] == s) return static_cast<int>(i);
      bad("unknown point '" + s + "'");
    };
    a.dom.resize(a.P.size());
    a.T.resize(a.P.size());
    auto p_pos = [&](const std::string& s) {
      int pos = a.p_position(find_g(s));
      if (pos < 0) bad("'" + s + "' is not in P");
      return pos;
    };
    for (const auto& [name, pts] : j.at("dom").items()) {
      auto& d = a.dom[p_pos(name)];
      for (const auto& p : pts) d.push_back(find_x(p.get<std::string>()));
      std::sort(d.begin(), d.end());
    }
    for (const auto& [name, m] : j.at("T").items()) {
      auto& t = a.T[p_pos(name)];
      for (const auto& [x, y] : m.items())
        t[find_x(x)] = find_x(y.get<std::string>());
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string write_groupoid(const FiniteGroupoid& g) {
  json j;
  j["units"] = json::array();
  for (int u : g.units()) j["units"].push_back(g.id(u));
  j["arrows"] = json::array();
  auto unit_name = [&](int u) { return g.id(u); };
  for (int a = 0; a < g.num_arrows(); ++a)
    j["arrows"].push_back({{"id", g.id(a)},
                           {"src", unit_name(g.src(a))},
                           {"dst", unit_name(g.dst(a))}});
  j["compose"] = json::array();
  for (auto [a, b] : composable_pairs(g).pairs)
    j["compose"].push_back({g.id(a), g.id(b), g.id(g.compose(a, b))});
  j["inv"] = json::object();
  for (int a = 0; a < g.num_arrows(); ++a) j["inv"][g.id(a)] = g.id(g.inv(a));
  return j.dump(2) + "\n";
}

std::string write_cocycle(const TwoCocycle& w) {
  const FiniteGroupoid& g = *w.groupoid();
  json j;
  j["values"] = json::array();
  for (auto [a, b] : composable_pairs(g).pairs) {
    CircleValue v = w.at(a, b);
    json entry;
    entry["pair"] = {g.id(a), g.id(b)};
    if (v.exact()) {
      std::ostringstream os;
      os << v.turns_num() << "/" << v.turns_den();
      entry["turns"] = os.str();
    } else {
      entry["radians"] = v.angle_radians();
    }
    j["values"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

namespace {
json k0_json(const K0Data& d) {
  json j;
  j["k"] = d.k;
  j["block_sizes"] = d.block_sizes;
  j["unit_class"] = d.unit_class;
  return j;
}
}  // namespace

std::string write_k0(const K0Data& d) { return k0_json(d).dump(2) + "\n"; }

std::string write_invariance(const InvarianceReport& r) {
  json j;
  j["samples"] = json::array();
  for (const auto& s : r.samples) {
    json e;
    e["t"] = s.t;
    e["k0"] = s.valid ? k0_json(s.k0) : json(nullptr);
    e["valid"] = s.valid;
    j["samples"].push_back(std::move(e));
  }
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["level"] = r.level;
  return j.dump(2) + "\n";
}

std::string write_twist_sidecar(const FiniteTwist& t) {
  json j;
  j["m"] = t.m;
  j["i"] = json::object();
  for (int u : t.base->units())
    for (int k = 0; k < t.m; ++k)
      j["i"][t.base->id(u) + ";" + std::to_string(k)] =
          t.total->id(t.inclusion(u, k));
  j["j"] = json::object();
  for (int s = 0; s < t.total->num_arrows(); ++s)
    j["j"][t.total->id(s)] = t.base->id(t.projection(s));
  return j.dump(2) + "\n";
}

std::string write_semidirect_labels(const SemidirectGroupoid& g,
                                    const GroupTable& gamma) {
  json j;
  j["labels"] = json::object();
  for (int a = 0; a < g.groupoid->num_arrows(); ++a)
    j["labels"][g.groupoid->id(a)] = gamma.names[g.label[a]];
  j["gamma"] = json::object();
  j["gamma"]["elements"] = gamma.names;
  j["gamma"]["table"] = json::array();
  for (const auto& row : gamma.mul) {
    json r = json::array();
    for (int v : row) r.push_back(gamma.names[v]);
    j["gamma"]["table"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::uint64_t digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace twistk::io
