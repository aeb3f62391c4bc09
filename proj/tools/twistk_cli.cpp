#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistk/builders.hpp"
#include "twistk/cocycle.hpp"
#include "twistk/errors.hpp"
#include "twistk/homotopy.hpp"
#include "twistk/inverse_semigroup.hpp"
#include "twistk/io.hpp"
#include "twistk/ktheory.hpp"
#include "twistk/semidirect.hpp"
#include "twistk/twist.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace twistk;

constexpr int kExitPass = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitParse = 3;

struct Options {
  bool json_out = false;
  double tol = 1e-9;
  int seed = 0;
  int samples = 11;
};

std::string hex_digest(const std::string& text) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(io::digest(text)));
  return buf;
}

json report_json(const ValidationReport& rep) {
  json j;
  j["ok"] = rep.ok();
  j["violations"] = json::array();
  const Violation* worst = nullptr;
  for (const auto& v : rep.violations) {
    j["violations"].push_back(
        {{"kind", v.kind}, {"witness", v.witness}, {"deviation", v.deviation}});
    if (!worst || v.deviation > worst->deviation) worst = &v;
  }
  if (worst)
    j["worst"] = {{"kind", worst->kind},
                  {"witness", worst->witness},
                  {"deviation", worst->deviation}};
  j["notes"] = rep.notes;
  return j;
}

// Assembled per run; printed as JSON or as terse lines.
struct RunReport {
  json j;

  RunReport(const std::string& command, const Options& opt) {
    j["command"] = command;
    j["seed"] = opt.seed;
    j["inputs"] = json::object();
  }
  void input(const std::string& path, const std::string& text) {
    j["inputs"][path] = hex_digest(text);
  }
  void step(const std::string& name, const ValidationReport& rep) {
    if (!j.contains("steps")) j["steps"] = json::array();
    json s = report_json(rep);
    s["step"] = name;
    j["steps"].push_back(std::move(s));
  }
  int finish(int exit_code, const Options& opt, const std::string& human) {
    j["exit"] = exit_code;
    if (opt.json_out)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << human;
    return exit_code;
  }
};

std::string describe(const ValidationReport& rep) {
  std::ostringstream os;
  os << (rep.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& v : rep.violations)
    os << "  " << v.kind << " [" << v.witness << "]"
       << (v.deviation > 0 ? " deviation " + std::to_string(v.deviation) : "")
       << "\n";
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

json k0_json(const K0Data& d) {
  return {{"k", d.k}, {"block_sizes", d.block_sizes}, {"unit_class", d.unit_class}};
}

KTheoryOptions kt_options(const Options& opt) {
  KTheoryOptions o;
  o.seed = opt.seed;
  o.idempotent_tol = opt.tol;
  return o;
}

int cmd_validate(const std::string& path, const std::string& groupoid_path,
                 const std::string& semigroup_path, const Options& opt) {
  std::string text = io::read_file(path);
  RunReport run("validate " + path, opt);
  run.input(path, text);

  ValidationReport rep;
  switch (io::detect_schema(text)) {
    case io::Schema::Groupoid:
      rep = validate_groupoid(*io::parse_groupoid(text));
      break;
    case io::Schema::Cocycle: {
      if (groupoid_path.empty())
        throw Error(ErrorCode::ParseError, "cocycle file needs --groupoid");
      std::string gt = io::read_file(groupoid_path);
      run.input(groupoid_path, gt);
      rep = validate_cocycle(io::parse_cocycle(text, io::parse_groupoid(gt)),
                             opt.tol);
      break;
    }
    case io::Schema::Homotopy: {
      if (groupoid_path.empty())
        throw Error(ErrorCode::ParseError, "homotopy file needs --groupoid");
      std::string gt = io::read_file(groupoid_path);
      run.input(groupoid_path, gt);
      auto h = io::parse_homotopy(text, io::parse_groupoid(gt));
      for (double t : {0.0, 0.5, 1.0}) (void)h.sample(t, opt.tol);
      rep.note("samples at t = 0, 0.5, 1 validated");
      break;
    }
    case io::Schema::Semigroup:
      (void)io::parse_semigroup(text);
      rep.note("inverse semigroup axioms verified");
      break;
    case io::Schema::TwistedAction: {
      if (semigroup_path.empty())
        throw Error(ErrorCode::ParseError, "action file needs --semigroup");
      std::string st = io::read_file(semigroup_path);
      run.input(semigroup_path, st);
      rep = validate_twisted_action(
          io::parse_twisted_action(text, io::parse_semigroup(st)));
      break;
    }
    case io::Schema::DirectedAction:
      rep = validate_directed_action(io::parse_directed_action(text));
      break;
    default:
      throw Error(ErrorCode::ParseError, "unrecognized schema in " + path);
  }
  run.step("validate", rep);
  return run.finish(rep.ok() ? kExitPass : kExitValidation, opt, describe(rep));
}

int cmd_k0(const std::string& groupoid_path, const std::string& cocycle_path,
           const Options& opt) {
  std::string gt = io::read_file(groupoid_path);
  std::string ct = io::read_file(cocycle_path);
  RunReport run("k0 " + groupoid_path + " " + cocycle_path, opt);
  run.input(groupoid_path, gt);
  run.input(cocycle_path, ct);

  auto g = io::parse_groupoid(gt);
  auto grep = validate_groupoid(*g);
  run.step("groupoid", grep);
  auto w = io::parse_cocycle(ct, g);
  auto crep = validate_cocycle(w, opt.tol);
  run.step("cocycle", crep);
  if (!grep.ok() || !crep.ok())
    return run.finish(kExitValidation, opt,
                      describe(grep.ok() ? crep : grep));

  K0Data d = k0(g, w, kt_options(opt));
  run.j["result"] = k0_json(d);
  return run.finish(kExitPass, opt, io::write_k0(d));
}

int cmd_homotopy_check(const std::string& groupoid_path,
                       const std::string& homotopy_path, const Options& opt) {
  std::string gt = io::read_file(groupoid_path);
  std::string ht = io::read_file(homotopy_path);
  RunReport run("homotopy-check " + groupoid_path + " " + homotopy_path, opt);
  run.input(groupoid_path, gt);
  run.input(homotopy_path, ht);

  auto g = io::parse_groupoid(gt);
  auto grep = validate_groupoid(*g);
  run.step("groupoid", grep);
  if (!grep.ok()) return run.finish(kExitValidation, opt, describe(grep));

  auto h = io::parse_homotopy(ht, g);
  auto inv = verify_homotopy_invariance(g, h, opt.samples, kt_options(opt));
  run.j["result"] = json::parse(io::write_invariance(inv));
  return run.finish(inv.pass ? kExitPass : kExitValidation, opt,
                    io::write_invariance(inv));
}

int cmd_build_germ(const std::string& semigroup_path,
                   const std::string& action_path, const std::string& out_dir,
                   const Options& opt) {
  std::string st = io::read_file(semigroup_path);
  RunReport run("build germ " + semigroup_path, opt);
  run.input(semigroup_path, st);
  auto s = io::parse_semigroup(st);

  SemigroupTwistedAction action;
  if (action_path.empty()) {
    action = canonical_action(s).action;
  } else {
    std::string at = io::read_file(action_path);
    run.input(action_path, at);
    action = io::parse_twisted_action(at, s);
  }
  auto arep = validate_twisted_action(action);
  run.step("twisted action", arep);
  if (!arep.ok()) return run.finish(kExitValidation, opt, describe(arep));

  auto germ = germ_groupoid(action);
  auto w = induced_cocycle_on_germs(action, germ);
  std::string gout = out_dir + "/germ_groupoid.json";
  std::string cout_path = out_dir + "/germ_cocycle.json";
  io::write_file(gout, io::write_groupoid(*germ.groupoid));
  io::write_file(cout_path, io::write_cocycle(w));
  run.j["written"] = {gout, cout_path};
  return run.finish(kExitPass, opt, "wrote " + gout + "\nwrote " + cout_path + "\n");
}

int cmd_build_semidirect(const std::string& action_path,
                         const std::string& out_dir, const Options& opt) {
  std::string at = io::read_file(action_path);
  RunReport run("build semidirect " + action_path, opt);
  run.input(action_path, at);

  auto a = io::parse_directed_action(at);
  auto arep = validate_directed_action(a);
  run.step("directed action", arep);
  if (!arep.ok()) return run.finish(kExitValidation, opt, describe(arep));

  auto sd = build_semidirect_groupoid(a);
  std::string gout = out_dir + "/semidirect_groupoid.json";
  std::string lout = out_dir + "/semidirect_labels.json";
  io::write_file(gout, io::write_groupoid(*sd.groupoid));
  io::write_file(lout, io::write_semidirect_labels(sd, a.gamma));
  run.j["written"] = {gout, lout};
  return run.finish(kExitPass, opt, "wrote " + gout + "\nwrote " + lout + "\n");
}

int cmd_build_sigma(const std::string& groupoid_path,
                    const std::string& cocycle_path, int m,
                    const std::string& out_dir, const Options& opt) {
  std::string gt = io::read_file(groupoid_path);
  std::string ct = io::read_file(cocycle_path);
  RunReport run("build sigma " + groupoid_path + " " + cocycle_path, opt);
  run.input(groupoid_path, gt);
  run.input(cocycle_path, ct);

  auto g = io::parse_groupoid(gt);
  auto w = io::parse_cocycle(ct, g);
  auto crep = validate_cocycle(w, opt.tol);
  run.step("cocycle", crep);
  if (!crep.ok()) return run.finish(kExitValidation, opt, describe(crep));

  auto twist = build_sigma_omega(g, w, m);
  auto trep = validate_twist(twist);
  run.step("twist", trep);
  if (!trep.ok()) return run.finish(kExitValidation, opt, describe(trep));

  std::string gout = out_dir + "/sigma_groupoid.json";
  std::string sout = out_dir + "/sigma_twist.json";
  io::write_file(gout, io::write_groupoid(*twist.total));
  io::write_file(sout, io::write_twist_sidecar(twist));
  run.j["written"] = {gout, sout};
  return run.finish(kExitPass, opt, "wrote " + gout + "\nwrote " + sout + "\n");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
      return kExitParse;
    case ErrorCode::RankAmbiguous:
    case ErrorCode::EigenGapAmbiguous:
      return kExitAmbiguous;
    default:
      return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite twisted groupoid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_flag("--json", opt.json_out, "emit the full run report as JSON");
  app.add_option("--tol", opt.tol, "validation tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "homotopy sample count")
      ->capture_default_str();

  std::string path, groupoid_path, cocycle_path, semigroup_path, action_path,
      homotopy_path, out_dir = ".";
  int m = 1;

  auto* validate = app.add_subcommand("validate", "validate an input file");
  validate->add_option("file", path)->required();
  validate->add_option("--groupoid", groupoid_path,
                       "base groupoid for cocycle / homotopy files");
  validate->add_option("--semigroup", semigroup_path,
                       "semigroup for twisted action files");

  auto* k0cmd = app.add_subcommand("k0", "K0 of a twisted groupoid algebra");
  k0cmd->add_option("groupoid", groupoid_path)->required();
  k0cmd->add_option("cocycle", cocycle_path)->required();

  auto* hcmd = app.add_subcommand("homotopy-check",
                                  "K0 invariance along a cocycle homotopy");
  hcmd->add_option("groupoid", groupoid_path)->required();
  hcmd->add_option("homotopy", homotopy_path)->required();

  auto* build = app.add_subcommand("build", "materialize derived objects");
  build->require_subcommand(1);
  auto* germ = build->add_subcommand("germ", "groupoid of germs");
  germ->add_option("--semigroup", semigroup_path)->required();
  germ->add_option("--action", action_path,
                   "twisted action file (default: canonical action)");
  germ->add_option("--out", out_dir);
  auto* semi = build->add_subcommand("semidirect", "semidirect product groupoid");
  semi->add_option("action", action_path)->required();
  semi->add_option("--out", out_dir);
  auto* sigma = build->add_subcommand("sigma", "extension groupoid of a cocycle");
  sigma->add_option("groupoid", groupoid_path)->required();
  sigma->add_option("cocycle", cocycle_path)->required();
  sigma->add_option("--m", m, "coefficient order")->required();
  sigma->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*validate)
      return cmd_validate(path, groupoid_path, semigroup_path, opt);
    if (*k0cmd) return cmd_k0(groupoid_path, cocycle_path, opt);
    if (*hcmd) return cmd_homotopy_check(groupoid_path, homotopy_path, opt);
    if (*germ) return cmd_build_germ(semigroup_path, action_path, out_dir, opt);
    if (*semi) return cmd_build_semidirect(action_path, out_dir, opt);
    if (*sigma)
      return cmd_build_sigma(groupoid_path, cocycle_path, m, out_dir, opt);
  } catch (const Error& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
