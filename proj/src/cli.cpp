#include "smot/cli.hpp"

#include "smot/coupling.hpp"
#include "smot/curves.hpp"
#include "smot/io.hpp"
#include "smot/oracle.hpp"
#include "smot/order.hpp"
#include "smot/regime.hpp"
#include "smot/shadow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace smot {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text << "\n";
}

json report_to_json(const VerificationReport& rep) {
  auto check = [](const Check& c) {
    json j = {{"ok", c.ok}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
  };
  return {{"marginals", check(rep.marginals)},
          {"supermartingale", check(rep.supermartingale)},
          {"martingale_rows", check(rep.martingale_rows)},
          {"no_crossing", check(rep.no_crossing)},
          {"left_monotone", check(rep.left_monotone)},
          {"right_monotone", check(rep.right_monotone)},
          {"all_ok", rep.all_ok()}};
}

Coupling build_coupling(const Instance& inst, const std::string& method) {
  if (method == "increasing") return increasing_coupling(inst.mu, inst.nu);
  if (method == "antitone") return antitone_coupling(inst.mu, inst.nu);
  if (method == "quantile") return quantile_coupling(inst.mu, inst.nu);
  throw std::invalid_argument("unknown coupling method: " + method);
}

std::string opt_str(const std::optional<Rational>& r) {
  return r ? to_string(*r) : std::string();
}

json triple_to_json(const SupportTriple& t) {
  json j = {{"u", to_string(t.u)},
            {"region", t.region == Region::Martingale ? "martingale" : "supermartingale"},
            {"G", to_string(t.G)}};
  if (t.R) j["R"] = to_string(*t.R);
  if (t.S) j["S"] = to_string(*t.S);
  if (t.T) j["T"] = to_string(*t.T);
  if (t.phi) j["phi"] = to_string(*t.phi);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shadow couplings between finitely supported measures"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string method = "increasing";
  std::string check = "minimality";
  bool do_verify = false;
  bool csv = false;
  int grid = 64;
  long seed = 0;

  app.add_option("--seed", seed, "Seed for randomized instance generation in the test harness");

  auto add_io = [&](CLI::App* sub, bool with_output = true) {
    sub->add_option("-i,--input", in_path, "Instance JSON file")->required();
    if (with_output) sub->add_option("-o,--output", out_path, "Output file (default stdout)");
  };

  CLI::App* sc_shadow = app.add_subcommand("shadow", "Shadow of mu in nu");
  add_io(sc_shadow);
  CLI::App* sc_couple = app.add_subcommand("couple", "Build a coupling of (mu, nu)");
  add_io(sc_couple);
  sc_couple->add_option("--method", method, "increasing|antitone|quantile");
  sc_couple->add_flag("--verify", do_verify, "Also run the verification battery");
  CLI::App* sc_ustar = app.add_subcommand("ustar", "Regime-switching level");
  add_io(sc_ustar);
  CLI::App* sc_dec = app.add_subcommand("decompose", "Irreducible decomposition");
  add_io(sc_dec);
  CLI::App* sc_curves = app.add_subcommand("curves", "Supporting functions on a quantile grid");
  add_io(sc_curves);
  sc_curves->add_option("--grid", grid, "Number of interior grid points")->check(CLI::PositiveNumber);
  sc_curves->add_flag("--csv", csv, "Emit CSV instead of JSON");
  CLI::App* sc_verify = app.add_subcommand("verify", "Build and verify a coupling");
  add_io(sc_verify);
  sc_verify->add_option("--method", method, "increasing|antitone|quantile");
  CLI::App* sc_oracle = app.add_subcommand("oracle", "LP certification");
  add_io(sc_oracle);
  sc_oracle->add_option("--check", check, "minimality|optimality");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::stringstream msg;
    int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_shadow->parsed()) {
      Instance inst = load_instance(in_path);
      ShadowResult res = shadow(inst.mu, inst.nu);
      json j = {{"shadow", measure_to_json(res.shadow)}, {"excess", to_string(res.excess)}};
      emit(j.dump(2), out_path, out);
      return 0;
    }
    if (sc_couple->parsed() || sc_verify->parsed()) {
      Instance inst = load_instance(in_path);
      Coupling pi = build_coupling(inst, method);
      json j = coupling_to_json(pi);
      bool verified = true;
      if (do_verify || sc_verify->parsed()) {
        VerificationReport rep = verify(pi, inst.mu, inst.nu);
        j["verification"] = report_to_json(rep);
        verified = rep.all_ok();
      }
      emit(j.dump(2), out_path, out);
      return verified ? 0 : 1;
    }
    if (sc_ustar->parsed()) {
      Instance inst = load_instance(in_path);
      emit(to_string(ustar(inst.mu, inst.nu)), out_path, out);
      return 0;
    }
    if (sc_dec->parsed()) {
      Instance inst = load_instance(in_path);
      IrreducibleDecomposition dec = decompose(inst.mu, inst.nu);
      json comps = json::array();
      for (const auto& c : dec.components) {
        comps.push_back({{"lo", c.lo.str()},
                         {"hi", c.hi.str()},
                         {"martingale", c.martingale},
                         {"mu", measure_to_json(c.mu_part)},
                         {"nu", measure_to_json(c.nu_part)},
                         {"alpha", to_string(c.alpha)},
                         {"beta", to_string(c.beta)}});
      }
      json j = {{"x_star", dec.x_star.str()},
                {"components", comps},
                {"fixed", measure_to_json(dec.fixed_part)}};
      emit(j.dump(2), out_path, out);
      return 0;
    }
    if (sc_curves->parsed()) {
      Instance inst = load_instance(in_path);
      CurveContext ctx(inst.mu, inst.nu);
      std::vector<SupportTriple> triples;
      for (int jx = 1; jx <= grid; ++jx) {
        triples.push_back(ctx.triple_at(Rational(jx) / Rational(grid + 1)));
      }
      if (csv) {
        std::ostringstream s;
        s << "u,region,G,R,S,T,phi";
        for (const auto& t : triples) {
          s << "\n"
            << to_string(t.u) << ","
            << (t.region == Region::Martingale ? "martingale" : "supermartingale") << ","
            << to_string(t.G) << "," << opt_str(t.R) << "," << opt_str(t.S) << ","
            << opt_str(t.T) << "," << opt_str(t.phi);
        }
        emit(s.str(), out_path, out);
      } else {
        json rows = json::array();
        for (const auto& t : triples) rows.push_back(triple_to_json(t));
        emit(json{{"u_star", to_string(ctx.u_star())}, {"rows", rows}}.dump(2), out_path, out);
      }
      return 0;
    }
    if (sc_oracle->parsed()) {
      Instance inst = load_instance(in_path);
      if (check == "minimality") {
        DiscreteMeasure sh = shadow(inst.mu, inst.nu).shadow;
        json tests = json::array();
        bool ok = true;
        for (const auto& a : inst.nu.atoms()) {
          std::vector<Rational> f;
          for (const auto& b : inst.nu.atoms()) f.push_back(pos(a.x - b.x));
          LpSolution sol = min_over_eta(inst.mu, inst.nu, f);
          Rational expected = 0;
          for (const auto& b : sh.atoms()) expected += pos(a.x - b.x) * b.w;
          bool match = sol.status == LpStatus::Optimal && sol.value == expected;
          ok = ok && match;
          tests.push_back({{"k", to_string(a.x)},
                           {"lp", to_string(sol.value)},
                           {"shadow", to_string(expected)},
                           {"ok", match}});
        }
        emit(json{{"check", "minimality"}, {"tests", tests}, {"ok", ok}}.dump(2), out_path, out);
        return ok ? 0 : 1;
      }
      if (check == "optimality") {
        auto cost = spence_mirrlees_cost(inst.mu, inst.nu);
        Coupling pi = increasing_coupling(inst.mu, inst.nu);
        Rational c_pi = coupling_cost(pi, inst.mu, inst.nu, cost);
        LpSolution sol = min_over_couplings(inst.mu, inst.nu, cost,
                                            TransportConstraint::Supermartingale);
        bool ok = sol.status == LpStatus::Optimal && sol.value == c_pi;
        emit(json{{"check", "optimality"},
                  {"coupling_cost", to_string(c_pi)},
                  {"lp", to_string(sol.value)},
                  {"ok", ok}}
                 .dump(2),
             out_path, out);
        return ok ? 0 : 1;
      }
      throw std::invalid_argument("unknown oracle check: " + check);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace smot
