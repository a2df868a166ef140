#include "abel_center/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "abel_center/errors.hpp"
#include "abel_center/json_io.hpp"
#include "abel_center/numeric.hpp"

namespace abel_center {

namespace {

struct Certificate {
  std::string command;
  json inputs = json::object();
  std::string verdict;
  json result = json::object();

  [[nodiscard]] json to_json() const {
    return {{"command", command},
            {"tool_version", kToolVersion},
            {"inputs", inputs},
            {"inputs_digest", fnv1a_hex(command + '\n' + inputs.dump())},
            {"verdict", verdict},
            {"result", result}};
  }
};

Interval interval_from_strings(const std::vector<std::string>& v) {
  if (v.size() != 2) throw InputError("--interval takes two rationals");
  return {parse_rational(v[0]), parse_rational(v[1])};
}

void print_text(const json& cert, std::ostream& out) {
  out << "command: " << cert["command"].get<std::string>() << '\n';
  out << "verdict: " << cert["verdict"].get<std::string>() << '\n';
  out << "inputs_digest: " << cert["inputs_digest"].get<std::string>() << '\n';
  for (const auto& [key, value] : cert["result"].items()) out << key << ": " << value.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact center and Melnikov computations for Abel equations", "abel-center"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  app.add_flag("--text", text, "Human-readable summary instead of JSON");

  std::string eq_file, p_file, q_file, a_file, sys_file, fol_file, h_file, r_file, word_text;
  std::vector<std::string> interval;
  int order = kDefaultCertificationOrder;
  int length = kDefaultWordLength;
  int max_weight = 0;
  int kmax = -1;
  int melnikov_order = 1;
  int master_k = 2;
  bool verify = false;
  bool force = false;
  bool reverse = false;
  double y0 = 1e-3;
  double tol = 1e-12;

  Certificate cert;
  std::function<void()> action;

  auto* coeffs = app.add_subcommand("coeffs", "Return-map coefficients c_1..c_N");
  coeffs->add_option("--eq", eq_file, "Equation JSON")->required();
  coeffs->add_option("--order", order, "N")->check(CLI::PositiveNumber);
  coeffs->add_flag("--verify", verify, "Recompute through the first-integral series");
  coeffs->callback([&] {
    action = [&] {
      const json in = read_json_file(eq_file);
      const AbelEquation eq = equation_from_json(in);
      cert.inputs = {{"eq", to_json(eq)}, {"order", order}, {"verify", verify}};
      const ReturnMapSeries m = return_map(eq, order, verify);
      const int first = m.first_nonzero();
      cert.verdict = first == 0 ? "center-up-to-order" : "not-center";
      cert.result = {{"c", to_json(m)}, {"order", order}, {"first_nonzero", first}};
      if (eq.species_count() <= 2) {
        const NecessaryConditions nc = necessary_conditions(eq);
        cert.result["necessary_conditions"] = {{"int_a1", to_json(nc.int_a1)},
                                               {"int_a2", to_json(nc.int_a2)},
                                               {"int_a1_a2", to_json(nc.int_a1_a2)},
                                               {"satisfied", nc.satisfied()}};
      }
    };
  });

  auto* universal = app.add_subcommand("universal", "Vanishing of all word integrals up to a length");
  universal->add_option("--eq", eq_file, "Equation JSON")->required();
  universal->add_option("-L", length, "Maximal word length")->check(CLI::PositiveNumber);
  universal->add_option("--max-weight", max_weight, "Maximal sum of species indices (0 = none)");
  universal->callback([&] {
    action = [&] {
      const AbelEquation eq = equation_from_json(read_json_file(eq_file));
      cert.inputs = {{"eq", to_json(eq)}, {"L", length}, {"max_weight", max_weight}};
      const UniversalVerdict v = universal_check(eq, length, max_weight);
      cert.verdict = v.universal_up_to ? "universal-up-to" : "not-universal";
      cert.result = to_json(v);
    };
  });

  auto* decompose = app.add_subcommand("decompose", "Common right composition factor of P and Q");
  decompose->add_option("--P", p_file, "Polynomial JSON")->required();
  decompose->add_option("--Q", q_file, "Polynomial JSON")->required();
  decompose->add_option("--interval", interval, "x0 x1")->expected(2)->required();
  decompose->callback([&] {
    action = [&] {
      const Poly P = poly_from_json(read_json_file(p_file));
      const Poly Q = poly_from_json(read_json_file(q_file));
      const Interval iv = interval_from_strings(interval);
      cert.inputs = {{"P", to_json(P)}, {"Q", to_json(Q)}, {"interval", to_json(iv)}};
      const auto found = common_factor(P, Q, iv);
      const PccVerdict pcc = pcc_check(P, Q, iv);
      cert.verdict = pcc.holds ? "PCC" : "NoPCC";
      cert.result = {{"pcc", to_json(pcc)}};
      if (found) {
        cert.result["common_factor"] = {{"W", to_json(found->W)},
                                        {"P_left", to_json(found->P_left)},
                                        {"Q_left", to_json(found->Q_left)},
                                        {"closes", found->closes}};
      } else {
        cert.result["common_factor"] = nullptr;
      }
    };
  });

  auto* moments_cmd = app.add_subcommand("moments", "Moments int q A^k");
  moments_cmd->add_option("--q", q_file, "Polynomial JSON")->required();
  moments_cmd->add_option("--A", a_file, "Polynomial JSON")->required();
  moments_cmd->add_option("-k", kmax, "kmax (default deg A * (deg Q + 1))");
  moments_cmd->add_option("--interval", interval, "x0 x1 (default 0 1)")->expected(2);
  moments_cmd->callback([&] {
    action = [&] {
      const Poly q = poly_from_json(read_json_file(q_file));
      const Poly A = poly_from_json(read_json_file(a_file));
      const Interval iv = interval.empty() ? Interval{0, 1} : interval_from_strings(interval);
      const int k = kmax >= 0 ? kmax : default_kmax(A, q);
      cert.inputs = {{"q", to_json(q)}, {"A", to_json(A)}, {"kmax", k}, {"interval", to_json(iv)}};
      const auto m = moments(q, A, iv, k);
      int first = -1;
      json values = json::array();
      for (std::size_t i = 0; i < m.size(); ++i) {
        values.push_back(to_json(m[i]));
        if (first < 0 && m[i] != 0) first = static_cast<int>(i);
      }
      cert.verdict = first < 0 ? "vanish-up-to-kmax" : "nonzero-moment";
      cert.result = {{"moments", values}, {"kmax", k}};
      if (first >= 0) cert.result["first_nonzero_k"] = first;
    };
  });

  auto* melnikov = app.add_subcommand("melnikov", "Melnikov functions M1, M2 as series in 1/h");
  melnikov->add_option("--sys", sys_file, "Perturbed system JSON")->required();
  melnikov->add_option("--order", melnikov_order, "1 or 2")->check(CLI::Range(1, 2));
  melnikov->add_option("-k", kmax, "kmax")->check(CLI::NonNegativeNumber);
  melnikov->add_flag("--force", force, "Expand M2 without an M1 = 0 certificate");
  melnikov->callback([&] {
    action = [&] {
      const PerturbedAbel sys = system_from_json(read_json_file(sys_file));
      const int k = kmax >= 0 ? kmax : 20;
      cert.inputs = {{"sys", to_json(sys)}, {"order", melnikov_order}, {"kmax", k}, {"force", force}};
      const MomentSeries m = melnikov_order == 1 ? melnikov1(sys, k) : melnikov2(sys, k, force);
      cert.verdict = m.is_zero() ? "vanishes-up-to-kmax" : "nonzero";
      cert.result = to_json(m);
      if (melnikov_order == 2) cert.result["integrand_g"] = to_json(melnikov2_integrand(sys));
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-integral", "Check a Darboux first integral of a foliation");
  verify_cmd->add_option("--fol", fol_file, "Foliation JSON")->required();
  verify_cmd->add_option("--H", h_file, "Darboux integral JSON")->required();
  verify_cmd->callback([&] {
    action = [&] {
      const Foliation fol = foliation_from_json(read_json_file(fol_file));
      const DarbouxIntegral H = integral_from_json(read_json_file(h_file));
      cert.inputs = {{"fol", to_json(fol)}, {"H", to_json(H)}};
      const YSeries residual = first_integral_residual(fol, H);
      cert.verdict = residual.is_zero() ? "first-integral" : "not-first-integral";
      cert.result = {{"residual", to_json(residual)}};
    };
  });

  auto* master = app.add_subcommand("generate-master", "Master Lienard family with Darboux integral");
  master->add_option("-k", master_k, "k >= 1")->check(CLI::PositiveNumber);
  master->add_option("--r", r_file, "Polynomial JSON for r(x) (default x)");
  master->callback([&] {
    action = [&] {
      const Poly r = r_file.empty() ? Poly::identity() : poly_from_json(read_json_file(r_file));
      cert.inputs = {{"k", master_k}, {"r", to_json(r)}};
      cert.result = to_json(generate_master(master_k, r));
      cert.verdict = "verified";
    };
  });

  auto* ggs = app.add_subcommand("ggs", "Center that is not universal: full certificate");
  ggs->add_option("--order", order, "N")->check(CLI::PositiveNumber);
  ggs->add_option("-L", length, "Witness word length")->check(CLI::PositiveNumber);
  ggs->add_option("--tol", tol, "Integrator tolerance")->check(CLI::PositiveNumber);
  ggs->callback([&] {
    action = [&] {
      const int word_length = ggs->count("-L") ? length : 3;
      cert.inputs = {{"order", order}, {"L", word_length}, {"tol", tol}};
      NumericConfig cfg;
      cfg.abs_tol = cfg.rel_tol = tol;
      const GgsCertificate c = ggs_pipeline(order, word_length, cfg);
      cert.result = to_json(c);
      cert.verdict = c.passed() ? "center-not-universal" : "failed:" + c.failed_leg;
      if (!c.passed()) throw InvariantError("ggs leg failed: " + c.failed_leg);
    };
  });

  auto* transport_cmd = app.add_subcommand("transport", "Numeric transport along the interval");
  transport_cmd->add_option("--eq", eq_file, "Equation JSON")->required();
  transport_cmd->add_option("--y0", y0, "Initial value");
  transport_cmd->add_option("--tol", tol, "Absolute and relative tolerance")->check(CLI::PositiveNumber);
  transport_cmd->add_flag("--reverse", reverse, "Integrate from x1 to x0");
  transport_cmd->callback([&] {
    action = [&] {
      const AbelEquation eq = equation_from_json(read_json_file(eq_file));
      cert.inputs = {{"eq", to_json(eq)}, {"y0", y0}, {"tol", tol}, {"reverse", reverse}};
      NumericConfig cfg;
      cfg.abs_tol = cfg.rel_tol = tol;
      try {
        const double y1 = reverse ? transport_reverse(eq, y0, cfg) : transport(eq, y0, cfg);
        cert.verdict = "transported";
        cert.result = {{"y1_approx", y1}};
      } catch (const BlowUp& e) {
        cert.verdict = "blow-up";
        cert.result = {{"x_star_approx", e.location}};
      }
    };
  });

  auto* iterint = app.add_subcommand("iterint", "Iterated integral of a word of polynomial forms");
  iterint->add_option("--word", word_text, "JSON array of polynomials, outermost first")->required();
  iterint->add_option("--interval", interval, "x0 x1")->expected(2)->required();
  iterint->callback([&] {
    action = [&] {
      const json w = parse_json_text(word_text, "--word");
      if (!w.is_array()) throw InputError("--word must be a JSON array of polynomials");
      Word word;
      for (const auto& f : w) word.push_back(poly_from_json(f));
      const Interval iv = interval_from_strings(interval);
      json forms = json::array();
      for (const auto& f : word) forms.push_back(to_json(f));
      cert.inputs = {{"word", forms}, {"interval", to_json(iv)}};
      cert.result = {{"value", to_json(iterated_integral(word, iv))}};
      cert.verdict = "computed";
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "abel-center: " << e.what() << '\n';
    return 1;
  }

  for (auto* sub : app.get_subcommands()) cert.command = sub->get_name();
  int code = 0;
  try {
    action();
  } catch (const InputError& e) {
    err << "abel-center " << cert.command << ": input error: " << e.what() << '\n';
    return 1;
  } catch (const StepLimitExceeded& e) {
    err << "abel-center " << cert.command << ": " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    err << "abel-center " << cert.command << ": invariant breach: " << e.what() << '\n';
    code = 2;
    if (cert.verdict.empty()) return code;
  }
  const json doc = cert.to_json();
  if (text) {
    print_text(doc, out);
  } else {
    out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace abel_center
