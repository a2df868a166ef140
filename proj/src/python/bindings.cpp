#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "abel_center/cli.hpp"
#include "abel_center/composition.hpp"
#include "abel_center/darboux.hpp"
#include "abel_center/errors.hpp"
#include "abel_center/json_io.hpp"
#include "abel_center/melnikov.hpp"
#include "abel_center/numeric.hpp"

namespace py = pybind11;
using namespace abel_center;

// Every entry point speaks JSON text; the Python package converts to Fraction.
namespace {

json parse(const std::string& text) { return parse_json_text(text, "argument"); }

Interval interval_of(const std::string& x0, const std::string& x1) { return {parse_rational(x0), parse_rational(x1)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact center and Melnikov computations for Abel equations";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<BlowUp>(m, "BlowUp", PyExc_ArithmeticError);
  py::register_exception<StepLimitExceeded>(m, "StepLimitExceeded", PyExc_RuntimeError);

  m.def(
      "return_map",
      [](const std::string& eq, int order, bool verify) {
        return to_json(return_map(equation_from_json(parse(eq)), order, verify)).dump();
      },
      py::arg("eq"), py::arg("order"), py::arg("verify") = false);

  m.def(
      "necessary_conditions",
      [](const std::string& eq) {
        const NecessaryConditions nc = necessary_conditions(equation_from_json(parse(eq)));
        return json{to_json(nc.int_a1), to_json(nc.int_a2), to_json(nc.int_a1_a2)}.dump();
      },
      py::arg("eq"));

  m.def(
      "universal_check",
      [](const std::string& eq, int max_length, int max_weight) {
        return to_json(universal_check(equation_from_json(parse(eq)), max_length, max_weight)).dump();
      },
      py::arg("eq"), py::arg("max_length"), py::arg("max_weight") = 0);

  m.def(
      "iterated_integral",
      [](const std::string& word, const std::string& x0, const std::string& x1) {
        Word w;
        for (const auto& f : parse(word)) w.push_back(poly_from_json(f));
        return to_string(iterated_integral(w, interval_of(x0, x1)));
      },
      py::arg("word"), py::arg("x0"), py::arg("x1"));

  m.def(
      "right_factor",
      [](const std::string& P, int d) -> std::optional<std::string> {
        const auto f = right_factor(poly_from_json(parse(P)), d);
        if (!f) return std::nullopt;
        return json{{"W", to_json(f->W)}, {"left", to_json(f->left)}}.dump();
      },
      py::arg("P"), py::arg("d"));

  m.def(
      "pcc_check",
      [](const std::string& A, const std::string& B, const std::string& x0, const std::string& x1) {
        return to_json(pcc_check(poly_from_json(parse(A)), poly_from_json(parse(B)), interval_of(x0, x1))).dump();
      },
      py::arg("A"), py::arg("B"), py::arg("x0"), py::arg("x1"));

  m.def(
      "moments",
      [](const std::string& q, const std::string& A, const std::string& x0, const std::string& x1, int kmax) {
        json out = json::array();
        for (const auto& v : moments(poly_from_json(parse(q)), poly_from_json(parse(A)), interval_of(x0, x1), kmax)) {
          out.push_back(to_json(v));
        }
        return out.dump();
      },
      py::arg("q"), py::arg("A"), py::arg("x0"), py::arg("x1"), py::arg("kmax"));

  m.def(
      "melnikov",
      [](const std::string& sys, int order, int kmax, bool force) {
        const PerturbedAbel s = system_from_json(parse(sys));
        if (order == 1) return to_json(melnikov1(s, kmax)).dump();
        if (order == 2) return to_json(melnikov2(s, kmax, force)).dump();
        throw UnsupportedOrder("only orders 1 and 2 are implemented");
      },
      py::arg("sys"), py::arg("order"), py::arg("kmax"), py::arg("force") = false);

  m.def(
      "verify_first_integral",
      [](const std::string& fol, const std::string& H) {
        return verify_first_integral(foliation_from_json(parse(fol)), integral_from_json(parse(H)));
      },
      py::arg("fol"), py::arg("H"));

  m.def(
      "generate_master",
      [](int k, const std::string& r) { return to_json(generate_master(k, poly_from_json(parse(r)))).dump(); },
      py::arg("k"), py::arg("r"));

  m.def(
      "ggs_certificate",
      [](int order, int word_length) { return to_json(ggs_pipeline(order, word_length)).dump(); },
      py::arg("order") = kDefaultCertificationOrder, py::arg("word_length") = 3);

  m.def(
      "transport",
      [](const std::string& eq, double y0, double tol, bool reverse) {
        NumericConfig cfg;
        cfg.abs_tol = cfg.rel_tol = tol;
        const AbelEquation e = equation_from_json(parse(eq));
        py::gil_scoped_release release;
        return reverse ? transport_reverse(e, y0, cfg) : transport(e, y0, cfg);
      },
      py::arg("eq"), py::arg("y0"), py::arg("tol") = 1e-12, py::arg("reverse") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
