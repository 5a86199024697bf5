// Python bindings: descriptors in, plain Python objects (via JSON) out.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wseq/assoc.hpp"
#include "wseq/cli.hpp"
#include "wseq/conditions.hpp"
#include "wseq/conjugation.hpp"
#include "wseq/families.hpp"
#include "wseq/harness.hpp"
#include "wseq/indices.hpp"
#include "wseq/io.hpp"

namespace py = pybind11;
using namespace wseq;

namespace {

Config config_for(int J) {
    Config c = default_config();
    if (J > 0) c.J = J;
    return c;
}

std::string text(const json& j) { return dump_json(j, 0); }

}  // namespace

PYBIND11_MODULE(_wseq, m) {
    m.doc() = "Weight sequences, weight functions and weight matrices";

    py::register_exception<HorizonError>(m, "HorizonError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("tabulate", [](const std::string& spec, int J) { return make_sequence(spec, J).log_values; },
          py::arg("family"), py::arg("J"), "log M_0..log M_J");
    m.def("omega", [](const std::string& spec, double t, int J) { return omega_M_at(make_sequence(spec, J), t); },
          py::arg("family"), py::arg("t"), py::arg("J") = 256, "associated weight omega_M(t)");
    m.def("reconstruct", [](const std::string& spec, int j, int J) {
              return reconstruct_M(associated_weight(make_sequence(spec, J)), j);
          },
          py::arg("family"), py::arg("j"), py::arg("J") = 256, "log M_j recovered from omega_M");
    m.def("phi_star", [](const std::string& weight, const std::vector<double>& xs) {
              return phi_star(make_weight(weight), xs);
          },
          py::arg("weight"), py::arg("x"), "Young conjugate at each x");
    m.def("multi_index", [](const std::string& spec, double l, int J) {
              return multi_index_sequence(make_sequence(spec, std::max(256, J)), l, J).log_values;
          },
          py::arg("family"), py::arg("l"), py::arg("J"), "log M^{;l}_j, j = 0..J");
    m.def("check_json", [](const std::string& cond, const std::string& matrix, int J) {
              MatrixContext ctx(make_weight_matrix(matrix, config_for(J)), config_for(J));
              return text(to_json(check_condition(cond, ctx)));
          },
          py::arg("condition"), py::arg("matrix"), py::arg("J") = 0);
    m.def("index_json", [](const std::string& kind, const std::string& M, const std::string& N, int J) {
              Config c = config_for(J);
              WeightSequence a = make_sequence(M, c.J), b = make_sequence(N, c.J);
              if (kind == "beta-L") return text(to_json(beta_L(a, b, c)));
              if (kind == "alpha-mg") return text(to_json(alpha_mg(b, a, c)));
              if (kind == "alpha-omega1") return text(to_json(alpha_omega1(index_weight(a, c), index_weight(b, c), c)));
              if (kind == "beta-omega6") return text(to_json(beta_omega6(index_weight(b, c), index_weight(a, c), c)));
              throw DomainError("unknown index kind '" + kind + "'");
          },
          py::arg("kind"), py::arg("M"), py::arg("N"), py::arg("J") = 0);
    m.def("reciprocity_json", [](const std::string& which, const std::string& M, const std::string& N, int J) {
              Config c = config_for(J);
              WeightSequence a = make_sequence(M, c.J), b = make_sequence(N, c.J);
              if (which == "L") return text(to_json(verify_reciprocity_L(a, b, c)));
              if (which == "mg") return text(to_json(verify_reciprocity_mg(a, b, c)));
              throw DomainError("reciprocity is 'L' or 'mg'");
          },
          py::arg("which"), py::arg("M"), py::arg("N"), py::arg("J") = 0);
    m.def("run_suite_json", [](const std::string& suite, const std::string& subject, int J) {
              py::gil_scoped_release release;
              return dump_json(to_json(run_suite(suite, parse_descriptor(subject), config_for(J))));
          },
          py::arg("suite"), py::arg("subject"), py::arg("J") = 0);
    m.def("catalog", [] {
        std::vector<std::string> out;
        for (const auto& d : catalog_list()) out.push_back(to_string(d));
        return out;
    });
    m.def("cli", [](const std::vector<std::string>& args) { return cli_main(args); }, py::arg("args"),
          "run the command-line front end in-process; returns the exit code");
}
