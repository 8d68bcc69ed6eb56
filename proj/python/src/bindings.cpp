#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leecode/closed_form.hpp"
#include "leecode/code_builder.hpp"
#include "leecode/gray_analysis.hpp"
#include "leecode/report.hpp"

namespace py = pybind11;
using namespace leecode;

namespace {

SupportSet support(const std::vector<int>& coords, int m) { return SupportSet::from_coordinates(coords, m); }

std::map<std::int64_t, std::int64_t> entries(const WeightDistribution& d) { return d.entries; }

}  // namespace

PYBIND11_MODULE(_leecode, mod) {
    mod.doc() = "Lee weight distributions of Z2[u]-linear codes built from simplicial complexes";

    py::register_exception<std::invalid_argument>(mod, "LeecodeValueError", PyExc_ValueError);

    mod.def("code_length", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                              const std::vector<int>& f) {
        return code_length(m, support(d, m), support(e, m), support(f, m));
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"));

    mod.def("distribution_formula", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                                       const std::vector<int>& f) {
        const auto [msg, cw] = distribution_formula(m, support(d, m), support(e, m), support(f, m));
        return py::make_tuple(entries(msg), entries(cw));
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"),
       "(message-level, codeword-level) weight distributions from the closed form.");

    mod.def("brute_force_distribution", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                                           const std::vector<int>& f, unsigned workers) {
        const auto set = build_defining_set(m, support(d, m), support(e, m), support(f, m));
        BruteForceResult result;
        {
            py::gil_scoped_release release;
            result = brute_force(set, {workers, std::nullopt});
        }
        return py::make_tuple(entries(result.message_level), entries(result.codeword_level), result.kernel.size());
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"), py::arg("workers") = 0,
       "(message-level, codeword-level, kernel size) by exhaustive enumeration.");

    mod.def("lee_weight_formula", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                                     const std::vector<int>& f, std::uint64_t message_index) {
        return lee_weight_formula(m, support(d, m), support(e, m), support(f, m),
                                  MixedWord::from_index(message_index, m));
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"), py::arg("message_index"),
       "Lee weight of c_a; message_index = p | q << m | r << 2m.");

    mod.def("lee_weight_brute", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                                   const std::vector<int>& f, std::uint64_t message_index) {
        const auto set = build_defining_set(m, support(d, m), support(e, m), support(f, m));
        return lee_weight(encode(MixedWord::from_index(message_index, m), set));
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"), py::arg("message_index"));

    mod.def("enumerator", [](const std::map<std::int64_t, std::int64_t>& dist, std::int64_t gray_length) {
        return enumerator_string({DistributionLevel::codeword, dist}, gray_length);
    }, py::arg("distribution"), py::arg("gray_length"));

    mod.def("gray_parameters", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                                  const std::vector<int>& f) {
        GrayImageOptions options;
        BinaryCode code;
        {
            py::gil_scoped_release release;
            code = gray_image(m, support(d, m), support(e, m), support(f, m), options);
        }
        return py::make_tuple(code.length, code.dimension, code.min_distance);
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"), "[n, k, d] of the binary Gray image.");

    mod.def("minimality_predicate", &minimality_predicate, py::arg("m"), py::arg("n"));

    mod.def("analyze_json", [](int m, const std::vector<int>& d, const std::vector<int>& e,
                               const std::vector<int>& f, const std::string& engine,
                               std::uint64_t budget_bytes, unsigned workers) {
        AnalyzeOptions options;
        options.engine = parse_engine(engine);
        options.budget_bytes = budget_bytes;
        options.workers = workers;
        AnalysisReport report;
        {
            py::gil_scoped_release release;
            report = analyze_instance(m, support(d, m), support(e, m), support(f, m), options);
        }
        return to_json(report, -1);
    }, py::arg("m"), py::arg("D"), py::arg("E"), py::arg("F"), py::arg("engine") = "analyze",
       py::arg("budget_bytes") = AnalyzeOptions{}.budget_bytes, py::arg("workers") = 0);
}
