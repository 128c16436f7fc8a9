#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "seshcert/cli.hpp"

namespace py = pybind11;
using namespace seshcert;

namespace {

FilterSet filters_or_paper(const std::optional<std::string>& filters) {
    return filters ? FilterSet::parse(*filters) : FilterSet::paper();
}

int ordering_sign(std::strong_ordering o) {
    return o == std::strong_ordering::less ? -1 : (o == std::strong_ordering::greater ? 1 : 0);
}

std::string certificate_json(std::int64_t r, const std::string& delta, const std::optional<std::string>& filters,
                             std::optional<std::int64_t> k_max, int threads) {
    RunConfig config;
    config.command = Command::verify;
    config.r = r;
    config.delta = parse_rational(delta);
    config.filters = filters_or_paper(filters);
    config.k_max_override = k_max;
    VerifyOptions opts;
    opts.k_max = k_max;
    opts.threads = threads;
    CertificateDocument doc;
    doc.config = config;
    doc.certificate = verify_delta(r, *config.delta, config.filters, opts);
    return emit_certificate(doc, Format::json);
}

}  // namespace

PYBIND11_MODULE(_seshcert, m) {
    m.doc() = "Exact exclusion certificates for multipoint Seshadri bounds on fake projective planes";

    m.def("q_sign", [](const std::string& a, const std::string& b, std::int64_t n) {
        return q_sign(QuadReal(parse_rational(a), parse_rational(b), Integer(n)));
    }, py::arg("a"), py::arg("b"), py::arg("n"), "Exact sign of a + b*sqrt(n).");
    m.def("q_decimal", [](const std::string& a, const std::string& b, std::int64_t n, int places, const std::string& mode) {
        return q_decimal(QuadReal(parse_rational(a), parse_rational(b), Integer(n)), places,
                         mode == "nearest" ? Rounding::nearest : Rounding::floor);
    }, py::arg("a"), py::arg("b"), py::arg("n"), py::arg("places"), py::arg("mode") = "floor");
    m.def("ceil_sqrt", [](std::int64_t n) { return ceil_sqrt(n); });

    m.def("ratio", [](std::int64_t k, std::int64_t r, std::int64_t mm, std::int64_t big_m) {
        return rational_string(ratio(CurveClass(k), MultiplicityPattern(r, mm, big_m)));
    }, py::arg("k"), py::arg("r"), py::arg("m"), py::arg("M"));
    m.def("xu_floor", &xu_floor);
    m.def("is_below_threshold", [](std::int64_t k, std::int64_t r, std::int64_t mm, std::int64_t big_m,
                                   const std::string& delta) {
        return is_below_threshold(CurveClass(k), MultiplicityPattern(r, mm, big_m), parse_rational(delta));
    }, py::arg("k"), py::arg("r"), py::arg("m"), py::arg("M"), py::arg("delta"));

    m.def("f_value", [](const std::string& c, std::int64_t k, std::int64_t r, std::int64_t mm, std::int64_t big_m) {
        return f_value(parse_fcase(c), k, r, mm, big_m);
    }, py::arg("case"), py::arg("k"), py::arg("r"), py::arg("m"), py::arg("M"));
    m.def("k_cutoff", [](const std::string& delta) { return k_cutoff(parse_rational(delta)); });
    m.def("all_ones_excluded", [](std::int64_t r) {
        auto rec = all_ones_excluded(r);
        return py::dict(py::arg("r") = rec.r, py::arg("max_submaximal_k") = rec.max_submaximal_k,
                        py::arg("min_dimension_k") = rec.min_dimension_k, py::arg("verified") = rec.verified);
    });
    m.def("verify_delta_json", &certificate_json, py::arg("r"), py::arg("delta"), py::arg("filters") = py::none(),
          py::arg("k_max") = py::none(), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("optimize_delta", [](std::int64_t r, const std::string& grid, const std::optional<std::string>& filters,
                               int threads) {
        return rational_string(optimize_delta(r, parse_rational(grid), filters_or_paper(filters), threads).delta);
    }, py::arg("r"), py::arg("grid") = "1/1000", py::arg("filters") = py::none(), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("tail_threshold", [](std::int64_t k_max) { return tail_threshold(k_max).r_threshold; });

    m.def("compare_thm_vs_szsz", [](std::int64_t r, const std::string& delta) {
        return ordering_sign(compare_thm_vs_szsz(r, parse_rational(delta)));
    }, "1 if 1/(sqrt(r)+delta) is the larger bound, -1 if sqrt(49r+8)/(7r+1) is, 0 if equal.");
    m.def("szemberg_floor", &szemberg_floor);
    m.def("comparison_table_json", [](std::int64_t r_from, std::int64_t r_to, const std::string& digits) {
        return emit_table(comparison_table(r_from, r_to), Format::json, parse_digit_mode(digits));
    }, py::arg("r_from"), py::arg("r_to"), py::arg("digits") = "four");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status;
        {
            py::gil_scoped_release release;
            status = run_cli(args, out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
    }, "Runs the command-line tool in-process; returns (status, stdout, stderr).");
}
