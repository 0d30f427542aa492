#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "pnorm/estimator.hpp"
#include "pnorm/exact.hpp"
#include "pnorm/interp.hpp"
#include "pnorm/io.hpp"
#include "pnorm/structured.hpp"

namespace py = pybind11;
using namespace pnorm;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const ComplexArray& a) {
    if (a.ndim() != 2) throw dimension_error("expected a 2-d array");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return CMatrix(rows, cols, std::vector<complex>(a.data(), a.data() + rows * cols));
}

CVector to_vector(const ComplexArray& a) {
    if (a.ndim() != 1) throw dimension_error("expected a 1-d array");
    return CVector(std::vector<complex>(a.data(), a.data() + a.size()));
}

py::array_t<complex> from_matrix(const CMatrix& m) {
    py::array_t<complex> out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

py::array_t<complex> from_vector(const CVector& v) {
    py::array_t<complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
    std::copy(v.entries().begin(), v.entries().end(), out.mutable_data());
    return out;
}

// p from Python: a number (math.inf allowed) or a string such as "inf".
Exponent to_exponent(const py::object& p) {
    if (py::isinstance<py::str>(p)) return Exponent::parse(p.cast<std::string>());
    const double v = p.cast<double>();
    return std::isinf(v) && v > 0 ? Exponent::infinity() : Exponent::finite(v);
}

double from_exponent(Exponent p) { return p.is_infinite() ? HUGE_VAL : p.value(); }

std::vector<complex> to_coeffs(const ComplexArray& a) {
    if (a.ndim() != 1) throw dimension_error("expected a 1-d array");
    return std::vector<complex>(a.data(), a.data() + a.size());
}

py::dict bound_dict(const interp::NormBound& b) {
    py::dict d;
    d["p"] = from_exponent(b.p);
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["lower_provenance"] = std::string(interp::to_string(b.lower_provenance));
    d["upper_provenance"] = std::string(interp::to_string(b.upper_provenance));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Operator p-norm bounds, exact structured norms and log-affine classification";

    py::register_exception<io::io_error>(m, "MatrixIOError", PyExc_OSError);
    py::register_exception<io::parse_error>(m, "MatrixParseError", PyExc_ValueError);
    py::register_exception<estimator::certificate_rejected>(m, "CertificateRejected", PyExc_ValueError);

    m.def("dual_exponent", [](const py::object& p) { return from_exponent(dual_exponent(to_exponent(p))); }, py::arg("p"));
    m.def("vec_norm", [](const ComplexArray& x, const py::object& p) { return vec_norm(to_vector(x), to_exponent(p)); },
          py::arg("x"), py::arg("p"));

    m.def("norm_one", [](const ComplexArray& a) { return exact::norm_one(to_matrix(a)).value; }, py::arg("a"));
    m.def("norm_inf", [](const ComplexArray& a) { return exact::norm_inf(to_matrix(a)).value; }, py::arg("a"));
    m.def("norm_two", [](const ComplexArray& a) { return exact::norm_two(to_matrix(a)); }, py::arg("a"));
    m.def(
        "anchor_norms",
        [](const ComplexArray& a) {
            const auto r = exact::anchor_norms(to_matrix(a));
            return py::make_tuple(r.n1, r.n2, r.ninf);
        },
        py::arg("a"), "(n1, n2, ninf)");
    m.def(
        "is_p_isometry",
        [](const ComplexArray& a, const py::object& p, int trials, std::uint64_t seed) {
            return exact::is_p_isometry(to_matrix(a), to_exponent(p), trials, seed);
        },
        py::arg("a"), py::arg("p"), py::arg("trials") = 8, py::arg("seed") = 0);

    m.def(
        "upper_bound",
        [](const ComplexArray& a, const py::object& p) {
            const auto u = interp::upper_bound(to_matrix(a), to_exponent(p));
            return py::make_tuple(u.value, std::string(interp::to_string(u.provenance)));
        },
        py::arg("a"), py::arg("p"));
    m.def("la_envelope", [](double n1, double ninf, const py::object& p) {
        return interp::la_envelope({n1, 0.0, ninf}, to_exponent(p));
    }, py::arg("n1"), py::arg("ninf"), py::arg("p"));
    m.def(
        "is_log_affine",
        [](const ComplexArray& a, double tol) {
            const auto r = interp::is_log_affine(to_matrix(a), tol);
            py::dict d;
            d["is_la"] = r.is_la;
            d["degenerate"] = r.degenerate;
            d["n1"] = r.anchors.n1;
            d["n2"] = r.anchors.n2;
            d["ninf"] = r.anchors.ninf;
            d["ratio"] = r.ratio;
            return d;
        },
        py::arg("a"), py::arg("tol") = 1e-9);
    m.def("default_grid", [] {
        std::vector<double> out;
        for (const auto& p : interp::default_grid()) out.push_back(from_exponent(p));
        return out;
    });
    m.def(
        "profile",
        [](const ComplexArray& a, const std::optional<std::vector<py::object>>& grid, std::uint64_t seed) {
            std::vector<Exponent> g;
            if (grid)
                for (const auto& p : *grid) g.push_back(to_exponent(p));
            else
                g = interp::default_grid();
            const auto prof = interp::profile(to_matrix(a), g, seed);
            py::list bounds;
            for (const auto& b : prof.bounds) bounds.append(bound_dict(b));
            py::dict d;
            d["bounds"] = bounds;
            d["envelope"] = prof.envelope;
            d["log_convex"] = prof.log_convex;
            d["unimodal"] = prof.unimodal;
            d["p0"] = from_exponent(prof.grid[prof.p0_index]);
            d["p0_interval"] = py::make_tuple(from_exponent(prof.p0_low), from_exponent(prof.p0_high));
            return d;
        },
        py::arg("a"), py::arg("grid") = py::none(), py::arg("seed") = 0);

    m.def(
        "ascent_lower_bound",
        [](const ComplexArray& a, const py::object& p, int restarts, std::uint64_t seed) {
            const auto r = estimator::ascent_lower_bound(to_matrix(a), to_exponent(p), restarts, seed);
            return py::make_tuple(r.value, from_vector(r.maximizer));
        },
        py::arg("a"), py::arg("p"), py::arg("restarts") = 8, py::arg("seed") = 0, "(value, maximizer)");
    m.def(
        "oracle_norm",
        [](const ComplexArray& a, const py::object& p, int resolution) {
            return estimator::oracle_norm(to_matrix(a), to_exponent(p), resolution).value;
        },
        py::arg("a"), py::arg("p"), py::arg("resolution") = 720);
    m.def(
        "certified_bound",
        [](const ComplexArray& a, const py::object& p, std::uint64_t seed) {
            return bound_dict(estimator::certified_bound(to_matrix(a), to_exponent(p), seed));
        },
        py::arg("a"), py::arg("p"), py::arg("seed") = 0);

    m.def("circulant", [](const ComplexArray& c) { return from_matrix(structured::densify(structured::Circulant(to_coeffs(c)))); },
          py::arg("coeffs"));
    m.def("hankel", [](const ComplexArray& c) { return from_matrix(structured::densify(structured::HankelMod(to_coeffs(c)))); },
          py::arg("coeffs"));
    m.def(
        "tensor",
        [](const ComplexArray& alpha, const ComplexArray& beta, const ComplexArray& core) {
            return from_matrix(structured::densify(structured::TensorRankOne(to_vector(alpha), to_vector(beta), to_matrix(core))));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("core"));
    m.def(
        "direct_sum",
        [](const std::vector<ComplexArray>& parts) {
            std::vector<CMatrix> ms;
            for (const auto& p : parts) ms.push_back(to_matrix(p));
            return from_matrix(structured::direct_sum(ms));
        },
        py::arg("parts"));
    m.def("doubly_balanced_norm", [](const ComplexArray& a) { return structured::doubly_balanced_norm(to_matrix(a)); },
          py::arg("a"));
    m.def("circulant_two_norm", [](const ComplexArray& c) { return structured::circulant_two_norm(structured::Circulant(to_coeffs(c))); },
          py::arg("coeffs"));
    m.def(
        "classify_circulant_la",
        [](const ComplexArray& c) {
            const auto w = structured::classify_circulant_la(structured::Circulant(to_coeffs(c)));
            py::dict d;
            d["is_la"] = w.is_la;
            d["degenerate"] = w.degenerate;
            d["beta"] = w.beta ? py::cast(*w.beta) : py::none();
            d["omega"] = w.omega ? py::cast(*w.omega) : py::none();
            d["norm"] = w.norm ? py::cast(*w.norm) : py::none();
            return d;
        },
        py::arg("coeffs"));

    m.def("read_matrix", [](const std::string& path) { return from_matrix(io::read_matrix(path)); }, py::arg("path"));
    m.def("write_matrix", [](const std::string& path, const ComplexArray& a) { io::write_matrix(path, to_matrix(a)); },
          py::arg("path"), py::arg("a"));
}
