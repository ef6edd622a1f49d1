#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subspace_forge/batch.hpp"
#include "subspace_forge/bounds.hpp"
#include "subspace_forge/constructions.hpp"
#include "subspace_forge/errors.hpp"
#include "subspace_forge/json_io.hpp"
#include "subspace_forge/search.hpp"

namespace py = pybind11;
namespace sf = subspace_forge;

namespace {

py::object to_py(const sf::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

sf::json from_py(const py::object& o) {
    return sf::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

sf::VerifyOptions options(unsigned threads) {
    sf::VerifyOptions o;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-field subspace families: constructions, exact verifiers, bounds, search and batch codes";

    py::register_exception<sf::ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<sf::FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<sf::GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<sf::Field>(m, "Field")
        .def(py::init([](std::uint64_t q) { return sf::Field::of_order(q); }), py::arg("q"))
        .def_property_readonly("p", &sf::Field::p)
        .def_property_readonly("m", &sf::Field::m)
        .def_property_readonly("q", &sf::Field::q)
        .def_property_readonly("gamma", &sf::Field::gamma)
        .def_property_readonly("modulus", &sf::Field::modulus)
        .def("add", &sf::Field::add)
        .def("mul", &sf::Field::mul)
        .def("inv", &sf::Field::inv)
        .def("pow", &sf::Field::pow)
        .def("to_dict", [](const sf::Field& f) { return to_py(sf::field_json(f)); })
        .def("__repr__", [](const sf::Field& f) { return "Field(q=" + std::to_string(f.q()) + ")"; });

    py::class_<sf::Family>(m, "Family")
        .def(py::init([](const py::object& d) { return sf::parse_family(from_py(d)); }), py::arg("data"),
             "Build a family from its JSON dict form.")
        .def_property_readonly("n", &sf::Family::ambient)
        .def_property_readonly("k", &sf::Family::dim)
        .def_property_readonly("q", [](const sf::Family& f) { return f.field().q(); })
        .def("__len__", &sf::Family::size)
        .def("to_dict", [](const sf::Family& f) { return to_py(sf::family_json(f)); });

    m.def("build_rs_family", [](std::size_t n, std::size_t k, std::uint64_t q) {
        return sf::build_rs_family(n, k, sf::Field::of_order(q));
    }, py::arg("n"), py::arg("k"), py::arg("q"));

    m.def("build_code_based_family", [](std::uint64_t q, std::vector<std::vector<sf::Elem>> rows, std::size_t k) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        return sf::build_code_based_family(sf::Matrix::from_rows(sf::Field::of_order(q), cols, rows), k);
    }, py::arg("q"), py::arg("rows"), py::arg("k"));

    m.def("vandermonde_family", [](std::uint64_t q, std::size_t rows) {
        const auto f = sf::Field::of_order(q);
        const auto nodes = f.elements();
        return sf::build_code_based_family(sf::vandermonde(f, rows, nodes), 1);
    }, py::arg("q"), py::arg("rows") = 3);

    m.def("build_random_family", [](std::size_t n, std::size_t k, std::uint64_t L, std::uint64_t q,
                                    std::uint64_t seed, std::size_t max_rounds, unsigned threads) {
        sf::RandomBuildOptions o;
        o.n = n;
        o.k = k;
        o.L = L;
        o.seed = seed;
        o.max_rounds = max_rounds;
        o.verify = options(threads);
        auto r = sf::build_random_family(sf::Field::of_order(q), o);
        py::dict diag;
        diag["sampled"] = r.sampled;
        diag["removed_for_spread"] = r.removed_for_spread;
        diag["removed_for_as"] = r.removed_for_as;
        diag["rounds"] = r.rounds;
        diag["converged"] = r.converged;
        diag["L_as"] = r.final_L_as;
        return py::make_tuple(std::move(r.family), diag);
    }, py::arg("n"), py::arg("k"), py::arg("L"), py::arg("q"), py::arg("seed") = 0, py::arg("max_rounds") = 10'000,
       py::arg("threads") = 0);

    m.def("is_partial_spread", [](const sf::Family& f) { return sf::check_partial_spread(f).is_partial_spread; });

    m.def("compute_L_aad", [](const sf::Family& f, unsigned threads) {
        py::gil_scoped_release release;
        return sf::compute_L_aad(f, options(threads)).L;
    }, py::arg("family"), py::arg("threads") = 0);

    m.def("compute_L_as", [](const sf::Family& f, unsigned threads) {
        py::gil_scoped_release release;
        return sf::compute_L_as(f, options(threads)).L;
    }, py::arg("family"), py::arg("threads") = 0);

    m.def("verify", [](const sf::Family& f, unsigned threads) {
        sf::VerificationReport r;
        {
            py::gil_scoped_release release;
            r = sf::verify_family(f, {}, options(threads));
        }
        return to_py(sf::report_json(r));
    }, py::arg("family"), py::arg("threads") = 0, "Full verification report as a dict.");

    m.def("bounds", [](std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q) {
        return to_py(sf::bounds_json(sf::bounds_table(n, k, L, q)));
    }, py::arg("n"), py::arg("k"), py::arg("L"), py::arg("q"));

    m.def("search", [](std::size_t n, std::size_t k, std::uint64_t L, std::uint64_t q, const std::string& mode,
                       std::uint64_t seed, std::uint64_t budget, bool symmetry_break) {
        if (mode != "greedy" && mode != "exhaustive") throw sf::ParameterError("mode must be exhaustive or greedy");
        sf::SearchConfig cfg{sf::Field::of_order(q), n, k, L,
                             mode == "greedy" ? sf::SearchMode::greedy : sf::SearchMode::exhaustive, budget,
                             symmetry_break};
        sf::SearchResult r{0, sf::Family(cfg.field, n, k, {}), false, 0, sf::bound_theorem1(n, k, L, q)};
        if (cfg.mode == sf::SearchMode::exhaustive) {
            r = sf::exhaustive_max_family(cfg);
        } else {
            r.family = sf::greedy_max_family(cfg, seed);
            r.size = r.family.size();
        }
        return to_py(sf::certificate_json(cfg, r));
    }, py::arg("n"), py::arg("k"), py::arg("L"), py::arg("q"), py::arg("mode") = "exhaustive", py::arg("seed") = 0,
       py::arg("budget") = 10'000'000, py::arg("symmetry_break") = true);

    m.def("batch", [](const sf::Family& f, std::uint64_t s, const std::string& mode, std::uint64_t trials,
                      std::uint64_t seed) {
        if (mode != "sampled" && mode != "exhaustive") throw sf::ParameterError("mode must be exhaustive or sampled");
        const sf::BatchCode code(f);
        const std::uint64_t size = s != 0 ? s : code.s();
        const auto v = sf::verify_batch(code, size, mode == "sampled" ? sf::BatchMode::sampled : sf::BatchMode::exhaustive,
                                        trials, seed);
        py::dict out;
        out["N"] = code.N();
        out["K"] = code.K();
        out["L"] = code.L();
        out["s"] = size;
        out["verified"] = v.ok;
        out["checked"] = v.checked;
        out["counterexample"] = v.counterexample ? py::cast(*v.counterexample) : py::none();
        return out;
    }, py::arg("family"), py::arg("s") = 0, py::arg("mode") = "exhaustive", py::arg("trials") = 1000,
       py::arg("seed") = 0);

    m.def("encode", [](const sf::Family& f, const std::vector<std::uint8_t>& x) {
        return sf::encode(sf::BatchCode(f), x);
    }, py::arg("family"), py::arg("x"));
}
