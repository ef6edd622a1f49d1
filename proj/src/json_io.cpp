#include "subspace_forge/json_io.hpp"

#include <string>

#include "subspace_forge/errors.hpp"

namespace subspace_forge {

json field_json(const Field& f) {
    return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}, {"gamma", f.gamma()}};
}

json matrix_json(const Matrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}}; }

json subspace_json(const Subspace& s) {
    return {{"n", s.ambient()}, {"k", s.dim()}, {"basis", s.basis().row_vectors()}};
}

json family_json(const Family& f) {
    json members = json::array();
    for (const auto& s : f.members()) members.push_back(subspace_json(s));
    return {{"field", field_json(f.field())}, {"n", f.ambient()}, {"k", f.dim()}, {"members", std::move(members)}};
}

json report_json(const VerificationReport& r) {
    json out;
    out["is_partial_spread"] = r.spread.is_partial_spread;
    out["spread_witness"] = r.spread.witness ? json::array({r.spread.witness->first, r.spread.witness->second}) : json();
    out["L_aad"] = r.aad ? json(r.aad->L) : json();
    out["aad_witness"] = (r.aad && r.aad->witness) ? json{{"member", r.aad->witness->member}, {"u", r.aad->witness->u}}
                                                    : json();
    out["L_as"] = r.as ? json(r.as->L) : json();
    out["as_witness"] = (r.as && r.as->witness) ? subspace_json(*r.as->witness) : json();
    out["bound_thm1"] = r.bound_thm1 ? json(*r.bound_thm1) : json();
    out["bound_satisfied"] = r.bound_satisfied ? json(*r.bound_satisfied) : json();
    out["relations_ok"] = r.relations ? json(r.relations->ok) : json();
    if (r.relations && !r.relations->ok) out["relations_diagnostics"] = r.relations->diagnostics;
    return out;
}

json bounds_json(const BoundsTable& t) {
    return {{"thm1", t.thm1_upper},
            {"thm1_no_spread", t.thm1_no_spread},
            {"random_exponent",
             {{"num", t.random_lower_exponent.num},
              {"den", t.random_lower_exponent.den},
              {"value", t.random_lower_exponent.value()}}},
            {"random_M", t.random_sample_size},
            {"theorem3_L", t.theorem3_L ? json(*t.theorem3_L) : json()}};
}

json certificate_json(const SearchConfig& cfg, const SearchResult& r) {
    return {{"n", cfg.n},
            {"k", cfg.k},
            {"L", cfg.L},
            {"q", cfg.field.q()},
            {"mode", cfg.mode == SearchMode::exhaustive ? "exhaustive" : "greedy"},
            {"symmetry_break", cfg.symmetry_break},
            {"max", r.size},
            {"bound", r.bound},
            {"tight", r.size == r.bound},
            {"proven", r.optimality_proven},
            {"nodes", r.nodes},
            {"family", family_json(r.family)}};
}

json batch_layout_json(const BatchCode& code) {
    json info = json::array();
    for (std::uint64_t i = 0; i < code.K(); ++i) info.push_back(code.point(i));
    json parity = json::array();
    for (std::size_t m = 0; m < code.family().size(); ++m)
        for (std::uint64_t c = 0; c < code.cosets_per_member(); ++c)
            parity.push_back({{"position", code.parity_position(m, c)}, {"member", m}, {"rep", code.cosets(m).rep(c)}});
    return {{"K", code.K()}, {"N", code.N()}, {"information", std::move(info)}, {"parity", std::move(parity)}};
}

namespace {

template <typename T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

template <typename Fn>
auto translate(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

Field parse_field(const json& j) {
    const auto p = get<std::uint32_t>(j, "p");
    const auto m = get<std::uint32_t>(j, "m");
    const auto modulus = get<std::vector<std::uint32_t>>(j, "modulus");
    const auto gamma = get<Elem>(j, "gamma");
    return translate([&] { return Field::from_parts(p, m, modulus, gamma); });
}

Matrix parse_matrix(const json& j, const Field& f) {
    const auto rows = get<std::size_t>(j, "rows");
    const auto cols = get<std::size_t>(j, "cols");
    auto entries = get<std::vector<Elem>>(j, "entries");
    return translate([&] { return Matrix(f, rows, cols, std::move(entries)); });
}

Subspace parse_subspace(const json& j, const Field& f) {
    const auto n = get<std::size_t>(j, "n");
    const auto k = get<std::size_t>(j, "k");
    const auto basis = get<std::vector<Vec>>(j, "basis");
    Subspace s = translate([&] { return Subspace::from_generators(f, n, basis); });
    if (s.dim() != k) throw FormatError("basis has rank " + std::to_string(s.dim()) + " but k=" + std::to_string(k));
    return s;
}

Family parse_family(const json& j) {
    if (!j.is_object()) throw FormatError("family must be a JSON object");
    const Field f = parse_field(get<json>(j, "field"));
    const auto n = get<std::size_t>(j, "n");
    const auto k = get<std::size_t>(j, "k");
    const auto members = get<json>(j, "members");
    if (!members.is_array()) throw FormatError("\"members\" must be an array");
    std::vector<Subspace> subs;
    for (const auto& mj : members) subs.push_back(parse_subspace(mj, f));
    return translate([&] { return Family(f, n, k, std::move(subs)); });
}

std::uint64_t json_digest(const json& j) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : j.dump()) h = (h ^ c) * 1099511628211ull;
    return h;
}

}  // namespace subspace_forge
