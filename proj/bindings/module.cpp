#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "accube/json_io.hpp"

namespace py = pybind11;
using namespace accube;

namespace {

FiniteAbelianGroup parse(const std::string& lit) { return FiniteAbelianGroup::parse(lit); }

Cochain cochain_from_string(const std::string& text) {
    return cochain_from_json(json::parse(text));
}

std::string canonical_group(const std::string& lit) { return parse(lit).canonical().to_string(); }

std::string hom_group_py(const std::string& g, const std::string& b) {
    return hom_group(parse(g), parse(b)).to_string();
}

size_t basis_size(const std::string& g, int n) { return basis_cache(parse(g), n).size(); }

std::string q_homology_py(const std::string& g, int n) {
    return q_homology(parse(g), n).to_string();
}

std::string cohomology_py(const std::string& g, const std::string& b, int n) {
    return cohomology_group(parse(g), parse(b), n).to_string();
}

py::object cohomology_enum_py(const std::string& g, const std::string& b, int n) {
    auto h = cohomology_group_enum(parse(g), parse(b), n);
    if (!h) return py::none();
    return py::str(h->to_string());
}

std::vector<std::string> representatives_py(const std::string& g, const std::string& b) {
    std::vector<std::string> out;
    for (const auto& z : cocycle_representatives3(parse(g), parse(b)))
        out.push_back(cochain_to_json(z).dump());
    return out;
}

bool is_cocycle_py(const std::string& cochain_json) {
    return is_cocycle3(cochain_from_string(cochain_json)).ok;
}

bool antisymmetry_py(const std::string& cochain_json) {
    return check_middle_antisymmetry(cochain_from_string(cochain_json));
}

py::object witness_py(const std::string& cochain_json) {
    auto w = coboundary_witness(cochain_from_string(cochain_json));
    if (!w) return py::none();
    return py::str(cochain_to_json(*w).dump());
}

std::string build_py(const std::string& g, const std::string& b, const std::string& cochain_json) {
    Cochain z = cochain_from_string(cochain_json);
    return ac_to_json(build_special(parse(g), parse(b), z)).dump();
}

std::string verify_py(const std::string& instance_json) {
    json j = json::parse(instance_json);
    if (j.at("type").get<std::string>() == "ac") {
        ACInstance inst = ac_from_json(j);
        VerifyReport rep = verify_ac_axioms(inst);
        if (rep.ok()) {
            VerifyReport der = verify_derived_coherence(inst);
            rep.lines.insert(rep.lines.end(), der.lines.begin(), der.lines.end());
        }
        return rep.to_text();
    }
    return verify_smc_axioms(smc_from_json(j)).to_text();
}

std::string convert_py(const std::string& instance_json, const std::string& direction) {
    json j = json::parse(instance_json);
    if (direction == "ac-to-sm") return smc_to_json(smc_from_ac(ac_from_json(j))).dump();
    if (direction == "sm-to-ac") return ac_to_json(ac_from_smc(smc_from_json(j))).dump();
    throw ParseError("direction must be ac-to-sm or sm-to-ac");
}

size_t classify_count(const std::string& g, const std::string& b) {
    return classify_triples(parse(g), parse(b)).size();
}

bool equivalent_py(const std::string& g, const std::string& b, const std::string& z1,
                   const std::string& z2) {
    ClassifyingTriple t1{parse(g), parse(b), cochain_from_string(z1)};
    ClassifyingTriple t2{parse(g), parse(b), cochain_from_string(z2)};
    return equivalent(t1, t2).has_value();
}

std::string sinh_py(const std::string& g, const std::string& b, const std::string& z) {
    SinhPair p = sinh_pair(make_triple(parse(g), parse(b), cochain_from_string(z)));
    return sinh_to_json(p).dump();
}

std::vector<std::vector<long>> snf_py(const std::vector<std::vector<long>>& rows) {
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    IntMatrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw ParseError("ragged matrix");
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    SnfResult snf = smith_normal_form(m);
    std::vector<std::vector<long>> d(nr, std::vector<long>(nc, 0));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) d[i][j] = snf.d.at(i, j).get_si();
    return d;
}

} // namespace

PYBIND11_MODULE(_accube, m) {
    m.doc() = "cubical cohomology of finite abelian groups and AC-2-groups";
    m.def("canonical_group", &canonical_group, py::arg("group"),
          "Invariant-factor form of a group literal like 'Z4xZ2'.");
    m.def("hom_group", &hom_group_py, py::arg("source"), py::arg("target"));
    m.def("basis_size", &basis_size, py::arg("group"), py::arg("n"),
          "Number of normalized n-dimensional generators.");
    m.def("smith_normal_form", &snf_py, py::arg("matrix"),
          "Diagonal of the Smith decomposition, same shape as the input.");
    m.def("q_homology", &q_homology_py, py::arg("group"), py::arg("n"));
    m.def("cohomology_group", &cohomology_py, py::arg("base"), py::arg("coeff"), py::arg("n"));
    m.def("cohomology_group_enum", &cohomology_enum_py, py::arg("base"), py::arg("coeff"),
          py::arg("n"), "Enumeration-oracle value, or None when infeasible.");
    m.def("cocycle_representatives", &representatives_py, py::arg("base"), py::arg("coeff"),
          "JSON strings, one per degree-3 class.");
    m.def("is_cocycle", &is_cocycle_py, py::arg("cochain_json"));
    m.def("middle_antisymmetry", &antisymmetry_py, py::arg("cochain_json"));
    m.def("coboundary_witness", &witness_py, py::arg("cochain_json"));
    m.def("build_special", &build_py, py::arg("base"), py::arg("coeff"), py::arg("cochain_json"),
          "Special AC-2-group instance as JSON.");
    m.def("verify_instance", &verify_py, py::arg("instance_json"),
          "PASS/FAIL report lines for an AC or SMC instance.");
    m.def("convert_instance", &convert_py, py::arg("instance_json"), py::arg("direction"));
    m.def("classify_count", &classify_count, py::arg("base"), py::arg("coeff"));
    m.def("equivalent", &equivalent_py, py::arg("group"), py::arg("coeff"), py::arg("z1_json"),
          py::arg("z2_json"));
    m.def("sinh_pair", &sinh_py, py::arg("group"), py::arg("coeff"), py::arg("cochain_json"));
}
