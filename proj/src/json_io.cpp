#include "accube/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace accube {

json elem_to_json(const GroupElem& e) {
    return json(e);
}

GroupElem elem_from_json(const FiniteAbelianGroup& g, const json& j) {
    if (!j.is_array()) throw ParseError("element must be an array of residues");
    GroupElem e;
    for (const auto& v : j) e.push_back(v.get<long>());
    g.check_element(e);
    return e;
}

json cube_to_json(const FiniteAbelianGroup& a, const Cube& x) {
    json labels = json::array();
    for (uint32_t l : x.labels) labels.push_back(elem_to_json(a.element_at(l)));
    return json{{"dim", x.dim}, {"labels", labels}};
}

Cube cube_from_json(const FiniteAbelianGroup& a, const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<GroupElem> labels;
    for (const auto& l : j.at("labels")) labels.push_back(elem_from_json(a, l));
    if (labels.size() != size_t(1) << dim) throw ParseError("cube needs 2^dim labels");
    return cube_from_elements(a, labels);
}

json chain_to_json(const Chain& c) {
    json terms = json::array();
    for (const auto& [cube, coeff] : c.terms())
        terms.push_back(json{{"cube", cube_to_json(c.group(), cube)},
                             {"coeff", coeff.get_si()}});
    return terms;
}

Chain chain_from_json(const FiniteAbelianGroup& a, int dim, const json& j) {
    Chain c(a, dim);
    for (const auto& t : j) c.add(cube_from_json(a, t.at("cube")), t.at("coeff").get<long>());
    return c;
}

json cochain_to_json(const Cochain& z) {
    json values = json::array();
    const NormalizedBasis& basis = basis_cache(z.base, z.degree - 1);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (z.coeff.is_zero(z.values[i])) continue;
        json args = json::array();
        for (uint32_t l : basis.generators[i].labels)
            args.push_back(elem_to_json(z.base.element_at(l)));
        values.push_back(json{{"args", args}, {"value", elem_to_json(z.values[i])}});
    }
    return json{{"base", z.base.to_string()},
                {"coeff", z.coeff.to_string()},
                {"degree", z.degree},
                {"values", values}};
}

Cochain cochain_from_json(const json& j) {
    FiniteAbelianGroup base = FiniteAbelianGroup::parse(j.at("base").get<std::string>());
    FiniteAbelianGroup coeff = FiniteAbelianGroup::parse(j.at("coeff").get<std::string>());
    int degree = j.at("degree").get<int>();
    if (degree < 1 || degree > 4) throw ParseError("cochain degree out of range");
    Cochain z = zero_cochain(base, coeff, degree);
    const NormalizedBasis& basis = basis_cache(base, degree - 1);
    for (const auto& entry : j.at("values")) {
        std::vector<GroupElem> labels;
        for (const auto& l : entry.at("args")) labels.push_back(elem_from_json(base, l));
        if (labels.size() != size_t(1) << (degree - 1))
            throw ParseError("argument tuple has the wrong arity");
        Cube cube = cube_from_elements(base, labels);
        GroupElem value = elem_from_json(coeff, entry.at("value"));
        size_t pos = basis.find(cube);
        if (pos == NormalizedBasis::npos) {
            if (!coeff.is_zero(value))
                throw ParseError("nonzero value on a normalized-zero argument tuple");
            continue;
        }
        z.values[pos] = value;
    }
    return z;
}

namespace {

json core_to_json(const InstanceCore& c) {
    json mor = json::array();
    for (const auto& m : c.mor) mor.push_back(json{{"src", m.src}, {"dst", m.dst}});
    json compose = json::array();
    for (int g = 0; g < c.num_mor(); ++g) {
        json row = json::array();
        for (int f = 0; f < c.num_mor(); ++f) {
            if (c.compose_t[g][f] < 0)
                row.push_back(nullptr);
            else
                row.push_back(c.compose_t[g][f]);
        }
        compose.push_back(row);
    }
    return json{{"objects", c.num_objects}, {"unit", c.unit_object},
                {"morphisms", mor},         {"identity", c.identity},
                {"compose", compose},       {"sum_objects", c.sum_obj},
                {"sum_morphisms", c.sum_mor}};
}

InstanceCore core_from_json(const json& j) {
    InstanceCore c;
    c.num_objects = j.at("objects").get<int>();
    c.unit_object = j.at("unit").get<int>();
    if (c.num_objects < 1 || c.num_objects > 64)
        throw ParseError("instance must have between 1 and 64 objects");
    if (j.at("morphisms").size() > 4096)
        throw ParseError("instance exceeds the 4096-morphism cap");
    for (const auto& m : j.at("morphisms"))
        c.mor.push_back(Morphism{m.at("src").get<int>(), m.at("dst").get<int>()});
    c.identity = j.at("identity").get<std::vector<int>>();
    for (const auto& row : j.at("compose")) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.is_null() ? -1 : v.get<int>());
        c.compose_t.push_back(std::move(r));
    }
    c.sum_obj = j.at("sum_objects").get<std::vector<std::vector<int>>>();
    c.sum_mor = j.at("sum_morphisms").get<std::vector<std::vector<int>>>();
    // shape checks so later table lookups cannot run out of bounds
    size_t n = c.num_objects, nm = c.mor.size();
    if (c.identity.size() != n || c.sum_obj.size() != n || c.compose_t.size() != nm ||
        c.sum_mor.size() != nm)
        throw ParseError("instance tables have inconsistent sizes");
    for (const auto& m : c.mor)
        if (m.src < 0 || m.src >= static_cast<int>(n) || m.dst < 0 || m.dst >= static_cast<int>(n))
            throw ParseError("morphism endpoint out of range");
    auto in_mor = [&](int v) { return v >= 0 && v < static_cast<int>(nm); };
    for (int v : c.identity)
        if (!in_mor(v)) throw ParseError("identity table entry out of range");
    for (const auto& row : c.compose_t) {
        if (row.size() != nm) throw ParseError("compose table is not square");
        for (int v : row)
            if (v != -1 && !in_mor(v)) throw ParseError("compose entry out of range");
    }
    for (const auto& row : c.sum_obj) {
        if (row.size() != n) throw ParseError("object sum table is not square");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n)) throw ParseError("object sum out of range");
    }
    for (const auto& row : c.sum_mor) {
        if (row.size() != nm) throw ParseError("morphism sum table is not square");
        for (int v : row)
            if (!in_mor(v)) throw ParseError("morphism sum out of range");
    }
    if (c.unit_object < 0 || c.unit_object >= static_cast<int>(n))
        throw ParseError("unit object out of range");
    return c;
}

std::vector<int> table_from_json(const json& j, size_t expect, int num_mor,
                                 const char* what) {
    std::vector<int> t = j.get<std::vector<int>>();
    if (t.size() != expect) throw ParseError(std::string(what) + " table has the wrong size");
    for (int v : t)
        if (v < 0 || v >= num_mor) throw ParseError(std::string(what) + " entry out of range");
    return t;
}

} // namespace

json ac_to_json(const ACInstance& x) {
    json j = core_to_json(x.core);
    j["type"] = "ac";
    j["b_table"] = x.b_table;
    j["l_table"] = x.l_table;
    j["r_table"] = x.r_table;
    return j;
}

ACInstance ac_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "ac") throw ParseError("not an AC instance file");
    ACInstance x;
    x.core = core_from_json(j);
    size_t n = x.core.num_objects;
    x.b_table = table_from_json(j.at("b_table"), n * n * n * n, x.core.num_mor(), "b");
    x.l_table = table_from_json(j.at("l_table"), n, x.core.num_mor(), "l");
    x.r_table = table_from_json(j.at("r_table"), n, x.core.num_mor(), "r");
    return x;
}

json smc_to_json(const SMCInstance& s) {
    json j = core_to_json(s.core);
    j["type"] = "sm";
    j["a_table"] = s.a_table;
    j["c_table"] = s.c_table;
    j["l_table"] = s.l_table;
    j["r_table"] = s.r_table;
    return j;
}

SMCInstance smc_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "sm")
        throw ParseError("not a symmetric monoidal instance file");
    SMCInstance s;
    s.core = core_from_json(j);
    size_t n = s.core.num_objects;
    s.a_table = table_from_json(j.at("a_table"), n * n * n, s.core.num_mor(), "a");
    s.c_table = table_from_json(j.at("c_table"), n * n, s.core.num_mor(), "c");
    s.l_table = table_from_json(j.at("l_table"), n, s.core.num_mor(), "l");
    s.r_table = table_from_json(j.at("r_table"), n, s.core.num_mor(), "r");
    return s;
}

json triple_to_json(const ClassifyingTriple& t, const std::string& cocycle_file) {
    return json{{"group", t.group.to_string()},
                {"coeff", t.coeff.to_string()},
                {"cocycle_file", cocycle_file}};
}

ClassifyingTriple triple_from_json(const json& j, const std::string& base_dir) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(j.at("group").get<std::string>());
    FiniteAbelianGroup a = FiniteAbelianGroup::parse(j.at("coeff").get<std::string>());
    std::filesystem::path p = j.at("cocycle_file").get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    Cochain z = cochain_from_json(read_json_file(p.string()));
    if (!(z.base == g) || !(z.coeff == a) || z.degree != 3)
        throw ParseError("cocycle file does not match the triple header");
    return make_triple(g, a, z);
}

json sinh_to_json(const SinhPair& p) {
    size_t n = p.group.order_index();
    json h = json::array(), c = json::array();
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!p.coeff.is_zero(p.c_at(x, y)))
                c.push_back(json{{"args", json::array({elem_to_json(p.group.element_at(x)),
                                                       elem_to_json(p.group.element_at(y))})},
                                 {"value", elem_to_json(p.c_at(x, y))}});
            for (size_t z = 0; z < n; ++z)
                if (!p.coeff.is_zero(p.h_at(x, y, z)))
                    h.push_back(
                        json{{"args", json::array({elem_to_json(p.group.element_at(x)),
                                                   elem_to_json(p.group.element_at(y)),
                                                   elem_to_json(p.group.element_at(z))})},
                             {"value", elem_to_json(p.h_at(x, y, z))}});
        }
    return json{{"group", p.group.to_string()},
                {"coeff", p.coeff.to_string()},
                {"h", h},
                {"c", c}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(1) << '\n';
}

} // namespace accube
