// accube: cubical (co)homology of finite abelian groups and the
// AC-2-groups classified by cubical 3-cocycles.
//
// Exit codes: 0 pass, 1 fail/inequivalent, 2 usage or malformed input,
// 3 enumeration cap exceeded.

#include <CLI11.hpp>

#include "accube/json_io.hpp"

#include <filesystem>
#include <iostream>

using namespace accube;

namespace {

struct RunConfig {
    size_t enum_cap = kDefaultEnumCap;
    int degree_cap = 3;
    std::string format = "text";
    uint64_t seed = 12345; // reserved for randomized sweeps
    std::string out;
};

std::string elem_str(const GroupElem& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + "]";
}

std::string tuple_str(const std::vector<GroupElem>& es) {
    std::string s = "(";
    for (size_t i = 0; i < es.size(); ++i) {
        if (i) s += ',';
        s += elem_str(es[i]);
    }
    return s + ")";
}

void print_cochain_text(const Cochain& z, const std::string& indent) {
    const NormalizedBasis& basis = basis_cache(z.base, z.degree - 1);
    bool any = false;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (z.coeff.is_zero(z.values[i])) continue;
        any = true;
        std::vector<GroupElem> args;
        for (uint32_t l : basis.generators[i].labels) args.push_back(z.base.element_at(l));
        std::cout << indent << "z" << tuple_str(args) << " = " << elem_str(z.values[i]) << "\n";
    }
    if (!any) std::cout << indent << "zero\n";
}

void emit(const RunConfig& cfg, const json& payload) {
    if (cfg.format == "json") std::cout << payload.dump(1) << "\n";
}

int cmd_homology(const RunConfig& cfg, const std::string& glit, int n) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(glit);
    json basis_sizes = json::array();
    json matrices = json::array();
    json groups = json::array();
    std::vector<std::string> hs;
    std::vector<size_t> sizes;
    for (int d = 0; d <= n + 1; ++d) sizes.push_back(basis_cache(g, d, cfg.enum_cap).size());
    for (int d = 0; d <= n; ++d) hs.push_back(q_homology(g, d, cfg.enum_cap).to_string());
    if (cfg.format == "text") {
        std::cout << "group: " << g.to_string() << "\n";
        std::printf("%-6s %12s %16s %-12s\n", "dim", "basis", "delta", "homology");
        for (int d = 0; d <= n + 1; ++d) {
            std::string delta =
                d == 0 ? "-" : std::to_string(sizes[d - 1]) + "x" + std::to_string(sizes[d]);
            std::string h = d <= n ? hs[d] : "-";
            std::printf("%-6d %12zu %16s %-12s\n", d, sizes[d], delta.c_str(), h.c_str());
        }
    } else {
        for (size_t s : sizes) basis_sizes.push_back(s);
        for (int d = 1; d <= n + 1; ++d)
            matrices.push_back(json::array({sizes[d - 1], sizes[d]}));
        for (const auto& h : hs) groups.push_back(h);
        emit(cfg, json{{"group", g.to_string()},
                       {"basis_sizes", basis_sizes},
                       {"matrix_shapes", matrices},
                       {"homology", groups}});
    }
    return 0;
}

int cmd_cohomology(const RunConfig& cfg, const std::string& base, const std::string& coeff,
                   int n) {
    if (n > cfg.degree_cap) throw CapExceededError("degree exceeds the configured cap");
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(base);
    FiniteAbelianGroup b = FiniteAbelianGroup::parse(coeff);
    FiniteAbelianGroup h = cohomology_group(g, b, n, cfg.enum_cap);
    if (cfg.format == "text")
        std::cout << "H^" << n << "(" << g.to_string() << ", " << b.to_string()
                  << ") = " << h.to_string() << "\n";
    else
        emit(cfg, json{{"base", g.to_string()},
                       {"coeff", b.to_string()},
                       {"degree", n},
                       {"group", h.to_string()}});
    return 0;
}

int cmd_cocycles(const RunConfig& cfg, const std::string& base, const std::string& coeff) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(base);
    FiniteAbelianGroup b = FiniteAbelianGroup::parse(coeff);
    auto reps = cocycle_representatives3(g, b, cfg.enum_cap);
    json out = json::array();
    for (const auto& z : reps) out.push_back(cochain_to_json(z));
    if (!cfg.out.empty()) write_json_file(cfg.out, out);
    if (cfg.format == "text") {
        std::cout << "classes: " << reps.size() << "\n";
        for (size_t i = 0; i < reps.size(); ++i) {
            std::cout << "representative " << i << ":\n";
            print_cochain_text(reps[i], "  ");
        }
    } else {
        emit(cfg, json{{"base", g.to_string()},
                       {"coeff", b.to_string()},
                       {"count", reps.size()},
                       {"representatives", out}});
    }
    return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& file) {
    Cochain z = cochain_from_json(read_json_file(file));
    if (z.degree != 3) throw ParseError("check expects a degree-3 cochain file");
    CocycleReport rep = is_cocycle3(z, cfg.enum_cap);
    if (!rep.ok) {
        if (cfg.format == "text")
            std::cout << "COCYCLE: no (" << rep.violation->condition << " violated at "
                      << tuple_str(rep.violation->tuple) << ")\n";
        else
            emit(cfg, json{{"cocycle", false},
                           {"violation", rep.violation->condition},
                           {"tuple", tuple_str(rep.violation->tuple)}});
        return 1;
    }
    bool anti = check_middle_antisymmetry(z);
    auto witness = coboundary_witness(z, cfg.enum_cap);
    bool emitted = false;
    if (witness && !cfg.out.empty()) {
        write_json_file(cfg.out, cochain_to_json(*witness));
        emitted = true;
    }
    if (cfg.format == "text") {
        std::cout << "COCYCLE: yes; ANTISYMMETRY: " << (anti ? "yes" : "no")
                  << "; COBOUNDARY: " << (witness ? "yes" : "no")
                  << (emitted ? " (witness emitted)" : "") << "\n";
    } else {
        json j{{"cocycle", true}, {"antisymmetry", anti}, {"coboundary", witness.has_value()}};
        if (witness) j["witness"] = cochain_to_json(*witness);
        emit(cfg, j);
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& base, const std::string& coeff) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(base);
    FiniteAbelianGroup b = FiniteAbelianGroup::parse(coeff);
    auto classes = classify_triples(g, b, cfg.enum_cap);
    json out = json::array();
    for (const auto& t : classes) out.push_back(cochain_to_json(t.cocycle));
    if (!cfg.out.empty()) write_json_file(cfg.out, out);
    if (cfg.format == "text") {
        std::cout << "classes: " << classes.size() << "\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            std::cout << "class " << i << ":\n";
            print_cochain_text(classes[i].cocycle, "  ");
        }
    } else {
        emit(cfg, json{{"base", g.to_string()},
                       {"coeff", b.to_string()},
                       {"count", classes.size()},
                       {"classes", out}});
    }
    return 0;
}

int cmd_build(const RunConfig& cfg, const std::string& base, const std::string& coeff,
              const std::string& zfile) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(base);
    FiniteAbelianGroup b = FiniteAbelianGroup::parse(coeff);
    Cochain z = cochain_from_json(read_json_file(zfile));
    if (!(z.base == g) || !(z.coeff == b)) throw ParseError("cocycle file does not match groups");
    CocycleReport rep = is_cocycle3(z, cfg.enum_cap);
    if (!rep.ok) {
        std::cerr << "not a cocycle (" << rep.violation->condition << " violated at "
                  << tuple_str(rep.violation->tuple) << ")\n";
        return 1;
    }
    ACInstance inst = build_special(g, b, z, false);
    json j = ac_to_json(inst);
    if (!cfg.out.empty())
        write_json_file(cfg.out, j);
    else
        std::cout << j.dump(1) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& file) {
    json j = read_json_file(file);
    std::string type = j.at("type").get<std::string>();
    VerifyReport rep;
    if (type == "ac") {
        ACInstance inst = ac_from_json(j);
        rep = verify_ac_axioms(inst);
        if (rep.ok()) {
            VerifyReport der = verify_derived_coherence(inst);
            rep.lines.insert(rep.lines.end(), der.lines.begin(), der.lines.end());
        }
    } else if (type == "sm") {
        rep = verify_smc_axioms(smc_from_json(j));
    } else {
        throw ParseError("unknown instance type: " + type);
    }
    if (cfg.format == "text") {
        std::cout << rep.to_text();
    } else {
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back(json{{"axiom", l.axiom}, {"pass", l.pass}, {"at", l.where}});
        emit(cfg, json{{"ok", rep.ok()}, {"checks", lines}});
    }
    return rep.ok() ? 0 : 1;
}

int cmd_convert(const RunConfig& cfg, const std::string& file, const std::string& direction) {
    json j = read_json_file(file);
    json out;
    if (direction == "ac-to-sm") {
        out = smc_to_json(smc_from_ac(ac_from_json(j)));
    } else if (direction == "sm-to-ac") {
        out = ac_to_json(ac_from_smc(smc_from_json(j)));
    } else {
        throw CLI::ValidationError("direction must be ac-to-sm or sm-to-ac");
    }
    if (!cfg.out.empty())
        write_json_file(cfg.out, out);
    else
        std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_sinh(const RunConfig& cfg, const std::string& file) {
    std::string dir = std::filesystem::path(file).parent_path().string();
    ClassifyingTriple t = triple_from_json(read_json_file(file), dir);
    SinhPair p = sinh_pair(t);
    json j = sinh_to_json(p);
    if (!cfg.out.empty()) write_json_file(cfg.out, j);
    if (cfg.format == "text") {
        size_t n = p.group.order_index();
        std::cout << "group: " << p.group.to_string() << "\ncoeff: " << p.coeff.to_string()
                  << "\n";
        bool any = false;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z)
                    if (!p.coeff.is_zero(p.h_at(x, y, z))) {
                        any = true;
                        std::cout << "h(" << elem_str(p.group.element_at(x)) << ","
                                  << elem_str(p.group.element_at(y)) << ","
                                  << elem_str(p.group.element_at(z))
                                  << ") = " << elem_str(p.h_at(x, y, z)) << "\n";
                    }
        if (!any) std::cout << "h: zero\n";
        any = false;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                if (!p.coeff.is_zero(p.c_at(x, y))) {
                    any = true;
                    std::cout << "c(" << elem_str(p.group.element_at(x)) << ","
                              << elem_str(p.group.element_at(y))
                              << ") = " << elem_str(p.c_at(x, y)) << "\n";
                }
        if (!any) std::cout << "c: zero\n";
    } else {
        emit(cfg, j);
    }
    return 0;
}

int cmd_equiv(const RunConfig& cfg, const std::string& f1, const std::string& f2) {
    auto load = [](const std::string& f) {
        std::string dir = std::filesystem::path(f).parent_path().string();
        return triple_from_json(read_json_file(f), dir);
    };
    ClassifyingTriple t1 = load(f1), t2 = load(f2);
    auto w = equivalent(t1, t2, cfg.enum_cap);
    if (!w) {
        if (cfg.format == "text")
            std::cout << "INEQUIVALENT\n";
        else
            emit(cfg, json{{"equivalent", false}});
        return 1;
    }
    if (cfg.format == "text") {
        std::cout << "EQUIVALENT\n";
        std::cout << "base iso matrix: " << w->base_iso.matrix().to_string() << "\n";
        std::cout << "coeff iso matrix: " << w->coeff_iso.matrix().to_string() << "\n";
        std::cout << "twist cochain:\n";
        print_cochain_text(w->twist, "  ");
    } else {
        json bm = json::array(), cm = json::array();
        for (size_t i = 0; i < w->base_iso.matrix().rows(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < w->base_iso.matrix().cols(); ++k)
                row.push_back(w->base_iso.matrix().at(i, k).get_si());
            bm.push_back(row);
        }
        for (size_t i = 0; i < w->coeff_iso.matrix().rows(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < w->coeff_iso.matrix().cols(); ++k)
                row.push_back(w->coeff_iso.matrix().at(i, k).get_si());
            cm.push_back(row);
        }
        emit(cfg, json{{"equivalent", true},
                       {"base_iso", bm},
                       {"coeff_iso", cm},
                       {"twist", cochain_to_json(w->twist)}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubical cohomology of finite abelian groups and AC-2-groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap", cfg.enum_cap, "enumeration cap")->capture_default_str();
    app.add_option("--degree", cfg.degree_cap, "largest cohomology degree")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--out", cfg.out, "output file for emitted JSON");

    std::string glit, coeff, file, file2, direction;
    int degree = 0;

    auto* homology = app.add_subcommand("homology", "homology of the normalized cubical complex");
    homology->add_option("group", glit)->required();
    homology->add_option("n", degree)->required();

    auto* cohomology = app.add_subcommand("cohomology", "cubical cohomology group");
    cohomology->add_option("base", glit)->required();
    cohomology->add_option("coeff", coeff)->required();
    cohomology->add_option("n", degree)->required();

    auto* cocycles = app.add_subcommand("cocycles", "degree-3 class representatives");
    cocycles->add_option("base", glit)->required();
    cocycles->add_option("coeff", coeff)->required();

    auto* check = app.add_subcommand("check", "verdict for a cocycle file");
    check->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "AC-2-group classes for (pi_0, pi_1)");
    classify->add_option("base", glit)->required();
    classify->add_option("coeff", coeff)->required();

    auto* build = app.add_subcommand("build", "special AC-2-group from a cocycle file");
    build->add_option("base", glit)->required();
    build->add_option("coeff", coeff)->required();
    build->add_option("cocycle", file)->required();

    auto* verify = app.add_subcommand("verify", "verify an instance file");
    verify->add_option("file", file)->required();

    auto* convert = app.add_subcommand("convert", "convert between AC and SMC instances");
    convert->add_option("file", file)->required();
    convert->add_option("direction", direction)->required();

    auto* sinh = app.add_subcommand("sinh", "Sinh pair of a classifying triple");
    sinh->add_option("triple", file)->required();

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two triples");
    equiv->add_option("triple1", file)->required();
    equiv->add_option("triple2", file2)->required();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (homology->parsed()) return cmd_homology(cfg, glit, degree);
        if (cohomology->parsed()) return cmd_cohomology(cfg, glit, coeff, degree);
        if (cocycles->parsed()) return cmd_cocycles(cfg, glit, coeff);
        if (check->parsed()) return cmd_check(cfg, file);
        if (classify->parsed()) return cmd_classify(cfg, glit, coeff);
        if (build->parsed()) return cmd_build(cfg, glit, coeff, file);
        if (verify->parsed()) return cmd_verify(cfg, file);
        if (convert->parsed()) return cmd_convert(cfg, file, direction);
        if (sinh->parsed()) return cmd_sinh(cfg, file);
        if (equiv->parsed()) return cmd_equiv(cfg, file, file2);
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
