#include "accube/smc_bridge.hpp"

#include <sstream>

namespace accube {

namespace {

std::string tuple_str(const std::vector<int>& xs) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    out << ')';
    return out.str();
}

struct AxiomCheck {
    CheckLine line;
    explicit AxiomCheck(std::string name) { line.axiom = std::move(name); }
    bool still_ok() const { return line.pass; }
    void fail(const std::vector<int>& tuple) {
        if (!line.pass) return;
        line.pass = false;
        line.where = tuple_str(tuple);
    }
};

int inv_of(const InstanceCore& c, int f) {
    int g = c.inverse(f);
    if (g < 0) throw ParseError("morphism is not invertible");
    return g;
}

} // namespace

const GroupElem& SinhPair::h_at(size_t x, size_t y, size_t z) const {
    size_t n = group.order_index();
    return h[(x * n + y) * n + z];
}

const GroupElem& SinhPair::c_at(size_t x, size_t y) const {
    return c[x * group.order_index() + y];
}

VerifyReport verify_smc_axioms(const SMCInstance& s, size_t sweep_cap) {
    const InstanceCore& c = s.core;
    size_t n = c.num_objects;
    size_t nm = c.num_mor();
    if (n * n * n * n > sweep_cap) throw CapExceededError("object tuple sweep exceeds the cap");
    VerifyReport report;
    verify_core_structure(c, report, sweep_cap);
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    int u = c.unit_object;

    AxiomCheck aend("a-endpoints");
    for (size_t x = 0; x < n && aend.still_ok(); ++x)
        for (size_t y = 0; y < n && aend.still_ok(); ++y)
            for (size_t z = 0; z < n; ++z) {
                int f = s.a(x, y, z);
                if (f < 0 || c.mor[f].src != os(x, os(y, z)) || c.mor[f].dst != os(os(x, y), z) ||
                    c.inverse(f) < 0) {
                    aend.fail({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
                    break;
                }
            }
    report.lines.push_back(aend.line);

    AxiomCheck cend("c-endpoints");
    for (size_t x = 0; x < n && cend.still_ok(); ++x)
        for (size_t y = 0; y < n; ++y) {
            int f = s.cmt(x, y);
            if (f < 0 || c.mor[f].src != os(x, y) || c.mor[f].dst != os(y, x) ||
                c.inverse(f) < 0) {
                cend.fail({static_cast<int>(x), static_cast<int>(y)});
                break;
            }
        }
    report.lines.push_back(cend.line);

    AxiomCheck lend("l-endpoints");
    AxiomCheck rend("r-endpoints");
    for (size_t x = 0; x < n; ++x) {
        int lf = s.l(x), rf = s.r(x);
        if (lend.still_ok() && (c.mor[lf].src != os(u, x) || c.mor[lf].dst != static_cast<int>(x) ||
                                c.inverse(lf) < 0))
            lend.fail({static_cast<int>(x)});
        if (rend.still_ok() && (c.mor[rf].src != os(x, u) || c.mor[rf].dst != static_cast<int>(x) ||
                                c.inverse(rf) < 0))
            rend.fail({static_cast<int>(x)});
    }
    report.lines.push_back(lend.line);
    report.lines.push_back(rend.line);

    AxiomCheck anat("a-natural");
    if (nm * nm * nm > sweep_cap) throw CapExceededError("naturality sweep exceeds the cap");
    for (size_t f1 = 0; f1 < nm && anat.still_ok(); ++f1)
        for (size_t f2 = 0; f2 < nm && anat.still_ok(); ++f2)
            for (size_t f3 = 0; f3 < nm; ++f3) {
                int asrc = s.a(c.mor[f1].src, c.mor[f2].src, c.mor[f3].src);
                int adst = s.a(c.mor[f1].dst, c.mor[f2].dst, c.mor[f3].dst);
                int lhs = c.comp(adst, c.sum_mor[f1][c.sum_mor[f2][f3]]);
                int rhs = c.comp(c.sum_mor[c.sum_mor[f1][f2]][f3], asrc);
                if (lhs != rhs) {
                    anat.fail({static_cast<int>(f1), static_cast<int>(f2), static_cast<int>(f3)});
                    break;
                }
            }
    report.lines.push_back(anat.line);

    AxiomCheck cnat("c-natural");
    for (size_t f1 = 0; f1 < nm && cnat.still_ok(); ++f1)
        for (size_t f2 = 0; f2 < nm; ++f2) {
            int csrc = s.cmt(c.mor[f1].src, c.mor[f2].src);
            int cdst = s.cmt(c.mor[f1].dst, c.mor[f2].dst);
            if (c.comp(cdst, c.sum_mor[f1][f2]) != c.comp(c.sum_mor[f2][f1], csrc)) {
                cnat.fail({static_cast<int>(f1), static_cast<int>(f2)});
                break;
            }
        }
    report.lines.push_back(cnat.line);

    AxiomCheck lnat("l-natural");
    AxiomCheck rnat("r-natural");
    for (size_t f = 0; f < nm; ++f) {
        int fs = c.mor[f].src, fd = c.mor[f].dst;
        if (lnat.still_ok() &&
            c.comp(static_cast<int>(f), s.l(fs)) !=
                c.comp(s.l(fd), c.sum_mor[c.identity[u]][f]))
            lnat.fail({static_cast<int>(f)});
        if (rnat.still_ok() &&
            c.comp(static_cast<int>(f), s.r(fs)) !=
                c.comp(s.r(fd), c.sum_mor[f][c.identity[u]]))
            rnat.fail({static_cast<int>(f)});
    }
    report.lines.push_back(lnat.line);
    report.lines.push_back(rnat.line);

    AxiomCheck pentagon("pentagon");
    for (size_t x = 0; x < n && pentagon.still_ok(); ++x)
        for (size_t y = 0; y < n && pentagon.still_ok(); ++y)
            for (size_t z = 0; z < n && pentagon.still_ok(); ++z)
                for (size_t t = 0; t < n; ++t) {
                    int lhs = c.comp(s.a(os(x, y), z, t), s.a(x, y, os(z, t)));
                    int rhs = c.comp(
                        c.sum_mor[s.a(x, y, z)][c.identity[t]],
                        c.comp(s.a(x, os(y, z), t), c.sum_mor[c.identity[x]][s.a(y, z, t)]));
                    if (lhs != rhs) {
                        pentagon.fail({static_cast<int>(x), static_cast<int>(y),
                                       static_cast<int>(z), static_cast<int>(t)});
                        break;
                    }
                }
    report.lines.push_back(pentagon.line);

    AxiomCheck triangle("triangle");
    for (size_t x = 0; x < n && triangle.still_ok(); ++x)
        for (size_t y = 0; y < n; ++y) {
            int lhs = c.comp(c.sum_mor[s.r(x)][c.identity[y]], s.a(x, u, y));
            int rhs = c.sum_mor[c.identity[x]][s.l(y)];
            if (lhs != rhs) {
                triangle.fail({static_cast<int>(x), static_cast<int>(y)});
                break;
            }
        }
    report.lines.push_back(triangle.line);

    AxiomCheck hexagon("hexagon");
    for (size_t x = 0; x < n && hexagon.still_ok(); ++x)
        for (size_t y = 0; y < n && hexagon.still_ok(); ++y)
            for (size_t z = 0; z < n; ++z) {
                int lhs = c.comp(s.a(z, x, y), c.comp(s.cmt(os(x, y), z), s.a(x, y, z)));
                int rhs = c.comp(c.sum_mor[s.cmt(x, z)][c.identity[y]],
                                 c.comp(s.a(x, z, y), c.sum_mor[c.identity[x]][s.cmt(y, z)]));
                if (lhs != rhs) {
                    hexagon.fail({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
                    break;
                }
            }
    report.lines.push_back(hexagon.line);

    AxiomCheck symmetry("symmetry");
    for (size_t x = 0; x < n && symmetry.still_ok(); ++x)
        for (size_t y = 0; y < n; ++y) {
            if (c.comp(s.cmt(y, x), s.cmt(x, y)) != c.identity[os(x, y)]) {
                symmetry.fail({static_cast<int>(x), static_cast<int>(y)});
                break;
            }
        }
    report.lines.push_back(symmetry.line);
    return report;
}

SMCInstance build_skeletal_smc(
    const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
    const std::function<GroupElem(const GroupElem&, const GroupElem&, const GroupElem&)>& h,
    const std::function<GroupElem(const GroupElem&, const GroupElem&)>& c) {
    // reuse the special AC skeleton for the underlying category data
    ACInstance base = build_special(g, a, zero_cochain(g, a, 3));
    SMCInstance s;
    s.core = base.core;
    s.l_table = base.l_table;
    s.r_table = base.r_table;
    size_t n = g.order_index();
    s.a_table.assign(n * n * n, 0);
    s.c_table.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            GroupElem cv = c(g.element_at(x), g.element_at(y));
            a.check_element(cv);
            size_t obj = g.index_of(g.add(g.element_at(x), g.element_at(y)));
            s.c_table[x * n + y] = static_cast<int>(a.index_of(cv) * n + obj);
            for (size_t z = 0; z < n; ++z) {
                GroupElem hv = h(g.element_at(x), g.element_at(y), g.element_at(z));
                a.check_element(hv);
                size_t obj3 = g.index_of(g.add(g.element_at(obj), g.element_at(z)));
                s.a_table[(x * n + y) * n + z] = static_cast<int>(a.index_of(hv) * n + obj3);
            }
        }
    return s;
}

ACInstance ac_from_smc(const SMCInstance& s, size_t sweep_cap) {
    {
        VerifyReport pre = verify_smc_axioms(s, sweep_cap);
        if (!pre.ok()) throw ParseError("ac_from_smc input fails the axioms:\n" + pre.to_text());
    }
    const InstanceCore& c = s.core;
    int n = c.num_objects;
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    ACInstance out;
    out.core = c;
    out.l_table = s.l_table;
    out.r_table = s.r_table;
    out.b_table.assign(size_t(n) * n * n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    int yt = os(y, t), zt = os(z, t);
                    // upper route through x(...(...))
                    int up = c.comp(
                        s.a(x, z, yt),
                        c.comp(
                            c.sum_mor[c.identity[x]][inv_of(c, s.a(z, y, t))],
                            c.comp(c.sum_mor[c.identity[x]][c.sum_mor[s.cmt(y, z)][c.identity[t]]],
                                   c.comp(c.sum_mor[c.identity[x]][s.a(y, z, t)],
                                          inv_of(c, s.a(x, y, zt))))));
                    // lower route through (...)t
                    int low = c.comp(
                        inv_of(c, s.a(os(x, z), y, t)),
                        c.comp(
                            c.sum_mor[s.a(x, z, y)][c.identity[t]],
                            c.comp(c.sum_mor[c.sum_mor[c.identity[x]][s.cmt(y, z)]][c.identity[t]],
                                   c.comp(c.sum_mor[inv_of(c, s.a(x, y, z))][c.identity[t]],
                                          s.a(os(x, y), z, t)))));
                    if (up != low)
                        throw ParseError("the two composite routes for b disagree at " +
                                         tuple_str({x, y, z, t}));
                    out.b_table[((size_t(x) * n + y) * n + z) * n + t] = up;
                }
    return out;
}

SMCInstance smc_from_ac(const ACInstance& x, size_t sweep_cap) {
    {
        VerifyReport pre = verify_ac_axioms(x, sweep_cap);
        if (!pre.ok()) throw ParseError("smc_from_ac input fails the axioms:\n" + pre.to_text());
    }
    const InstanceCore& c = x.core;
    int n = c.num_objects;
    int u = c.unit_object;
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    SMCInstance s;
    s.core = c;
    s.l_table = x.l_table;
    s.r_table = x.r_table;
    s.a_table.assign(size_t(n) * n * n, -1);
    s.c_table.assign(size_t(n) * n, -1);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            // c_{p,q} = (l_q + r_p) b(1,p,q,1) (l_p^{-1} + r_q^{-1})
            s.c_table[size_t(p) * n + q] =
                c.comp(c.sum_mor[x.l(q)][x.r(p)],
                       c.comp(x.b(u, p, q, u),
                              c.sum_mor[inv_of(c, x.l(p))][inv_of(c, x.r(q))]));
            for (int w = 0; w < n; ++w) {
                // a_{p,q,w} = (id + l_w) b(p,1,q,w) (r_p^{-1} + id)
                s.a_table[(size_t(p) * n + q) * n + w] =
                    c.comp(c.sum_mor[c.identity[os(p, q)]][x.l(w)],
                           c.comp(x.b(p, u, q, w),
                                  c.sum_mor[inv_of(c, x.r(p))][c.identity[os(q, w)]]));
            }
        }
    return s;
}

bool roundtrip_check(const ACInstance& x, size_t sweep_cap) {
    ACInstance back = ac_from_smc(smc_from_ac(x, sweep_cap), sweep_cap);
    return back.b_table == x.b_table && back.l_table == x.l_table && back.r_table == x.r_table &&
           back.core.sum_mor == x.core.sum_mor && back.core.compose_t == x.core.compose_t;
}

bool roundtrip_check(const SMCInstance& s, size_t sweep_cap) {
    SMCInstance back = smc_from_ac(ac_from_smc(s, sweep_cap), sweep_cap);
    return back.a_table == s.a_table && back.c_table == s.c_table && back.l_table == s.l_table &&
           back.r_table == s.r_table && back.core.sum_mor == s.core.sum_mor &&
           back.core.compose_t == s.core.compose_t;
}

bool is_semistrict(const ACInstance& x) {
    const InstanceCore& c = x.core;
    int n = c.num_objects;
    int u = c.unit_object;
    for (int p = 0; p < n; ++p)
        if (x.l(p) != c.identity[p] || x.r(p) != c.identity[p]) return false;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int w = 0; w < n; ++w) {
                int f1 = x.b(p, u, q, w);
                if (f1 != c.identity[c.mor[f1].src]) return false;
                int f2 = x.b(p, q, u, w);
                if (f2 != c.identity[c.mor[f2].src]) return false;
            }
    return true;
}

VerifyReport verify_extracted_commutator(const ACInstance& x) {
    const InstanceCore& c = x.core;
    int n = c.num_objects;
    int u = c.unit_object;
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    auto b1 = [&](int p, int q) { return x.b(u, p, q, u); };
    VerifyReport report;

    AxiomCheck semi("semistrict");
    if (!is_semistrict(x)) semi.fail({0});
    report.lines.push_back(semi.line);

    AxiomCheck sac1("commutator-hexagon");
    for (int p = 0; p < n && sac1.still_ok(); ++p)
        for (int q = 0; q < n && sac1.still_ok(); ++q)
            for (int w = 0; w < n; ++w) {
                int lhs = b1(p, os(q, w));
                int rhs = c.comp(c.sum_mor[c.identity[q]][b1(p, w)],
                                 c.sum_mor[b1(p, q)][c.identity[w]]);
                if (lhs != rhs) {
                    sac1.fail({p, q, w});
                    break;
                }
            }
    report.lines.push_back(sac1.line);

    AxiomCheck sac2("commutator-symmetry");
    for (int p = 0; p < n && sac2.still_ok(); ++p)
        for (int q = 0; q < n; ++q)
            if (c.comp(b1(q, p), b1(p, q)) != c.identity[os(p, q)]) {
                sac2.fail({p, q});
                break;
            }
    report.lines.push_back(sac2.line);

    AxiomCheck sac3("commutator-unit");
    for (int p = 0; p < n && sac3.still_ok(); ++p)
        if (b1(u, p) != c.identity[p]) sac3.fail({p});
    report.lines.push_back(sac3.line);
    return report;
}

CommutatorFamily semistrict_commutator(const ACInstance& x) {
    VerifyReport rep = verify_extracted_commutator(x);
    if (!rep.ok())
        throw ParseError("instance is not a semistrict AC-category:\n" + rep.to_text());
    const InstanceCore& c = x.core;
    int n = c.num_objects;
    CommutatorFamily fam;
    fam.core = c;
    fam.c_table.assign(size_t(n) * n, -1);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            fam.c_table[size_t(p) * n + q] = x.b(c.unit_object, p, q, c.unit_object);
    return fam;
}

VerifyReport verify_commutator_family(const CommutatorFamily& fam) {
    const InstanceCore& c = fam.core;
    int n = c.num_objects;
    int u = c.unit_object;
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    VerifyReport report;

    AxiomCheck strict("strict-sum");
    for (int p = 0; p < n && strict.still_ok(); ++p) {
        if (os(u, p) != p || os(p, u) != p) strict.fail({p});
        for (int q = 0; q < n && strict.still_ok(); ++q)
            for (int w = 0; w < n; ++w)
                if (os(os(p, q), w) != os(p, os(q, w))) {
                    strict.fail({p, q, w});
                    break;
                }
    }
    // morphism sums must be strictly associative and unital as well
    int nm = c.num_mor();
    for (int f = 0; f < nm && strict.still_ok(); ++f) {
        if (c.sum_mor[c.identity[u]][f] != f || c.sum_mor[f][c.identity[u]] != f)
            strict.fail({f});
        for (int g = 0; g < nm && strict.still_ok(); ++g)
            for (int h = 0; h < nm; ++h)
                if (c.sum_mor[c.sum_mor[f][g]][h] != c.sum_mor[f][c.sum_mor[g][h]]) {
                    strict.fail({f, g, h});
                    break;
                }
    }
    report.lines.push_back(strict.line);

    AxiomCheck cend("commutator-endpoints");
    for (int p = 0; p < n && cend.still_ok(); ++p)
        for (int q = 0; q < n; ++q) {
            int f = fam.cmt(p, q);
            if (f < 0 || c.mor[f].src != os(p, q) || c.mor[f].dst != os(q, p) ||
                c.inverse(f) < 0) {
                cend.fail({p, q});
                break;
            }
        }
    report.lines.push_back(cend.line);

    AxiomCheck cnat("commutator-natural");
    for (int f1 = 0; f1 < nm && cnat.still_ok(); ++f1)
        for (int f2 = 0; f2 < nm; ++f2) {
            int csrc = fam.cmt(c.mor[f1].src, c.mor[f2].src);
            int cdst = fam.cmt(c.mor[f1].dst, c.mor[f2].dst);
            if (c.comp(cdst, c.sum_mor[f1][f2]) != c.comp(c.sum_mor[f2][f1], csrc)) {
                cnat.fail({f1, f2});
                break;
            }
        }
    report.lines.push_back(cnat.line);

    AxiomCheck ssm1("commutator-hexagon");
    for (int p = 0; p < n && ssm1.still_ok(); ++p)
        for (int q = 0; q < n && ssm1.still_ok(); ++q)
            for (int w = 0; w < n; ++w) {
                int lhs = fam.cmt(p, os(q, w));
                int rhs = c.comp(c.sum_mor[c.identity[q]][fam.cmt(p, w)],
                                 c.sum_mor[fam.cmt(p, q)][c.identity[w]]);
                if (lhs != rhs) {
                    ssm1.fail({p, q, w});
                    break;
                }
            }
    report.lines.push_back(ssm1.line);

    AxiomCheck ssm2("commutator-symmetry");
    for (int p = 0; p < n && ssm2.still_ok(); ++p)
        for (int q = 0; q < n; ++q)
            if (c.comp(fam.cmt(q, p), fam.cmt(p, q)) != c.identity[os(p, q)]) {
                ssm2.fail({p, q});
                break;
            }
    report.lines.push_back(ssm2.line);

    AxiomCheck ssm3("commutator-unit");
    for (int p = 0; p < n && ssm3.still_ok(); ++p)
        if (fam.cmt(u, p) != c.identity[p]) ssm3.fail({p});
    report.lines.push_back(ssm3.line);
    return report;
}

ACInstance build_from_commutator(const CommutatorFamily& fam) {
    VerifyReport rep = verify_commutator_family(fam);
    if (!rep.ok()) throw ParseError("invalid commutator family:\n" + rep.to_text());
    const InstanceCore& c = fam.core;
    int n = c.num_objects;
    ACInstance out;
    out.core = c;
    out.l_table.resize(n);
    out.r_table.resize(n);
    for (int p = 0; p < n; ++p) out.l_table[p] = out.r_table[p] = c.identity[p];
    out.b_table.assign(size_t(n) * n * n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t)
                    out.b_table[((size_t(x) * n + y) * n + z) * n + t] =
                        c.sum_mor[c.identity[x]][c.sum_mor[fam.cmt(y, z)][c.identity[t]]];
    return out;
}

SinhPair sinh_pair(const ClassifyingTriple& t) {
    {
        CocycleReport r = is_cocycle3(t.cocycle);
        if (!r.ok) throw ParseError("sinh_pair requires a cocycle");
    }
    const FiniteAbelianGroup& g = t.group;
    const FiniteAbelianGroup& a = t.coeff;
    size_t n = g.order_index();
    ACInstance inst = build_special(g, a, t.cocycle);
    SMCInstance s = smc_from_ac(inst);
    DenseTable3 zt = dense_table3(t.cocycle);

    SinhPair pair;
    pair.group = g;
    pair.coeff = a;
    pair.h.assign(n * n * n, a.zero());
    pair.c.assign(n * n, a.zero());
    // morphism id = alpha * n + object in the special skeleton
    auto label = [&](int m) { return a.element_at(static_cast<size_t>(m) / n); };
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            pair.c[x * n + y] = label(s.cmt(static_cast<int>(x), static_cast<int>(y)));
            if (!(pair.c[x * n + y] == a.element_at(zt.at(0, x, y, 0))))
                throw ParseError("commutator component disagrees with z(0,x,y,0)");
            for (size_t z = 0; z < n; ++z) {
                pair.h[(x * n + y) * n + z] =
                    label(s.a(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)));
                if (!(pair.h[(x * n + y) * n + z] == a.element_at(zt.at(x, 0, y, z))))
                    throw ParseError("associator component disagrees with z(x,0,y,z)");
            }
        }

    auto gadd = [&](size_t i, size_t j) {
        return g.index_of(g.add(g.element_at(i), g.element_at(j)));
    };
    // h is a normalized 3-cocycle for the trivial action
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!a.is_zero(pair.h_at(x, y, 0)) || !a.is_zero(pair.h_at(x, 0, y)) ||
                !a.is_zero(pair.h_at(0, x, y)))
                throw ParseError("h is not normalized");
            for (size_t z = 0; z < n; ++z)
                for (size_t w = 0; w < n; ++w) {
                    GroupElem acc = pair.h_at(y, z, w);
                    acc = a.sub(acc, pair.h_at(gadd(x, y), z, w));
                    acc = a.add(acc, pair.h_at(x, gadd(y, z), w));
                    acc = a.sub(acc, pair.h_at(x, y, gadd(z, w)));
                    acc = a.add(acc, pair.h_at(x, y, z));
                    if (!a.is_zero(acc)) throw ParseError("h fails the 3-cocycle condition");
                }
        }
    // c is skew-symmetric
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (!a.is_zero(a.add(pair.c_at(x, y), pair.c_at(y, x))))
                throw ParseError("c is not skew-symmetric");
    // the two compatibility relations
    for (size_t g1 = 0; g1 < n; ++g1)
        for (size_t g2 = 0; g2 < n; ++g2)
            for (size_t g3 = 0; g3 < n; ++g3) {
                GroupElem lhs = pair.c_at(g2, g3);
                lhs = a.sub(lhs, pair.c_at(gadd(g1, g2), g3));
                lhs = a.add(lhs, pair.c_at(g1, g3));
                GroupElem rhs = a.neg(pair.h_at(g1, g2, g3));
                rhs = a.add(rhs, pair.h_at(g1, g3, g2));
                rhs = a.sub(rhs, pair.h_at(g3, g1, g2));
                if (!(lhs == rhs)) throw ParseError("first compatibility relation fails");

                GroupElem lhs2 = pair.c_at(g1, g3);
                lhs2 = a.sub(lhs2, pair.c_at(g1, gadd(g2, g3)));
                lhs2 = a.add(lhs2, pair.c_at(g1, g2));
                GroupElem rhs2 = pair.h_at(g1, g2, g3);
                rhs2 = a.sub(rhs2, pair.h_at(g2, g1, g3));
                rhs2 = a.add(rhs2, pair.h_at(g2, g3, g1));
                if (!(lhs2 == rhs2)) throw ParseError("second compatibility relation fails");
            }
    return pair;
}

} // namespace accube
