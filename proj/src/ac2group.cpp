#include "accube/ac2group.hpp"

#include <algorithm>
#include <random>
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

// per-axiom sweep bookkeeping: records the first violation only
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

} // namespace

int InstanceCore::comp(int g, int f) const {
    int r = compose_t[g][f];
    if (r < 0) throw ParseError("composite of non-composable morphisms");
    return r;
}

std::vector<int> InstanceCore::hom(int x, int y) const {
    std::vector<int> out;
    for (int f = 0; f < num_mor(); ++f)
        if (mor[f].src == x && mor[f].dst == y) out.push_back(f);
    return out;
}

int InstanceCore::inverse(int f) const {
    for (int g : hom(mor[f].dst, mor[f].src))
        if (compose_t[g][f] == identity[mor[f].src] && compose_t[f][g] == identity[mor[f].dst])
            return g;
    return -1;
}

bool VerifyReport::ok() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto& l : lines) {
        if (l.pass)
            out << "PASS " << l.axiom << '\n';
        else
            out << "FAIL " << l.axiom << " at " << l.where << '\n';
    }
    return out.str();
}

// ------------------------------------------------------------- builders

ACInstance build_special(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                         const Cochain& z, bool check) {
    if (!(z.base == g) || !(z.coeff == a)) throw ParseError("cocycle base/coeff mismatch");
    if (check) {
        CocycleReport r = is_cocycle3(z);
        if (!r.ok) throw ParseError("build_special requires a cubical 3-cocycle");
    }
    size_t n = g.order_index();
    size_t m = a.order_index();
    ACInstance inst;
    InstanceCore& c = inst.core;
    c.num_objects = static_cast<int>(n);
    c.unit_object = 0;
    // morphism (alpha, x) : x -> x gets id alpha*n + x
    c.mor.resize(m * n);
    for (size_t al = 0; al < m; ++al)
        for (size_t x = 0; x < n; ++x)
            c.mor[al * n + x] = Morphism{static_cast<int>(x), static_cast<int>(x)};
    c.identity.resize(n);
    for (size_t x = 0; x < n; ++x) c.identity[x] = static_cast<int>(x);
    c.compose_t.assign(m * n, std::vector<int>(m * n, -1));
    std::vector<uint32_t> aadd(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            aadd[i * m + j] =
                static_cast<uint32_t>(a.index_of(a.add(a.element_at(i), a.element_at(j))));
    std::vector<uint32_t> gadd(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            gadd[i * n + j] =
                static_cast<uint32_t>(g.index_of(g.add(g.element_at(i), g.element_at(j))));
    for (size_t al = 0; al < m; ++al)
        for (size_t be = 0; be < m; ++be)
            for (size_t x = 0; x < n; ++x)
                c.compose_t[al * n + x][be * n + x] =
                    static_cast<int>(size_t(aadd[al * m + be]) * n + x);
    c.sum_obj.assign(n, std::vector<int>(n));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) c.sum_obj[x][y] = static_cast<int>(gadd[x * n + y]);
    c.sum_mor.assign(m * n, std::vector<int>(m * n));
    for (size_t al = 0; al < m; ++al)
        for (size_t x = 0; x < n; ++x)
            for (size_t be = 0; be < m; ++be)
                for (size_t y = 0; y < n; ++y)
                    c.sum_mor[al * n + x][be * n + y] =
                        static_cast<int>(size_t(aadd[al * m + be]) * n + gadd[x * n + y]);
    inst.l_table.resize(n);
    inst.r_table.resize(n);
    for (size_t x = 0; x < n; ++x) inst.l_table[x] = inst.r_table[x] = static_cast<int>(x);
    DenseTable3 t = dense_table3(z);
    inst.b_table.assign(n * n * n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t w = 0; w < n; ++w)
                for (size_t v = 0; v < n; ++v) {
                    size_t obj = gadd[gadd[x * n + y] * n + gadd[w * n + v]];
                    inst.b_table[((x * n + y) * n + w) * n + v] =
                        static_cast<int>(size_t(t.at(x, y, w, v)) * n + obj);
                }
    return inst;
}

ACInstance inflate_special(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                           const Cochain& z, const std::vector<int>& copies) {
    size_t n = g.order_index();
    size_t m = a.order_index();
    if (copies.size() != n) throw ParseError("one copy count per group element required");
    for (int c : copies)
        if (c < 1) throw ParseError("copy counts must be >= 1");
    // object (g, i) for i < copies[g]
    std::vector<int> offset(n + 1, 0);
    for (size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + copies[i];
    int nobj = offset[n];
    auto obj_id = [&](size_t cls, int i) { return offset[cls] + i; };
    std::vector<size_t> obj_cls(nobj);
    std::vector<int> obj_idx(nobj);
    for (size_t cls = 0; cls < n; ++cls)
        for (int i = 0; i < copies[cls]; ++i) {
            obj_cls[obj_id(cls, i)] = cls;
            obj_idx[obj_id(cls, i)] = i;
        }
    // morphism (alpha, src, dst) for same-class src,dst
    ACInstance inst;
    InstanceCore& c = inst.core;
    c.num_objects = nobj;
    c.unit_object = 0;
    std::vector<std::vector<int>> mid(nobj, std::vector<int>(nobj, -1)); // (src,dst) -> first id
    for (int s = 0; s < nobj; ++s)
        for (int d = 0; d < nobj; ++d) {
            if (obj_cls[s] != obj_cls[d]) continue;
            mid[s][d] = c.num_mor();
            for (size_t al = 0; al < m; ++al) c.mor.push_back(Morphism{s, d});
        }
    auto mor_id = [&](size_t al, int s, int d) { return mid[s][d] + static_cast<int>(al); };
    auto mor_label = [&](int f) { return static_cast<size_t>(f - mid[c.mor[f].src][c.mor[f].dst]); };
    c.identity.resize(nobj);
    for (int x = 0; x < nobj; ++x) c.identity[x] = mor_id(0, x, x);
    c.compose_t.assign(c.num_mor(), std::vector<int>(c.num_mor(), -1));
    for (int f = 0; f < c.num_mor(); ++f)
        for (int h = 0; h < c.num_mor(); ++h) {
            if (c.mor[h].dst != c.mor[f].src) continue; // compose f after h
            size_t al = mor_label(f), be = mor_label(h);
            size_t sum = a.index_of(a.add(a.element_at(al), a.element_at(be)));
            c.compose_t[f][h] = mor_id(sum, c.mor[h].src, c.mor[f].dst);
        }
    c.sum_obj.assign(nobj, std::vector<int>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y) {
            size_t cls = g.index_of(
                g.add(g.element_at(obj_cls[x]), g.element_at(obj_cls[y])));
            int i = (obj_idx[x] + obj_idx[y]) % copies[cls];
            c.sum_obj[x][y] = obj_id(cls, i);
        }
    c.sum_mor.assign(c.num_mor(), std::vector<int>(c.num_mor()));
    for (int f = 0; f < c.num_mor(); ++f)
        for (int h = 0; h < c.num_mor(); ++h) {
            size_t al = mor_label(f), be = mor_label(h);
            size_t sum = a.index_of(a.add(a.element_at(al), a.element_at(be)));
            c.sum_mor[f][h] = mor_id(sum, c.sum_obj[c.mor[f].src][c.mor[h].src],
                                     c.sum_obj[c.mor[f].dst][c.mor[h].dst]);
        }
    inst.l_table.resize(nobj);
    inst.r_table.resize(nobj);
    for (int x = 0; x < nobj; ++x) {
        int lx = c.sum_obj[c.unit_object][x];
        int rx = c.sum_obj[x][c.unit_object];
        inst.l_table[x] = mor_id(0, lx, x);
        inst.r_table[x] = mor_id(0, rx, x);
    }
    DenseTable3 t = dense_table3(z);
    inst.b_table.assign(size_t(nobj) * nobj * nobj * nobj, -1);
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int w = 0; w < nobj; ++w)
                for (int v = 0; v < nobj; ++v) {
                    int src = c.sum_obj[c.sum_obj[x][y]][c.sum_obj[w][v]];
                    int dst = c.sum_obj[c.sum_obj[x][w]][c.sum_obj[y][v]];
                    size_t val = t.at(obj_cls[x], obj_cls[y], obj_cls[w], obj_cls[v]);
                    inst.b_table[((size_t(x) * nobj + y) * nobj + w) * nobj + v] =
                        mor_id(val, src, dst);
                }
    return inst;
}

// ------------------------------------------------------------ verifying

void verify_core_structure(const InstanceCore& c, VerifyReport& report, size_t sweep_cap) {
    size_t n = c.num_objects;
    size_t nm = c.num_mor();

    AxiomCheck category("category");
    for (size_t f = 0; f < nm && category.still_ok(); ++f)
        for (size_t h = 0; h < nm; ++h) {
            bool composable = c.mor[f].dst == c.mor[h].src;
            int r = c.compose_t[h][f];
            if (composable != (r >= 0)) {
                category.fail({static_cast<int>(h), static_cast<int>(f)});
                break;
            }
            if (r >= 0 && (c.mor[r].src != c.mor[f].src || c.mor[r].dst != c.mor[h].dst)) {
                category.fail({static_cast<int>(h), static_cast<int>(f)});
                break;
            }
        }
    for (size_t x = 0; x < n && category.still_ok(); ++x) {
        int id = c.identity[x];
        if (c.mor[id].src != static_cast<int>(x) || c.mor[id].dst != static_cast<int>(x))
            category.fail({static_cast<int>(x)});
    }
    for (size_t f = 0; f < nm && category.still_ok(); ++f) {
        if (c.compose_t[f][c.identity[c.mor[f].src]] != static_cast<int>(f) ||
            c.compose_t[c.identity[c.mor[f].dst]][f] != static_cast<int>(f))
            category.fail({static_cast<int>(f)});
    }
    // associativity over composable triples
    for (size_t f = 0; f < nm && category.still_ok(); ++f)
        for (size_t h = 0; h < nm && category.still_ok(); ++h) {
            if (c.mor[h].src != c.mor[f].dst) continue;
            int hf = c.compose_t[h][f];
            for (size_t k = 0; k < nm; ++k) {
                if (c.mor[k].src != c.mor[h].dst) continue;
                if (c.compose_t[k][hf] != c.compose_t[c.compose_t[k][h]][f]) {
                    category.fail({static_cast<int>(k), static_cast<int>(h), static_cast<int>(f)});
                    break;
                }
            }
        }
    report.lines.push_back(category.line);

    AxiomCheck groupoid("groupoid");
    for (size_t f = 0; f < nm && groupoid.still_ok(); ++f)
        if (c.inverse(static_cast<int>(f)) < 0) groupoid.fail({static_cast<int>(f)});
    report.lines.push_back(groupoid.line);

    AxiomCheck sumfun("sum-functor");
    for (size_t x = 0; x < n && sumfun.still_ok(); ++x)
        for (size_t y = 0; y < n; ++y)
            if (c.sum_mor[c.identity[x]][c.identity[y]] != c.identity[c.sum_obj[x][y]]) {
                sumfun.fail({static_cast<int>(x), static_cast<int>(y)});
                break;
            }
    // endpoints of sums
    for (size_t f = 0; f < nm && sumfun.still_ok(); ++f)
        for (size_t h = 0; h < nm; ++h) {
            int s = c.sum_mor[f][h];
            if (c.mor[s].src != c.sum_obj[c.mor[f].src][c.mor[h].src] ||
                c.mor[s].dst != c.sum_obj[c.mor[f].dst][c.mor[h].dst]) {
                sumfun.fail({static_cast<int>(f), static_cast<int>(h)});
                break;
            }
        }
    // interchange over pairs of composable pairs
    if (sumfun.still_ok()) {
        std::vector<std::pair<int, int>> pairs;
        for (size_t f = 0; f < nm; ++f)
            for (size_t h = 0; h < nm; ++h)
                if (c.mor[h].src == c.mor[f].dst) pairs.emplace_back(static_cast<int>(h), static_cast<int>(f));
        if (pairs.size() * pairs.size() > sweep_cap)
            throw CapExceededError("interchange sweep exceeds the cap");
        for (auto& [h, f] : pairs) {
            if (!sumfun.still_ok()) break;
            for (auto& [h2, f2] : pairs) {
                if (c.sum_mor[c.compose_t[h][f]][c.compose_t[h2][f2]] !=
                    c.compose_t[c.sum_mor[h][h2]][c.sum_mor[f][f2]]) {
                    sumfun.fail({h, f, h2, f2});
                    break;
                }
            }
        }
    }
    report.lines.push_back(sumfun.line);
}

VerifyReport verify_ac_axioms(const ACInstance& inst, size_t sweep_cap) {
    const InstanceCore& c = inst.core;
    size_t n = c.num_objects;
    size_t nm = c.num_mor();
    if (n * n * n * n * n * n * n * n > sweep_cap && n > 1)
        throw CapExceededError("object tuple sweep exceeds the cap");
    VerifyReport report;
    verify_core_structure(c, report, sweep_cap);

    AxiomCheck bend("b-endpoints");
    for (size_t x = 0; x < n && bend.still_ok(); ++x)
        for (size_t y = 0; y < n && bend.still_ok(); ++y)
            for (size_t z = 0; z < n && bend.still_ok(); ++z)
                for (size_t t = 0; t < n; ++t) {
                    int f = inst.b(x, y, z, t);
                    int src = c.sum_obj[c.sum_obj[x][y]][c.sum_obj[z][t]];
                    int dst = c.sum_obj[c.sum_obj[x][z]][c.sum_obj[y][t]];
                    if (f < 0 || c.mor[f].src != src || c.mor[f].dst != dst ||
                        c.inverse(f) < 0) {
                        bend.fail({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z),
                                   static_cast<int>(t)});
                        break;
                    }
                }
    report.lines.push_back(bend.line);

    AxiomCheck lend("l-endpoints");
    AxiomCheck rend("r-endpoints");
    for (size_t x = 0; x < n; ++x) {
        int lf = inst.l(x), rf = inst.r(x);
        if (lend.still_ok() &&
            (c.mor[lf].src != c.sum_obj[c.unit_object][x] || c.mor[lf].dst != static_cast<int>(x) ||
             c.inverse(lf) < 0))
            lend.fail({static_cast<int>(x)});
        if (rend.still_ok() &&
            (c.mor[rf].src != c.sum_obj[x][c.unit_object] || c.mor[rf].dst != static_cast<int>(x) ||
             c.inverse(rf) < 0))
            rend.fail({static_cast<int>(x)});
    }
    report.lines.push_back(lend.line);
    report.lines.push_back(rend.line);

    // naturality sweeps
    AxiomCheck bnat("b-natural");
    if (nm * nm * nm * nm > sweep_cap) throw CapExceededError("naturality sweep exceeds the cap");
    for (size_t f1 = 0; f1 < nm && bnat.still_ok(); ++f1)
        for (size_t f2 = 0; f2 < nm && bnat.still_ok(); ++f2)
            for (size_t f3 = 0; f3 < nm && bnat.still_ok(); ++f3)
                for (size_t f4 = 0; f4 < nm; ++f4) {
                    int bsrc = inst.b(c.mor[f1].src, c.mor[f2].src, c.mor[f3].src, c.mor[f4].src);
                    int bdst = inst.b(c.mor[f1].dst, c.mor[f2].dst, c.mor[f3].dst, c.mor[f4].dst);
                    int lhs = c.comp(bdst, c.sum_mor[c.sum_mor[f1][f2]][c.sum_mor[f3][f4]]);
                    int rhs = c.comp(c.sum_mor[c.sum_mor[f1][f3]][c.sum_mor[f2][f4]], bsrc);
                    if (lhs != rhs) {
                        bnat.fail({static_cast<int>(f1), static_cast<int>(f2),
                                   static_cast<int>(f3), static_cast<int>(f4)});
                        break;
                    }
                }
    report.lines.push_back(bnat.line);

    AxiomCheck lnat("l-natural");
    AxiomCheck rnat("r-natural");
    for (size_t f = 0; f < nm; ++f) {
        int fs = c.mor[f].src, fd = c.mor[f].dst;
        if (lnat.still_ok() &&
            c.comp(static_cast<int>(f), inst.l(fs)) !=
                c.comp(inst.l(fd), c.sum_mor[c.identity[c.unit_object]][f]))
            lnat.fail({static_cast<int>(f)});
        if (rnat.still_ok() &&
            c.comp(static_cast<int>(f), inst.r(fs)) !=
                c.comp(inst.r(fd), c.sum_mor[f][c.identity[c.unit_object]]))
            rnat.fail({static_cast<int>(f)});
    }
    report.lines.push_back(lnat.line);
    report.lines.push_back(rnat.line);

    // (acc1), swept over all object 8-tuples
    AxiomCheck acc1("acc1");
    {
        std::vector<int> v(8, 0);
        bool done = n == 0;
        while (!done && acc1.still_ok()) {
            int x = v[0], y = v[1], z = v[2], t = v[3];
            int x1 = v[4], y1 = v[5], z1 = v[6], t1 = v[7];
            auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
            int lhs = c.comp(
                c.sum_mor[inst.b(x, z, x1, z1)][inst.b(y, t, y1, t1)],
                c.comp(inst.b(os(x, z), os(y, t), os(x1, z1), os(y1, t1)),
                       c.sum_mor[inst.b(x, y, z, t)][inst.b(x1, y1, z1, t1)]));
            int rhs = c.comp(
                inst.b(os(x, x1), os(y, y1), os(z, z1), os(t, t1)),
                c.comp(c.sum_mor[inst.b(x, y, x1, y1)][inst.b(z, t, z1, t1)],
                       inst.b(os(x, y), os(z, t), os(x1, y1), os(z1, t1))));
            if (lhs != rhs) acc1.fail(v);
            size_t p = 8;
            while (p-- > 0) {
                if (++v[p] < static_cast<int>(n)) break;
                v[p] = 0;
                if (p == 0) done = true;
            }
        }
    }
    report.lines.push_back(acc1.line);

    // (acc2): the four unital diagrams
    int u = c.unit_object;
    AxiomCheck a2sr("acc2-split-right");
    AxiomCheck a2sl("acc2-split-left");
    AxiomCheck a2jr("acc2-join-right");
    AxiomCheck a2jl("acc2-join-left");
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            int xy = c.sum_obj[x][y];
            if (a2sr.still_ok()) {
                int lhs = c.comp(inst.r(xy), c.comp(c.sum_mor[c.identity[xy]][inst.l(u)],
                                                    inst.b(x, u, y, u)));
                if (lhs != c.sum_mor[inst.r(x)][inst.r(y)])
                    a2sr.fail({static_cast<int>(x), static_cast<int>(y)});
            }
            if (a2sl.still_ok()) {
                // the final unitor is the one of the product object x+y
                int lhs = c.comp(inst.l(xy), c.comp(c.sum_mor[inst.r(u)][c.identity[xy]],
                                                    inst.b(u, x, u, y)));
                if (lhs != c.sum_mor[inst.l(x)][inst.l(y)])
                    a2sl.fail({static_cast<int>(x), static_cast<int>(y)});
            }
            if (a2jr.still_ok()) {
                int lhs = c.comp(c.sum_mor[inst.r(x)][inst.r(y)], inst.b(x, y, u, u));
                int rhs = c.comp(inst.r(xy), c.sum_mor[c.identity[xy]][inst.l(u)]);
                if (lhs != rhs) a2jr.fail({static_cast<int>(x), static_cast<int>(y)});
            }
            if (a2jl.still_ok()) {
                int lhs = c.comp(c.sum_mor[inst.l(x)][inst.l(y)], inst.b(u, u, x, y));
                int rhs = c.comp(inst.l(xy), c.sum_mor[inst.r(u)][c.identity[xy]]);
                if (lhs != rhs) a2jl.fail({static_cast<int>(x), static_cast<int>(y)});
            }
        }
    report.lines.push_back(a2sr.line);
    report.lines.push_back(a2sl.line);
    report.lines.push_back(a2jr.line);
    report.lines.push_back(a2jl.line);

    AxiomCheck acc3("acc3");
    for (size_t x = 0; x < n && acc3.still_ok(); ++x)
        for (size_t y = 0; y < n; ++y) {
            int obj = c.sum_obj[c.sum_obj[x][u]][c.sum_obj[u][y]];
            if (inst.b(x, u, u, y) != c.identity[obj]) {
                acc3.fail({static_cast<int>(x), static_cast<int>(y)});
                break;
            }
        }
    report.lines.push_back(acc3.line);

    return report;
}

VerifyReport verify_derived_coherence(const ACInstance& inst, size_t sweep_cap) {
    const InstanceCore& c = inst.core;
    size_t n = c.num_objects;
    if (n * n * n * n > sweep_cap) throw CapExceededError("tuple sweep exceeds the cap");
    VerifyReport report;
    int u = c.unit_object;
    auto os = [&](int p, int q) { return c.sum_obj[p][q]; };
    auto inv = [&](int f) {
        int g = c.inverse(f);
        if (g < 0) throw ParseError("morphism is not invertible");
        return g;
    };

    AxiomCheck sym("symmetry");
    for (size_t x = 0; x < n && sym.still_ok(); ++x)
        for (size_t y = 0; y < n && sym.still_ok(); ++y)
            for (size_t z = 0; z < n && sym.still_ok(); ++z)
                for (size_t t = 0; t < n; ++t) {
                    int src = os(os(x, y), os(z, t));
                    if (c.comp(inst.b(x, z, y, t), inst.b(x, y, z, t)) != c.identity[src]) {
                        sym.fail({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z),
                                  static_cast<int>(t)});
                        break;
                    }
                }
    report.lines.push_back(sym.line);

    AxiomCheck du("unit-unitors-agree");
    if (inst.l(u) != inst.r(u)) du.fail({u});
    report.lines.push_back(du.line);

    AxiomCheck ux("unitor-exchange");
    for (size_t x = 0; x < n && ux.still_ok(); ++x) {
        int xi = static_cast<int>(x);
        // (11)(x1) -> x both ways
        int lhs1 = c.comp(inst.l(xi), c.sum_mor[inst.r(u)][inst.r(xi)]);
        int rhs1 = c.comp(inst.r(xi), c.comp(c.sum_mor[inst.l(xi)][inst.l(u)],
                                             inst.b(u, u, xi, u)));
        // (1x)(11) -> x both ways
        int lhs2 = c.comp(inst.r(xi), c.sum_mor[inst.l(xi)][inst.l(u)]);
        int rhs2 = c.comp(inst.l(xi), c.comp(c.sum_mor[inst.r(u)][inst.r(xi)],
                                             inst.b(u, xi, u, u)));
        if (lhs1 != rhs1 || lhs2 != rhs2) ux.fail({xi});
    }
    report.lines.push_back(ux.line);

    AxiomCheck da("derived-assoc");
    AxiomCheck dhl("derived-hex-left");
    AxiomCheck dhr("derived-hex-right");
    AxiomCheck dex("derived-expand");
    for (size_t xs = 0; xs < n; ++xs)
        for (size_t ys = 0; ys < n; ++ys)
            for (size_t zs = 0; zs < n; ++zs)
                for (size_t ts = 0; ts < n; ++ts) {
                    int x = static_cast<int>(xs), y = static_cast<int>(ys);
                    int z = static_cast<int>(zs), t = static_cast<int>(ts);
                    int x1 = os(x, u), zt = os(z, t), yz = os(y, z), xy = os(x, y), xz = os(x, z);
                    if (da.still_ok()) {
                        // (x1)((y1)(zt)) -> ((xy)(1z))(1t)
                        int a1 = c.sum_mor[c.identity[x1]][c.sum_mor[inst.r(y)][c.identity[zt]]];
                        int a2 = inst.b(x, u, y, zt);
                        int a3 = c.sum_mor[inv(inst.r(xy))][inst.l(zt)];
                        int a4 = inst.b(xy, u, z, t);
                        int a5 = c.sum_mor[c.sum_mor[c.identity[xy]][inv(inst.l(z))]]
                                          [c.identity[os(u, t)]];
                        int pa = c.comp(a5, c.comp(a4, c.comp(a3, c.comp(a2, a1))));
                        int b1 = c.sum_mor[c.identity[x1]][inst.b(y, u, z, t)];
                        int b2 = c.sum_mor[c.identity[x1]][c.sum_mor[c.identity[yz]][inst.l(t)]];
                        int b3 = inst.b(x, u, yz, t);
                        int b4 = c.sum_mor[c.sum_mor[inv(inst.r(x))][c.identity[yz]]]
                                          [c.identity[os(u, t)]];
                        int b5 = c.sum_mor[inst.b(x, u, y, z)][c.identity[os(u, t)]];
                        int pb = c.comp(b5, c.comp(b4, c.comp(b3, c.comp(b2, b1))));
                        if (pa != pb) da.fail({x, y, z, t});
                    }
                    if (dhl.still_ok()) {
                        // x((1y)(z1)) -> (xz)(y1)
                        int a1 = c.sum_mor[inv(inst.r(x))][c.sum_mor[inst.l(y)][inst.r(z)]];
                        int a2 = inst.b(x, u, y, z);
                        int a3 = c.sum_mor[c.identity[xy]][c.comp(inv(inst.r(z)), inst.l(z))];
                        int a4 = inst.b(x, y, z, u);
                        int pa = c.comp(a4, c.comp(a3, c.comp(a2, a1)));
                        int b1 = c.sum_mor[c.identity[x]][inst.b(u, y, z, u)];
                        int b2 = c.sum_mor[inv(inst.r(x))][c.sum_mor[inst.l(z)][inst.r(y)]];
                        int b3 = inst.b(x, u, z, y);
                        int b4 = c.sum_mor[c.identity[xz]][c.comp(inv(inst.r(y)), inst.l(y))];
                        int pb = c.comp(b4, c.comp(b3, c.comp(b2, b1)));
                        if (pa != pb) dhl.fail({x, y, z, t});
                    }
                    if (dhr.still_ok()) {
                        // (1(xy))(z1) -> ((1z)(x1))y
                        int z1 = os(z, u);
                        int a1 = c.sum_mor[inst.l(xy)][c.identity[z1]];
                        int a2 = inst.b(x, y, z, u);
                        int a3 = c.sum_mor[c.sum_mor[inv(inst.l(x))][inv(inst.r(z))]][inst.r(y)];
                        int a4 = c.sum_mor[inst.b(u, x, z, u)][c.identity[y]];
                        int pa = c.comp(a4, c.comp(a3, c.comp(a2, a1)));
                        int b1 = inst.b(u, xy, z, u);
                        int b2 = c.sum_mor[c.comp(inv(inst.r(z)), inst.l(z))][inst.r(xy)];
                        int b3 = inst.b(z, u, x, y);
                        int b4 = c.sum_mor[c.sum_mor[inv(inst.l(z))][inv(inst.r(x))]][inst.l(y)];
                        int pb = c.comp(b4, c.comp(b3, c.comp(b2, b1)));
                        if (pa != pb) dhr.fail({x, y, z, t});
                    }
                    if (dex.still_ok()) {
                        // (xy)(zt) -> ((xz)(y1))(1t)
                        int ut = os(u, t);
                        int a1 = c.sum_mor[inv(inst.r(xy))][c.identity[zt]];
                        int a2 = inst.b(xy, u, z, t);
                        int a3 = c.sum_mor[c.sum_mor[c.identity[xy]][inv(inst.r(z))]]
                                          [c.identity[ut]];
                        int a4 = c.sum_mor[inst.b(x, y, z, u)][c.identity[ut]];
                        int pa = c.comp(a4, c.comp(a3, c.comp(a2, a1)));
                        int b1 = inst.b(x, y, z, t);
                        int b2 = c.sum_mor[inv(inst.r(xz))][c.identity[os(y, t)]];
                        int b3 = inst.b(xz, u, y, t);
                        int b4 = c.sum_mor[c.sum_mor[c.identity[xz]][inv(inst.r(y))]]
                                          [c.identity[ut]];
                        int pb = c.comp(b4, c.comp(b3, c.comp(b2, b1)));
                        if (pa != pb) dex.fail({x, y, z, t});
                    }
                }
    report.lines.push_back(da.line);
    report.lines.push_back(dhl.line);
    report.lines.push_back(dhr.line);
    report.lines.push_back(dex.line);
    return report;
}

// -------------------------------------------------------------- functors

ACFunctorInstance identity_ac_functor(std::shared_ptr<const ACInstance> x) {
    ACFunctorInstance f;
    f.source = x;
    f.target = x;
    int n = x->core.num_objects;
    f.object_map.resize(n);
    for (int i = 0; i < n; ++i) f.object_map[i] = i;
    f.morphism_map.resize(x->core.num_mor());
    for (int i = 0; i < x->core.num_mor(); ++i) f.morphism_map[i] = i;
    f.f2.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.f2[i][j] = x->core.identity[x->core.sum_obj[i][j]];
    f.f1 = x->core.identity[x->core.unit_object];
    return f;
}

ACFunctorInstance cochain_twist_functor(std::shared_ptr<const ACInstance> source,
                                        std::shared_ptr<const ACInstance> target,
                                        const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                                        const Cochain& c) {
    if (c.degree != 2 || !(c.base == g) || !(c.coeff == a))
        throw ParseError("twist functor needs a degree-2 cochain over (G,A)");
    size_t n = g.order_index();
    ACFunctorInstance f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.object_map.resize(n);
    for (size_t i = 0; i < n; ++i) f.object_map[i] = static_cast<int>(i);
    f.morphism_map.resize(f.source->core.num_mor());
    for (int i = 0; i < f.source->core.num_mor(); ++i) f.morphism_map[i] = i;
    f.f2.assign(n, std::vector<int>(n));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            Cube q;
            q.dim = 1;
            q.labels = {static_cast<uint32_t>(x), static_cast<uint32_t>(y)};
            GroupElem val = cochain_value(c, q);
            size_t xy = g.index_of(g.add(g.element_at(x), g.element_at(y)));
            f.f2[x][y] = static_cast<int>(a.index_of(val) * n + xy);
        }
    f.f1 = f.target->core.identity[f.target->core.unit_object];
    return f;
}

VerifyReport verify_ac_functor(const ACFunctorInstance& f) {
    const InstanceCore& s = f.source->core;
    const InstanceCore& d = f.target->core;
    VerifyReport report;

    AxiomCheck fun("functor");
    for (int m = 0; m < s.num_mor() && fun.still_ok(); ++m) {
        int fm = f.morphism_map[m];
        if (d.mor[fm].src != f.object_map[s.mor[m].src] ||
            d.mor[fm].dst != f.object_map[s.mor[m].dst])
            fun.fail({m});
    }
    for (int x = 0; x < s.num_objects && fun.still_ok(); ++x)
        if (f.morphism_map[s.identity[x]] != d.identity[f.object_map[x]]) fun.fail({x});
    for (int m = 0; m < s.num_mor() && fun.still_ok(); ++m)
        for (int k = 0; k < s.num_mor(); ++k) {
            if (s.mor[k].src != s.mor[m].dst) continue;
            if (f.morphism_map[s.compose_t[k][m]] !=
                d.compose_t[f.morphism_map[k]][f.morphism_map[m]]) {
                fun.fail({k, m});
                break;
            }
        }
    report.lines.push_back(fun.line);

    AxiomCheck f2n("f2-natural");
    for (int m = 0; m < s.num_mor() && f2n.still_ok(); ++m)
        for (int k = 0; k < s.num_mor(); ++k) {
            int xs = s.mor[m].src, ys = s.mor[k].src;
            int xd = s.mor[m].dst, yd = s.mor[k].dst;
            int lhs = d.comp(f.morphism_map[s.sum_mor[m][k]], f.f2[xs][ys]);
            int rhs = d.comp(f.f2[xd][yd], d.sum_mor[f.morphism_map[m]][f.morphism_map[k]]);
            if (lhs != rhs) {
                f2n.fail({m, k});
                break;
            }
        }
    report.lines.push_back(f2n.line);

    AxiomCheck a1("acf1");
    int n = s.num_objects;
    for (int x = 0; x < n && a1.still_ok(); ++x)
        for (int y = 0; y < n && a1.still_ok(); ++y)
            for (int z = 0; z < n && a1.still_ok(); ++z)
                for (int t = 0; t < n; ++t) {
                    int fx = f.object_map[x], fy = f.object_map[y];
                    int fz = f.object_map[z], ft = f.object_map[t];
                    int lhs = d.comp(
                        f.f2[s.sum_obj[x][z]][s.sum_obj[y][t]],
                        d.comp(d.sum_mor[f.f2[x][z]][f.f2[y][t]],
                               f.target->b(fx, fy, fz, ft)));
                    int rhs = d.comp(
                        f.morphism_map[f.source->b(x, y, z, t)],
                        d.comp(f.f2[s.sum_obj[x][y]][s.sum_obj[z][t]],
                               d.sum_mor[f.f2[x][y]][f.f2[z][t]]));
                    if (lhs != rhs) {
                        a1.fail({x, y, z, t});
                        break;
                    }
                }
    report.lines.push_back(a1.line);

    AxiomCheck a2("acf2");
    for (int x = 0; x < n && a2.still_ok(); ++x) {
        int fx = f.object_map[x];
        int lhs_l = f.target->l(fx);
        int rhs_l = d.comp(f.morphism_map[f.source->l(x)],
                           d.comp(f.f2[s.unit_object][x], d.sum_mor[f.f1][d.identity[fx]]));
        int lhs_r = f.target->r(fx);
        int rhs_r = d.comp(f.morphism_map[f.source->r(x)],
                           d.comp(f.f2[x][s.unit_object], d.sum_mor[d.identity[fx]][f.f1]));
        if (lhs_l != rhs_l || lhs_r != rhs_r) a2.fail({x});
    }
    report.lines.push_back(a2.line);
    return report;
}

ACFunctorInstance compose_ac_functors(const ACFunctorInstance& g, const ACFunctorInstance& f) {
    if (g.source.get() != f.target.get()) throw ParseError("functor endpoints do not match");
    ACFunctorInstance h;
    h.source = f.source;
    h.target = g.target;
    h.object_map.resize(f.object_map.size());
    for (size_t i = 0; i < f.object_map.size(); ++i)
        h.object_map[i] = g.object_map[f.object_map[i]];
    h.morphism_map.resize(f.morphism_map.size());
    for (size_t i = 0; i < f.morphism_map.size(); ++i)
        h.morphism_map[i] = g.morphism_map[f.morphism_map[i]];
    int n = f.source->core.num_objects;
    h.f2.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            h.f2[x][y] = g.target->core.comp(g.morphism_map[f.f2[x][y]],
                                             g.f2[f.object_map[x]][f.object_map[y]]);
    h.f1 = g.target->core.comp(g.morphism_map[f.f1], g.f1);
    return h;
}

// ------------------------------------------------------- transformations

ACNatTransInstance identity_nat_trans(const ACFunctorInstance& f) {
    ACNatTransInstance t;
    t.source = f;
    t.target = f;
    int n = f.source->core.num_objects;
    t.components.resize(n);
    for (int x = 0; x < n; ++x)
        t.components[x] = f.target->core.identity[f.object_map[x]];
    return t;
}

VerifyReport verify_ac_nat_trans(const ACNatTransInstance& t) {
    const ACFunctorInstance& f = t.source;
    const ACFunctorInstance& g = t.target;
    if (f.source.get() != g.source.get() || f.target.get() != g.target.get())
        throw ParseError("transformation needs parallel functors");
    const InstanceCore& s = f.source->core;
    const InstanceCore& d = f.target->core;
    VerifyReport report;

    AxiomCheck nat("naturality");
    for (int x = 0; x < s.num_objects && nat.still_ok(); ++x) {
        int c = t.components[x];
        if (d.mor[c].src != f.object_map[x] || d.mor[c].dst != g.object_map[x]) nat.fail({x});
    }
    for (int m = 0; m < s.num_mor() && nat.still_ok(); ++m) {
        int xs = s.mor[m].src, xd = s.mor[m].dst;
        if (d.comp(t.components[xd], f.morphism_map[m]) !=
            d.comp(g.morphism_map[m], t.components[xs]))
            nat.fail({m});
    }
    report.lines.push_back(nat.line);

    AxiomCheck sq("product-square");
    for (int x = 0; x < s.num_objects && sq.still_ok(); ++x)
        for (int y = 0; y < s.num_objects; ++y) {
            int lhs = d.comp(t.components[s.sum_obj[x][y]], f.f2[x][y]);
            int rhs = d.comp(g.f2[x][y], d.sum_mor[t.components[x]][t.components[y]]);
            if (lhs != rhs) {
                sq.fail({x, y});
                break;
            }
        }
    report.lines.push_back(sq.line);

    AxiomCheck un("unit-triangle");
    if (d.comp(t.components[s.unit_object], f.f1) != g.f1) un.fail({s.unit_object});
    report.lines.push_back(un.line);
    return report;
}

ACNatTransInstance vertical_compose(const ACNatTransInstance& second,
                                    const ACNatTransInstance& first) {
    ACNatTransInstance out;
    out.source = first.source;
    out.target = second.target;
    const InstanceCore& d = first.source.target->core;
    out.components.resize(first.components.size());
    for (size_t x = 0; x < first.components.size(); ++x)
        out.components[x] = d.comp(second.components[x], first.components[x]);
    return out;
}

ACNatTransInstance horizontal_compose(const ACNatTransInstance& outer,
                                      const ACNatTransInstance& inner) {
    // inner : F => G between C -> D, outer : H => K between D -> E
    ACNatTransInstance out;
    out.source = compose_ac_functors(outer.source, inner.source);
    out.target = compose_ac_functors(outer.target, inner.target);
    const InstanceCore& e = outer.source.target->core;
    out.components.resize(inner.components.size());
    for (size_t x = 0; x < inner.components.size(); ++x) {
        int fx = inner.source.object_map[x];
        out.components[x] = e.comp(outer.target.morphism_map[inner.components[x]],
                                   outer.components[fx]);
    }
    return out;
}

// -------------------------------------------------------- skeletalizing

ClassifyingTriple make_triple(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                              const Cochain& z) {
    if (!(z.base == g) || !(z.coeff == a) || z.degree != 3)
        throw ParseError("triple needs a degree-3 cochain over (G,A)");
    return ClassifyingTriple{g, a, z};
}

namespace {

std::vector<int> iso_classes(const InstanceCore& c) {
    int n = c.num_objects;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<char>> connected(n, std::vector<char>(n, 0));
    for (const auto& m : c.mor) connected[m.src][m.dst] = 1;
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (connected[x][y] && connected[y][x] && cls[y] < 0) cls[y] = next;
        ++next;
    }
    return cls;
}

} // namespace

SkeletonChoices canonical_choices(const ACInstance& inst) {
    const InstanceCore& c = inst.core;
    auto cls = iso_classes(c);
    int n = c.num_objects;
    SkeletonChoices ch;
    ch.representative.resize(n);
    ch.iota.resize(n);
    std::vector<int> rep_of_class(n, -1);
    for (int x = 0; x < n; ++x)
        if (rep_of_class[cls[x]] < 0) rep_of_class[cls[x]] = x; // least object
    rep_of_class[cls[c.unit_object]] = c.unit_object;           // x_0 = 0
    for (int x = 0; x < n; ++x) {
        int rep = rep_of_class[cls[x]];
        ch.representative[x] = rep;
        if (x == rep) {
            ch.iota[x] = c.identity[x];
        } else {
            auto h = c.hom(x, rep);
            if (h.empty()) throw ParseError("object has no path to its representative");
            ch.iota[x] = h.front(); // least morphism id
        }
    }
    return ch;
}

SkeletonChoices seeded_choices(const ACInstance& inst, uint64_t seed) {
    const InstanceCore& c = inst.core;
    auto cls = iso_classes(c);
    int n = c.num_objects;
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> members(n);
    for (int x = 0; x < n; ++x) members[cls[x]].push_back(x);
    SkeletonChoices ch;
    ch.representative.resize(n);
    ch.iota.resize(n);
    std::vector<int> rep_of_class(n, -1);
    for (int x = 0; x < n; ++x) {
        int k = cls[x];
        if (rep_of_class[k] < 0)
            rep_of_class[k] = members[k][rng() % members[k].size()];
    }
    rep_of_class[cls[c.unit_object]] = c.unit_object;
    for (int x = 0; x < n; ++x) {
        int rep = rep_of_class[cls[x]];
        ch.representative[x] = rep;
        if (x == rep) {
            ch.iota[x] = c.identity[x];
        } else {
            auto h = c.hom(x, rep);
            if (h.empty()) throw ParseError("object has no path to its representative");
            ch.iota[x] = h[rng() % h.size()];
        }
    }
    return ch;
}

ClassifyingTriple skeletalize(const ACInstance& inst) {
    return skeletalize(inst, canonical_choices(inst));
}

ClassifyingTriple skeletalize(const ACInstance& inst, const SkeletonChoices& choices) {
    const InstanceCore& c = inst.core;
    int n = c.num_objects;
    auto cls = iso_classes(c);
    int nclasses = 1 + *std::max_element(cls.begin(), cls.end());

    // validate the choices
    if (static_cast<int>(choices.representative.size()) != n ||
        static_cast<int>(choices.iota.size()) != n)
        throw ParseError("choice tables have the wrong size");
    for (int x = 0; x < n; ++x) {
        int rep = choices.representative[x];
        if (cls[rep] != cls[x]) throw ParseError("representative is not isomorphic to its object");
        if (choices.representative[rep] != rep) throw ParseError("representatives must be fixed");
        int io = choices.iota[x];
        if (c.mor[io].src != x || c.mor[io].dst != rep)
            throw ParseError("iota must map the object to its representative");
        if (x == rep && io != c.identity[x]) throw ParseError("iota at a representative must be the identity");
        for (int y = 0; y < n; ++y)
            if (cls[y] == cls[x] && choices.representative[y] != rep)
                throw ParseError("class members must share one representative");
    }
    if (choices.representative[c.unit_object] != c.unit_object)
        throw ParseError("the unit must represent its class");

    // pi_0: classes with the induced sum
    std::vector<std::vector<size_t>> table(nclasses, std::vector<size_t>(nclasses));
    for (int i = 0; i < nclasses; ++i)
        for (int j = 0; j < nclasses; ++j) table[i][j] = static_cast<size_t>(-1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            size_t s = cls[c.sum_obj[x][y]];
            size_t& slot = table[cls[x]][cls[y]];
            if (slot == static_cast<size_t>(-1))
                slot = s;
            else if (slot != s)
                throw ParseError("object sum is not well defined on classes");
        }
    size_t zero_class = cls[c.unit_object];
    // commutativity, associativity, inverses are certified by the
    // canonicalization below (it fails on non-groups)
    TableGroupIso pi0 = canonicalize_group_table(table, zero_class);

    // pi_1: automorphisms of the unit object under composition
    std::vector<int> aut = c.hom(c.unit_object, c.unit_object);
    std::sort(aut.begin(), aut.end());
    size_t na = aut.size();
    std::vector<size_t> aut_pos(c.num_mor(), static_cast<size_t>(-1));
    for (size_t i = 0; i < na; ++i) aut_pos[aut[i]] = i;
    std::vector<std::vector<size_t>> aut_table(na, std::vector<size_t>(na));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) aut_table[i][j] = aut_pos[c.comp(aut[i], aut[j])];
    // Eckmann-Hilton: composition equals the conjugated sum
    int d = inst.l(c.unit_object);
    if (d != inst.r(c.unit_object)) throw ParseError("unit unitors disagree");
    int dinv = c.inverse(d);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) {
            int hat = c.comp(d, c.comp(c.sum_mor[aut[i]][aut[j]], dinv));
            if (aut_pos[hat] != aut_table[i][j])
                throw ParseError("composition and sum disagree on pi_1");
        }
    size_t zero_aut = aut_pos[c.identity[c.unit_object]];
    TableGroupIso pi1 = canonicalize_group_table(aut_table, zero_aut);

    // delta_{x}: Aut(0) -> Aut(x), u |-> r_x (id_x + u) r_x^{-1}
    auto delta = [&](int x, int u) {
        return c.comp(inst.r(x), c.comp(c.sum_mor[c.identity[x]][u], c.inverse(inst.r(x))));
    };

    // z(g1,g2,g3,g4) from the transport diagram
    std::vector<int> rep_of_class(nclasses, -1);
    for (int x = 0; x < n; ++x) rep_of_class[cls[x]] = choices.representative[x];
    auto iota_of = [&](int obj) { return choices.iota[obj]; };

    auto z_fn = [&](const GroupElem& v1, const GroupElem& v2, const GroupElem& v3,
                    const GroupElem& v4) {
        int x1 = rep_of_class[pi0.from_canonical[pi0.group.index_of(v1)]];
        int x2 = rep_of_class[pi0.from_canonical[pi0.group.index_of(v2)]];
        int x3 = rep_of_class[pi0.from_canonical[pi0.group.index_of(v3)]];
        int x4 = rep_of_class[pi0.from_canonical[pi0.group.index_of(v4)]];
        int s12 = c.sum_obj[x1][x2], s34 = c.sum_obj[x3][x4];
        int s13 = c.sum_obj[x1][x3], s24 = c.sum_obj[x2][x4];
        int top1 = c.sum_mor[iota_of(s12)][iota_of(s34)];
        int top_obj = c.sum_obj[c.mor[iota_of(s12)].dst][c.mor[iota_of(s34)].dst];
        int top = c.comp(iota_of(top_obj), top1);
        int bot1 = c.sum_mor[iota_of(s13)][iota_of(s24)];
        int bot_obj = c.sum_obj[c.mor[iota_of(s13)].dst][c.mor[iota_of(s24)].dst];
        int bot = c.comp(iota_of(bot_obj), bot1);
        int phi = c.comp(bot, c.comp(inst.b(x1, x2, x3, x4), c.inverse(top)));
        // solve H(u) = phi with H(u) = delta_{x_rep}(u)
        int target_obj = c.mor[phi].dst;
        for (size_t ui = 0; ui < na; ++ui)
            if (delta(target_obj, aut[ui]) == phi) return pi1.to_canonical[ui];
        throw ParseError("transport morphism is not in the image of delta");
    };
    Cochain z = cochain_from_function3(pi0.group, pi1.group, z_fn);
    CocycleReport check = is_cocycle3(z);
    if (!check.ok) throw ParseError("extracted cochain is not a cocycle");
    return ClassifyingTriple{pi0.group, pi1.group, z};
}

// --------------------------------------------------------- equivalence

std::optional<EquivalenceWitness> equivalent(const ClassifyingTriple& t1,
                                             const ClassifyingTriple& t2, size_t cap) {
    if (!t1.group.isomorphic_to(t2.group) || !t1.coeff.isomorphic_to(t2.coeff))
        return std::nullopt;
    auto base_isos = enumerate_isomorphisms(t1.group, t2.group);
    auto coeff_isos = enumerate_isomorphisms(t1.coeff, t2.coeff);
    // identity isomorphisms first, then lexicographic search order
    auto is_identity = [](const GroupHom& h) {
        if (!(h.source() == h.target())) return false;
        return h.matrix() == IntMatrix::identity(h.source().rank());
    };
    auto reorder = [&](std::vector<GroupHom>& isos) {
        for (size_t i = 0; i < isos.size(); ++i)
            if (is_identity(isos[i])) {
                std::rotate(isos.begin(), isos.begin() + i, isos.begin() + i + 1);
                break;
            }
    };
    reorder(base_isos);
    reorder(coeff_isos);
    for (const GroupHom& g : base_isos) {
        Cochain pulled = pullback(g, t2.cocycle, cap);
        for (const GroupHom& f : coeff_isos) {
            Cochain pushed = pushforward(f, t1.cocycle);
            Cochain w = cochain_sub(pulled, pushed);
            auto witness = coboundary_witness(w, cap);
            if (witness)
                return EquivalenceWitness{g, f, *witness};
        }
    }
    return std::nullopt;
}

std::vector<ClassifyingTriple> classify_triples(const FiniteAbelianGroup& g,
                                                const FiniteAbelianGroup& a, size_t cap) {
    auto reps = cocycle_representatives3(g, a, cap);
    std::vector<ClassifyingTriple> out;
    std::vector<char> used(reps.size(), 0);
    for (size_t i = 0; i < reps.size(); ++i) {
        if (used[i]) continue;
        ClassifyingTriple t{g, a, reps[i]};
        out.push_back(t);
        for (size_t j = i + 1; j < reps.size(); ++j) {
            if (used[j]) continue;
            if (equivalent(t, ClassifyingTriple{g, a, reps[j]}, cap)) used[j] = 1;
        }
    }
    return out;
}

} // namespace accube
