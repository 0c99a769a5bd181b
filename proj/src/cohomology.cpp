#include "accube/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace accube {

namespace {

using SparseRows = std::vector<std::vector<std::pair<uint32_t, long>>>;

// sparse coboundary constraints: one row per generator of Q_n(G), with
// entries over the basis of Q_{n-1}(G); memoized, they are reused by the
// matrix route, the oracle, and representative enumeration
const SparseRows& constraint_rows(const FiniteAbelianGroup& g, int n, size_t cap) {
    static std::map<std::pair<std::vector<long>, int>, SparseRows> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(g.moduli(), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const NormalizedBasis& lower = basis_cache(g, n - 1, cap);
        const NormalizedBasis& upper = basis_cache(g, n, cap);
        SparseRows rows;
        rows.reserve(upper.size());
        for (const Cube& gen : upper.generators) rows.push_back(differential_column(g, lower, gen));
        it = cache.emplace(key, std::move(rows)).first;
    }
    return it->second;
}

// rows generating im(d^{n-1}) inside B^{k_{n-1}}: integer row Z of the
// delta_{n-1} matrix for each generator Z of Q_{n-2}(G)
std::vector<std::vector<long>> image_rows(const FiniteAbelianGroup& g, int n, size_t cap) {
    std::vector<std::vector<long>> rows;
    if (n < 2) return rows;
    const NormalizedBasis& mid = basis_cache(g, n - 1, cap);
    const NormalizedBasis& low = basis_cache(g, n - 2, cap);
    rows.assign(low.size(), std::vector<long>(mid.size(), 0));
    for (size_t y = 0; y < mid.size(); ++y)
        for (auto& [z, coeff] : differential_column(g, low, mid.generators[y]))
            rows[z][y] = coeff;
    return rows;
}

size_t checked_pow(size_t base, size_t exp, size_t cap) {
    size_t r = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// addition table on element indices, for tight sweep loops
std::vector<uint32_t> add_table(const FiniteAbelianGroup& g) {
    size_t n = g.order_index();
    std::vector<uint32_t> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            t[i * n + j] = static_cast<uint32_t>(g.index_of(g.add(g.element_at(i), g.element_at(j))));
    return t;
}

} // namespace

bool Cochain::is_zero() const {
    for (const auto& v : values)
        for (long r : v)
            if (r != 0) return false;
    return true;
}

std::vector<long> Cochain::lex_key() const {
    std::vector<long> key;
    for (const auto& v : values) key.insert(key.end(), v.begin(), v.end());
    return key;
}

bool Cochain::operator==(const Cochain& o) const {
    return base == o.base && coeff == o.coeff && degree == o.degree && values == o.values;
}

Cochain zero_cochain(const FiniteAbelianGroup& base, const FiniteAbelianGroup& coeff, int degree,
                     size_t cap) {
    if (degree < 1) throw ParseError("cochain degree must be >= 1");
    Cochain f;
    f.base = base;
    f.coeff = coeff;
    f.degree = degree;
    f.values.assign(basis_cache(base, degree - 1, cap).size(), coeff.zero());
    return f;
}

GroupElem cochain_value(const Cochain& f, const Cube& x) {
    if (x.dim != f.degree - 1) throw ParseError("cochain/cube dimension mismatch");
    const NormalizedBasis& basis = basis_cache(f.base, f.degree - 1);
    size_t pos = basis.find(x);
    return pos == NormalizedBasis::npos ? f.coeff.zero() : f.values[pos];
}

GroupElem cochain_value(const Cochain& f, const Chain& c) {
    GroupElem acc = f.coeff.zero();
    long e = f.coeff.exponent();
    for (const auto& [cube, coeff] : c.terms()) {
        Int r = coeff % e;
        long k = r.get_si();
        acc = f.coeff.add(acc, f.coeff.scalar_mul(k, cochain_value(f, cube)));
    }
    return acc;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.base != b.base || a.coeff != b.coeff || a.degree != b.degree)
        throw ParseError("cochain shape mismatch");
    Cochain c = a;
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.coeff.add(a.values[i], b.values[i]);
    return c;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    if (a.base != b.base || a.coeff != b.coeff || a.degree != b.degree)
        throw ParseError("cochain shape mismatch");
    Cochain c = a;
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.coeff.sub(a.values[i], b.values[i]);
    return c;
}

Cochain coboundary(const Cochain& f, size_t cap) {
    Cochain out = zero_cochain(f.base, f.coeff, f.degree + 1, cap);
    const NormalizedBasis& upper = basis_cache(f.base, f.degree, cap);
    for (size_t i = 0; i < upper.size(); ++i) {
        Chain d = differential(f.base, upper.generators[i]);
        out.values[i] = cochain_value(f, d);
    }
    return out;
}

Cochain cochain_from_function3(
    const FiniteAbelianGroup& base, const FiniteAbelianGroup& coeff,
    const std::function<GroupElem(const GroupElem&, const GroupElem&, const GroupElem&,
                                  const GroupElem&)>& fn,
    size_t cap) {
    Cochain z = zero_cochain(base, coeff, 3, cap);
    const NormalizedBasis& basis = basis_cache(base, 2, cap);
    for (size_t i = 0; i < basis.size(); ++i) {
        const Cube& x = basis.generators[i];
        z.values[i] = fn(base.element_at(x.labels[0]), base.element_at(x.labels[1]),
                         base.element_at(x.labels[2]), base.element_at(x.labels[3]));
        coeff.check_element(z.values[i]);
    }
    return z;
}

DenseTable3 dense_table3(const Cochain& z) {
    if (z.degree != 3) throw ParseError("dense_table3 needs a degree-3 cochain");
    DenseTable3 t;
    t.base = z.base;
    t.coeff = z.coeff;
    t.n = z.base.order_index();
    t.vals.assign(t.n * t.n * t.n * t.n, 0);
    const NormalizedBasis& basis = basis_cache(z.base, 2);
    for (size_t i = 0; i < basis.size(); ++i) {
        const Cube& x = basis.generators[i];
        t.vals[((size_t(x.labels[0]) * t.n + x.labels[1]) * t.n + x.labels[2]) * t.n +
               x.labels[3]] = static_cast<uint32_t>(z.coeff.index_of(z.values[i]));
    }
    return t;
}

Cochain cochain_from_dense3(const DenseTable3& table) {
    return cochain_from_function3(table.base, table.coeff,
                                  [&](const GroupElem& x, const GroupElem& y, const GroupElem& z,
                                      const GroupElem& t) {
                                      return table.coeff.element_at(
                                          table.at(table.base.index_of(x), table.base.index_of(y),
                                                   table.base.index_of(z), table.base.index_of(t)));
                                  });
}

CocycleReport is_cocycle3(const Cochain& z, size_t cap) {
    if (z.degree != 3) throw ParseError("is_cocycle3 needs a degree-3 cochain");
    CocycleReport report;
    size_t n = z.base.order_index();
    if (checked_pow(n, 8, cap) > cap)
        throw CapExceededError("cocycle check sweep exceeds the enumeration cap");
    DenseTable3 t = dense_table3(z);

    // normalization: zero on every degenerate 2-cube
    const FiniteAbelianGroup& g = z.base;
    for (size_t x = 0; x < n && report.ok; ++x)
        for (size_t y = 0; y < n && report.ok; ++y)
            for (size_t w = 0; w < n && report.ok; ++w)
                for (size_t v = 0; v < n && report.ok; ++v) {
                    Cube c;
                    c.dim = 2;
                    c.labels = {static_cast<uint32_t>(x), static_cast<uint32_t>(y),
                                static_cast<uint32_t>(w), static_cast<uint32_t>(v)};
                    if (is_degenerate(g, c) && t.at(x, y, w, v) != 0) {
                        report.ok = false;
                        report.violation = CocycleViolation{
                            "normalization",
                            {g.element_at(x), g.element_at(y), g.element_at(w), g.element_at(v)}};
                    }
                }
    if (!report.ok) return report;

    std::vector<uint32_t> gadd = add_table(g);
    std::vector<uint32_t> badd = add_table(z.coeff);
    auto ga = [&](uint32_t a, uint32_t b) { return gadd[size_t(a) * n + b]; };
    size_t m = z.coeff.order_index();
    auto ba = [&](uint32_t a, uint32_t b) { return badd[size_t(a) * m + b]; };
    uint32_t idx[8];
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2])
                for (idx[3] = 0; idx[3] < n; ++idx[3])
                    for (idx[4] = 0; idx[4] < n; ++idx[4])
                        for (idx[5] = 0; idx[5] < n; ++idx[5])
                            for (idx[6] = 0; idx[6] < n; ++idx[6])
                                for (idx[7] = 0; idx[7] < n; ++idx[7]) {
                                    uint32_t x = idx[0], y = idx[1], w = idx[2], v = idx[3];
                                    uint32_t x1 = idx[4], y1 = idx[5], w1 = idx[6], v1 = idx[7];
                                    // lhs + (-rhs) of the 16-term condition
                                    uint32_t lhs = t.at(x, y, w, v);
                                    lhs = ba(lhs, t.at(x1, y1, w1, v1));
                                    lhs = ba(lhs, t.at(ga(x, w), ga(y, v), ga(x1, w1), ga(y1, v1)));
                                    lhs = ba(lhs, t.at(x, w, x1, w1));
                                    lhs = ba(lhs, t.at(y, v, y1, v1));
                                    uint32_t rhs = t.at(ga(x, x1), ga(y, y1), ga(w, w1), ga(v, v1));
                                    rhs = ba(rhs, t.at(ga(x, y), ga(w, v), ga(x1, y1), ga(w1, v1)));
                                    rhs = ba(rhs, t.at(x, y, x1, y1));
                                    rhs = ba(rhs, t.at(w, v, w1, v1));
                                    if (lhs != rhs) {
                                        report.ok = false;
                                        report.violation = CocycleViolation{
                                            "cocycle",
                                            {g.element_at(x), g.element_at(y), g.element_at(w),
                                             g.element_at(v), g.element_at(x1), g.element_at(y1),
                                             g.element_at(w1), g.element_at(v1)}};
                                        return report;
                                    }
                                }
    return report;
}

bool check_middle_antisymmetry(const Cochain& z) {
    DenseTable3 t = dense_table3(z);
    size_t n = t.n;
    const FiniteAbelianGroup& b = z.coeff;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t w = 0; w < n; ++w)
                for (size_t v = 0; v < n; ++v) {
                    GroupElem s = b.add(b.element_at(t.at(x, y, w, v)), b.element_at(t.at(x, w, y, v)));
                    if (!b.is_zero(s)) return false;
                }
    return true;
}

std::optional<Cochain> coboundary_witness(const Cochain& z, size_t cap) {
    if (z.degree != 3) throw ParseError("coboundary_witness needs a degree-3 cochain");
    {
        CocycleReport r = is_cocycle3(z, cap);
        if (!r.ok) throw ParseError("coboundary_witness requires a cocycle");
    }
    const NormalizedBasis& b1 = basis_cache(z.base, 1, cap);
    const NormalizedBasis& b2 = basis_cache(z.base, 2, cap);
    size_t k1 = b1.size(), k2 = b2.size();
    // integer system: row per 2-cube X, unknowns c(Y); (dc)(X) = z(X)
    IntMatrix m(k2, k1);
    for (size_t x = 0; x < k2; ++x)
        for (auto& [y, coeff] : differential_column(z.base, b1, b2.generators[x]))
            m.at(x, y) = coeff;
    Cochain witness = zero_cochain(z.base, z.coeff, 2, cap);
    for (size_t j = 0; j < z.coeff.rank(); ++j) {
        long q = z.coeff.moduli()[j];
        std::vector<long> moduli(k2, q), rhs(k2);
        for (size_t x = 0; x < k2; ++x) rhs[x] = z.values[x][j];
        auto sol = solve_affine(m, moduli, rhs);
        if (!sol) return std::nullopt;
        for (size_t y = 0; y < k1; ++y) witness.values[y][j] = (*sol)[y];
    }
    Cochain back = coboundary(witness, cap);
    if (!(back == z)) throw ParseError("coboundary witness verification failed");
    return witness;
}

FiniteAbelianGroup cohomology_group(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b,
                                    int n, size_t cap) {
    if (n < 1) throw ParseError("cohomology degree must be >= 1");
    const NormalizedBasis& basis = basis_cache(g, n - 1, cap);
    size_t k = basis.size();
    if (k == 0 || b.rank() == 0) return {};

    const SparseRows& rows = constraint_rows(g, n, cap);
    auto im = image_rows(g, n, cap);

    std::vector<long> moduli;
    for (long q : b.moduli()) {
        ModKernelAccumulator acc(k, q);
        for (const auto& row : rows) acc.add_constraint(row);
        const auto& ker = acc.generators();
        std::vector<std::vector<long>> img;
        for (const auto& row : im) {
            std::vector<long> v(k);
            bool nonzero = false;
            for (size_t i = 0; i < k; ++i) {
                v[i] = ((row[i] % q) + q) % q;
                nonzero |= v[i] != 0;
            }
            if (nonzero) img.push_back(std::move(v));
        }
        FiniteAbelianGroup part = quotient_group_mod_q(ker, img, q, k);
        for (long d : part.moduli()) moduli.push_back(d);
    }
    return FiniteAbelianGroup(moduli).canonical();
}

namespace {

// counts-based reconstruction of a finite abelian group from the number
// of elements killed by each divisor
FiniteAbelianGroup group_from_counts(const std::function<size_t(long)>& count_killed,
                                     size_t order) {
    std::vector<long> primes;
    size_t rem = order;
    for (long p = 2; static_cast<size_t>(p) * p <= rem; ++p)
        if (rem % p == 0) {
            primes.push_back(p);
            while (rem % p == 0) rem /= p;
        }
    if (rem > 1) primes.push_back(static_cast<long>(rem));
    std::map<long, std::vector<int>> p_exponents;
    for (long p : primes) {
        std::vector<size_t> cnt{1};
        long pk = 1;
        for (;;) {
            pk *= p;
            size_t c = count_killed(pk);
            cnt.push_back(c);
            if (c == cnt[cnt.size() - 2]) break;
        }
        std::vector<int> ge;
        for (size_t j = 1; j < cnt.size(); ++j) {
            size_t ratio = cnt[j] / cnt[j - 1];
            int e = 0;
            while (ratio > 1) {
                ratio /= p;
                ++e;
            }
            ge.push_back(e);
        }
        std::vector<int> exps;
        for (size_t j = 0; j < ge.size(); ++j) {
            int here = ge[j];
            int next = j + 1 < ge.size() ? ge[j + 1] : 0;
            for (int c = 0; c < here - next; ++c) exps.push_back(static_cast<int>(j) + 1);
        }
        std::sort(exps.rbegin(), exps.rend());
        if (!exps.empty()) p_exponents[p] = exps;
    }
    size_t nfactors = 0;
    for (auto& [p, exps] : p_exponents) nfactors = std::max(nfactors, exps.size());
    std::vector<long> invariant(nfactors, 1);
    for (auto& [p, exps] : p_exponents)
        for (size_t i = 0; i < exps.size(); ++i) {
            long pk = 1;
            for (int e = 0; e < exps[i]; ++e) pk *= p;
            invariant[i] *= pk;
        }
    std::reverse(invariant.begin(), invariant.end());
    return FiniteAbelianGroup(invariant);
}

// enumerate all cocycle value tables (element-index vectors over the
// basis) either by brute force or from modular kernel generators
std::vector<std::vector<uint32_t>> enumerate_cocycle_vectors(const FiniteAbelianGroup& g,
                                                             const FiniteAbelianGroup& b, int n,
                                                             size_t cap) {
    const NormalizedBasis& basis = basis_cache(g, n - 1, cap);
    size_t k = basis.size();
    size_t nb = b.order_index();
    const SparseRows& rows = constraint_rows(g, n, cap);
    std::vector<std::vector<uint32_t>> out;

    if (k == 0 || nb == 1) {
        out.push_back(std::vector<uint32_t>(k, 0));
        return out;
    }
    if (checked_pow(nb, k, cap) <= cap) {
        // brute force over all cochains
        std::vector<uint32_t> f(k, 0);
        for (;;) {
            bool ok = true;
            for (const auto& row : rows) {
                GroupElem acc = b.zero();
                for (auto& [y, coeff] : row)
                    acc = b.add(acc, b.scalar_mul(coeff, b.element_at(f[y])));
                if (!b.is_zero(acc)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(f);
            size_t p = k;
            bool done = false;
            while (p-- > 0) {
                if (++f[p] < nb) break;
                f[p] = 0;
                if (p == 0) done = true;
            }
            if (done) break;
        }
        return out;
    }

    // kernel route: per coefficient factor, solutions mod q_j, then the
    // cartesian product across factors
    std::vector<std::vector<std::vector<long>>> per_factor;
    Int total = 1;
    for (long q : b.moduli()) {
        ModKernelAccumulator acc(k, q);
        for (const auto& row : rows) acc.add_constraint(row);
        const auto& ker = acc.generators();
        total *= subgroup_order_mod_q(ker, q);
        if (total > static_cast<unsigned long>(cap))
            throw CapExceededError("cocycle set too large to enumerate");
        per_factor.push_back(enumerate_subgroup_mod_q(ker, q, k, cap));
    }
    std::vector<size_t> pick(per_factor.size(), 0);
    for (;;) {
        std::vector<uint32_t> f(k);
        for (size_t y = 0; y < k; ++y) {
            GroupElem v(b.rank());
            for (size_t j = 0; j < per_factor.size(); ++j) v[j] = per_factor[j][pick[j]][y];
            f[y] = static_cast<uint32_t>(b.index_of(v));
        }
        out.push_back(std::move(f));
        size_t p = per_factor.size();
        bool done = false;
        while (p-- > 0) {
            if (++pick[p] < per_factor[p].size()) break;
            pick[p] = 0;
            if (p == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

// all coboundary value vectors (dg for every g in C^{n-1})
std::vector<std::vector<uint32_t>> enumerate_coboundary_vectors(const FiniteAbelianGroup& g,
                                                                const FiniteAbelianGroup& b, int n,
                                                                size_t cap) {
    const NormalizedBasis& mid = basis_cache(g, n - 1, cap);
    size_t k = mid.size();
    std::vector<std::vector<uint32_t>> out;
    if (n < 2 || k == 0 || b.rank() == 0) {
        out.push_back(std::vector<uint32_t>(k, 0));
        return out;
    }
    const NormalizedBasis& low = basis_cache(g, n - 2, cap);
    size_t k0 = low.size();
    size_t nb = b.order_index();
    if (checked_pow(nb, k0, cap) > cap)
        throw CapExceededError("coboundary enumeration exceeds the cap");
    auto im = image_rows(g, n, cap); // k0 rows of length k
    std::set<std::vector<uint32_t>> seen;
    std::vector<uint32_t> gv(k0, 0);
    for (;;) {
        std::vector<uint32_t> w(k);
        for (size_t y = 0; y < k; ++y) {
            GroupElem acc = b.zero();
            for (size_t z = 0; z < k0; ++z)
                if (im[z][y] != 0) acc = b.add(acc, b.scalar_mul(im[z][y], b.element_at(gv[z])));
            w[y] = static_cast<uint32_t>(b.index_of(acc));
        }
        seen.insert(std::move(w));
        size_t p = k0;
        bool done = k0 == 0;
        while (p-- > 0) {
            if (++gv[p] < nb) break;
            gv[p] = 0;
            if (p == 0) done = true;
        }
        if (done) break;
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

} // namespace

std::optional<FiniteAbelianGroup> cohomology_group_enum(const FiniteAbelianGroup& g,
                                                        const FiniteAbelianGroup& b, int n,
                                                        size_t cap) {
    if (n < 1) throw ParseError("cohomology degree must be >= 1");
    const NormalizedBasis& basis = basis_cache(g, n - 1, cap);
    size_t k = basis.size();
    if (k == 0 || b.rank() == 0) return FiniteAbelianGroup{};
    size_t nb = b.order_index();

    if (checked_pow(nb, k, cap) <= cap) {
        auto kernel = enumerate_cocycle_vectors(g, b, n, cap);
        auto image = enumerate_coboundary_vectors(g, b, n, cap);
        std::set<std::vector<uint32_t>> image_set(image.begin(), image.end());
        size_t order = kernel.size() / image_set.size();
        auto count_killed = [&](long d) {
            size_t cnt = 0;
            for (const auto& f : kernel) {
                std::vector<uint32_t> df(k);
                for (size_t y = 0; y < k; ++y)
                    df[y] = static_cast<uint32_t>(b.index_of(b.scalar_mul(d, b.element_at(f[y]))));
                if (image_set.count(df)) ++cnt;
            }
            return cnt / image_set.size();
        };
        return group_from_counts(count_killed, order);
    }

    // per-prime Gaussian elimination (fields only)
    for (long q : b.moduli()) {
        bool prime = q >= 2;
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) return std::nullopt;
    }
    auto rows = constraint_rows(g, n, cap);
    auto im = image_rows(g, n, cap);
    std::vector<long> moduli;
    for (long p : b.moduli()) {
        size_t rank_constraints = 0, rank_image = 0;
        {
            std::vector<std::vector<long>> echelon;
            std::vector<size_t> pivots;
            auto insert = [&](std::vector<long> v) {
                for (size_t r = 0; r < echelon.size(); ++r) {
                    long f = v[pivots[r]] % p;
                    if (f == 0) continue;
                    for (size_t j = 0; j < k; ++j)
                        v[j] = ((v[j] - f * echelon[r][j]) % p + p) % p;
                }
                size_t lead = k;
                for (size_t j = 0; j < k; ++j)
                    if (v[j] % p != 0) {
                        lead = j;
                        break;
                    }
                if (lead == k) return;
                long inv = 1;
                for (long c = 1; c < p; ++c)
                    if ((c * (v[lead] % p)) % p == 1) inv = c;
                for (size_t j = 0; j < k; ++j) v[j] = ((v[j] % p) * inv % p + p) % p;
                echelon.push_back(std::move(v));
                pivots.push_back(lead);
            };
            for (const auto& row : rows) {
                std::vector<long> v(k, 0);
                for (auto& [c, val] : row) v[c] = ((val % p) + p) % p;
                insert(std::move(v));
            }
            rank_constraints = echelon.size();
            echelon.clear();
            pivots.clear();
            for (const auto& row : im) {
                std::vector<long> v(k);
                for (size_t j = 0; j < k; ++j) v[j] = ((row[j] % p) + p) % p;
                insert(std::move(v));
            }
            rank_image = echelon.size();
        }
        size_t dim = k - rank_constraints - rank_image;
        for (size_t i = 0; i < dim; ++i) moduli.push_back(p);
    }
    return FiniteAbelianGroup(moduli).canonical();
}

std::vector<Cochain> cocycle_representatives3(const FiniteAbelianGroup& g,
                                              const FiniteAbelianGroup& b, size_t cap) {
    const NormalizedBasis& basis = basis_cache(g, 2, cap);
    size_t k = basis.size();
    auto cocycles = enumerate_cocycle_vectors(g, b, 3, cap);
    auto coboundaries = enumerate_coboundary_vectors(g, b, 3, cap);
    std::sort(cocycles.begin(), cocycles.end());
    std::set<std::vector<uint32_t>> visited;
    std::vector<Cochain> reps;
    for (const auto& f : cocycles) {
        if (visited.count(f)) continue;
        Cochain z = zero_cochain(g, b, 3, cap);
        for (size_t y = 0; y < k; ++y) z.values[y] = b.element_at(f[y]);
        reps.push_back(std::move(z));
        for (const auto& d : coboundaries) {
            std::vector<uint32_t> s(k);
            for (size_t y = 0; y < k; ++y)
                s[y] = static_cast<uint32_t>(b.index_of(b.add(b.element_at(f[y]), b.element_at(d[y]))));
            visited.insert(std::move(s));
        }
    }
    return reps;
}

Cochain pushforward(const GroupHom& f, const Cochain& z) {
    if (!(f.source() == z.coeff)) throw ParseError("pushforward coefficient mismatch");
    Cochain out = z;
    out.coeff = f.target();
    for (auto& v : out.values) v = f.apply(v);
    return out;
}

Cochain pullback(const GroupHom& g, const Cochain& z_on_target, size_t cap) {
    if (!(g.target() == z_on_target.base)) throw ParseError("pullback base mismatch");
    Cochain out = zero_cochain(g.source(), z_on_target.coeff, z_on_target.degree, cap);
    const NormalizedBasis& basis = basis_cache(g.source(), z_on_target.degree - 1, cap);
    for (size_t i = 0; i < basis.size(); ++i) {
        const Cube& x = basis.generators[i];
        std::vector<GroupElem> labels;
        labels.reserve(x.labels.size());
        for (uint32_t l : x.labels) labels.push_back(g.apply(g.source().element_at(l)));
        Cube image = cube_from_elements(z_on_target.base, labels);
        out.values[i] = cochain_value(z_on_target, image);
    }
    return out;
}

} // namespace accube
