#include "accube/cubical.hpp"

#include <cmath>
#include <mutex>

namespace accube {

Cube cube_from_elements(const FiniteAbelianGroup& a, const std::vector<GroupElem>& labels) {
    size_t n = labels.size();
    if (n == 0 || (n & (n - 1)) != 0) throw ParseError("cube needs 2^n labels");
    int dim = 0;
    while ((size_t(1) << dim) < n) ++dim;
    Cube x;
    x.dim = dim;
    x.labels.reserve(n);
    for (const auto& e : labels) {
        a.check_element(e);
        x.labels.push_back(static_cast<uint32_t>(a.index_of(e)));
    }
    return x;
}

std::vector<GroupElem> cube_elements(const FiniteAbelianGroup& a, const Cube& x) {
    std::vector<GroupElem> out;
    out.reserve(x.labels.size());
    for (uint32_t idx : x.labels) out.push_back(a.element_at(idx));
    return out;
}

void Chain::add(const Cube& cube, const Int& coeff) {
    if (coeff == 0) return;
    if (cube.dim != dim_) throw ParseError("chain terms must share dimension");
    auto it = terms_.find(cube);
    if (it == terms_.end()) {
        terms_.emplace(cube, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

// insert bit b at position i (1-based) into an (n-1)-bit word
size_t insert_bit(size_t w, int i, int n, int b) {
    int low_bits = n - i;
    size_t high = w >> low_bits;
    size_t low = w & ((size_t(1) << low_bits) - 1);
    return (high << (low_bits + 1)) | (size_t(b) << low_bits) | low;
}

} // namespace

Cube face(const FiniteAbelianGroup& a, const Cube& x, int i, Side side) {
    (void)a;
    int n = x.dim;
    if (i < 1 || i > n) throw ParseError("face index out of range");
    Cube y;
    y.dim = n - 1;
    size_t m = size_t(1) << (n - 1);
    y.labels.resize(m);
    int b = side == Side::lower ? 0 : 1;
    for (size_t w = 0; w < m; ++w) y.labels[w] = x.labels[insert_bit(w, i, n, b)];
    return y;
}

Cube face_sum(const FiniteAbelianGroup& a, const Cube& x, int i) {
    Cube lo = face(a, x, i, Side::lower);
    Cube up = face(a, x, i, Side::upper);
    Cube y;
    y.dim = lo.dim;
    y.labels.resize(lo.labels.size());
    for (size_t w = 0; w < lo.labels.size(); ++w) {
        GroupElem s = a.add(a.element_at(lo.labels[w]), a.element_at(up.labels[w]));
        y.labels[w] = static_cast<uint32_t>(a.index_of(s));
    }
    return y;
}

Chain differential(const FiniteAbelianGroup& a, const Cube& x) {
    if (x.dim < 1) throw ParseError("differential needs dim >= 1");
    Chain out(a, x.dim - 1);
    for (int i = 1; i <= x.dim; ++i) {
        long sign = (i % 2 == 1) ? -1 : 1;
        out.add(face_sum(a, x, i), sign);
        out.add(face(a, x, i, Side::upper), -sign);
        out.add(face(a, x, i, Side::lower), -sign);
    }
    return out;
}

Chain differential(const Chain& c) {
    Chain out(c.group(), c.dim() - 1);
    for (const auto& [cube, coeff] : c.terms()) {
        Chain d = differential(c.group(), cube);
        for (const auto& [y, k] : d.terms()) out.add(y, k * coeff);
    }
    return out;
}

bool is_slab(const FiniteAbelianGroup& a, const Cube& x) {
    (void)a;
    int n = x.dim;
    if (n == 0) return x.labels[0] == 0;
    for (int i = 1; i <= n; ++i) {
        bool lower_zero = true, upper_zero = true;
        for (size_t v = 0; v < x.labels.size(); ++v) {
            int bit = static_cast<int>((v >> (n - i)) & 1);
            if (x.labels[v] != 0) {
                if (bit == 0)
                    lower_zero = false;
                else
                    upper_zero = false;
            }
        }
        if (lower_zero || upper_zero) return true;
    }
    return false;
}

bool is_diagonal(const FiniteAbelianGroup& a, const Cube& x) {
    (void)a;
    int n = x.dim;
    if (n < 2) return false;
    for (int i = 1; i <= n - 1; ++i) {
        bool ok = true;
        for (size_t v = 0; v < x.labels.size() && ok; ++v) {
            int bi = static_cast<int>((v >> (n - i)) & 1);
            int bj = static_cast<int>((v >> (n - i - 1)) & 1);
            if (bi != bj && x.labels[v] != 0) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool is_degenerate(const FiniteAbelianGroup& a, const Cube& x) {
    return is_slab(a, x) || is_diagonal(a, x);
}

size_t NormalizedBasis::find(const Cube& x) const {
    auto it = position.find(x);
    return it == position.end() ? npos : it->second;
}

NormalizedBasis normalized_basis(const FiniteAbelianGroup& a, int n, size_t cap) {
    if (n < 0) throw ParseError("negative dimension");
    NormalizedBasis basis;
    basis.group = a;
    basis.dim = n;
    size_t nelems = a.order_index();
    size_t verts = size_t(1) << n;
    // candidate count |A|^(2^n) against the enumeration cap
    double log_candidates = static_cast<double>(verts) * std::log2(static_cast<double>(nelems));
    if (nelems > 1 && log_candidates > std::log2(static_cast<double>(cap)))
        throw CapExceededError("normalized_basis: |A|^(2^n) exceeds the enumeration cap");
    if (nelems == 1) return basis; // zero complex

    Cube x;
    x.dim = n;
    x.labels.assign(verts, 0);
    for (;;) {
        if (!is_degenerate(a, x)) {
            basis.position.emplace(x, basis.generators.size());
            basis.generators.push_back(x);
        }
        // odometer in canonical order (most significant first)
        size_t p = verts;
        bool done = false;
        while (p-- > 0) {
            if (++x.labels[p] < nelems) break;
            x.labels[p] = 0;
            if (p == 0) done = true;
        }
        if (done) break;
    }
    return basis;
}

const NormalizedBasis& basis_cache(const FiniteAbelianGroup& a, int n, size_t cap) {
    static std::map<std::pair<std::vector<long>, int>, NormalizedBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(a.moduli(), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, normalized_basis(a, n, cap)).first;
    return it->second;
}

std::vector<std::pair<uint32_t, long>> differential_column(const FiniteAbelianGroup& a,
                                                           const NormalizedBasis& lower,
                                                           const Cube& gen) {
    std::vector<std::pair<uint32_t, long>> col;
    Chain d = differential(a, gen);
    for (const auto& [cube, coeff] : d.terms()) {
        size_t row = lower.find(cube);
        if (row == NormalizedBasis::npos) continue; // slab or diagonal dies in Q
        col.emplace_back(static_cast<uint32_t>(row), coeff.get_si());
    }
    return col;
}

IntMatrix differential_matrix(const FiniteAbelianGroup& a, int n, size_t cap, size_t dense_cap) {
    if (n < 1) throw ParseError("differential_matrix needs n >= 1");
    const NormalizedBasis& lower = basis_cache(a, n - 1, cap);
    const NormalizedBasis& upper = basis_cache(a, n, cap);
    if (lower.size() * upper.size() > dense_cap)
        throw CapExceededError("differential matrix too large to materialize densely");
    IntMatrix m(lower.size(), upper.size());
    for (size_t j = 0; j < upper.size(); ++j)
        for (auto& [row, coeff] : differential_column(a, lower, upper.generators[j]))
            m.at(row, j) = coeff;
    return m;
}

HomologyResult q_homology_full(const FiniteAbelianGroup& a, int n, size_t cap) {
    const NormalizedBasis& here = basis_cache(a, n, cap);
    if (here.size() == 0) return {};
    IntMatrix d_out = n == 0 ? IntMatrix(0, here.size())
                             : differential_matrix(a, n, cap);
    // image of delta_{n+1}, accumulated sparsely as a sublattice of Z^{k_n}
    const NormalizedBasis& above = basis_cache(a, n + 1, cap);
    RowLattice image(here.size());
    for (const Cube& gen : above.generators)
        image.add_sparse_row(differential_column(a, here, gen));
    IntMatrix im_basis = image.basis();

    IntMatrix kernel = integer_kernel(d_out);
    size_t s = kernel.cols();
    HomologyResult res;
    if (s == 0) return res;
    if (im_basis.rows() == 0) {
        res.free_rank = s;
        return res;
    }
    SnfResult ksnf = smith_normal_form(kernel);
    IntMatrix w(s, im_basis.rows());
    for (size_t r = 0; r < im_basis.rows(); ++r) {
        // express the image row in kernel coordinates through the SNF of K
        std::vector<Int> ub(kernel.rows(), 0);
        for (size_t i = 0; i < kernel.rows(); ++i)
            for (size_t j = 0; j < kernel.rows(); ++j) ub[i] += ksnf.u.at(i, j) * im_basis.at(r, j);
        std::vector<Int> y(s, 0);
        size_t rk = std::min(kernel.rows(), kernel.cols());
        for (size_t i = 0; i < kernel.rows(); ++i) {
            if (i < rk && ksnf.d.at(i, i) != 0) {
                if (ub[i] % ksnf.d.at(i, i) != 0)
                    throw ParseError("image is not contained in the kernel");
                y[i] = ub[i] / ksnf.d.at(i, i);
            } else if (ub[i] != 0) {
                throw ParseError("image is not contained in the kernel");
            }
        }
        for (size_t i = 0; i < s; ++i) {
            w.at(i, r) = 0;
            for (size_t j = 0; j < s; ++j) w.at(i, r) += ksnf.v.at(i, j) * y[j];
        }
    }
    SnfResult wsnf = smith_normal_form(w);
    std::vector<long> tors;
    size_t rank_w = 0;
    for (size_t i = 0; i < std::min(w.rows(), w.cols()); ++i) {
        const Int& di = wsnf.d.at(i, i);
        if (di == 0) continue;
        ++rank_w;
        if (di > 1) tors.push_back(di.get_si());
    }
    res.free_rank = s - rank_w;
    res.torsion = FiniteAbelianGroup(tors).canonical();
    return res;
}

FiniteAbelianGroup q_homology(const FiniteAbelianGroup& a, int n, size_t cap) {
    HomologyResult h = q_homology_full(a, n, cap);
    if (h.free_rank != 0) throw ParseError("homology has a free summand");
    return h.torsion;
}

} // namespace accube
