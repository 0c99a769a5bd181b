#include "accube/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace accube {

// ---------------------------------------------------------------- groups

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> moduli) {
    for (long m : moduli) {
        if (m < 1) throw ParseError("cyclic order must be >= 1");
        if (m > 1) moduli_.push_back(m);
    }
}

Int FiniteAbelianGroup::order() const {
    Int n = 1;
    for (long m : moduli_) n *= m;
    return n;
}

size_t FiniteAbelianGroup::order_index() const {
    Int n = order();
    if (!n.fits_ulong_p()) throw CapExceededError("group order too large to enumerate");
    return n.get_ui();
}

long FiniteAbelianGroup::exponent() const {
    long e = 1;
    for (long m : moduli_) e = std::lcm(e, m);
    return e;
}

FiniteAbelianGroup FiniteAbelianGroup::canonical() const {
    if (moduli_.empty()) return {};
    size_t k = moduli_.size();
    IntMatrix d(k, k);
    for (size_t i = 0; i < k; ++i) d.at(i, i) = moduli_[i];
    SnfResult snf = smith_normal_form(d);
    std::vector<long> inv;
    for (size_t i = 0; i < k; ++i) {
        long v = snf.d.at(i, i).get_si();
        if (v > 1) inv.push_back(v);
    }
    return FiniteAbelianGroup(inv);
}

bool FiniteAbelianGroup::isomorphic_to(const FiniteAbelianGroup& o) const {
    return canonical().moduli() == o.canonical().moduli();
}

std::string FiniteAbelianGroup::to_string() const {
    if (moduli_.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out << 'x';
        out << 'Z' << moduli_[i];
    }
    return out.str();
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
    if (text == "1") return {};
    std::vector<long> moduli;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z') throw ParseError("bad group literal: " + text);
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("bad group literal: " + text);
        long m = std::stol(text.substr(start, pos - start));
        if (m < 2) throw ParseError("cyclic order must be >= 2 in " + text);
        moduli.push_back(m);
        if (pos < text.size()) {
            if (text[pos] != 'x') throw ParseError("bad group literal: " + text);
            ++pos;
            if (pos == text.size()) throw ParseError("bad group literal: " + text);
        }
    }
    return FiniteAbelianGroup(moduli);
}

void FiniteAbelianGroup::check_element(const GroupElem& a) const {
    if (a.size() != moduli_.size()) throw ParseError("element rank mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= moduli_[i]) throw ParseError("residue out of range");
}

bool FiniteAbelianGroup::is_zero(const GroupElem& a) const {
    for (long v : a)
        if (v != 0) return false;
    return true;
}

GroupElem FiniteAbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (a[i] + b[i]) % moduli_[i];
    return c;
}

GroupElem FiniteAbelianGroup::neg(const GroupElem& a) const {
    GroupElem c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (moduli_[i] - a[i]) % moduli_[i];
    return c;
}

GroupElem FiniteAbelianGroup::sub(const GroupElem& a, const GroupElem& b) const {
    return add(a, neg(b));
}

GroupElem FiniteAbelianGroup::scalar_mul(long k, const GroupElem& a) const {
    GroupElem c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        long m = moduli_[i];
        long v = ((k % m) * (a[i] % m)) % m;
        c[i] = (v % m + m) % m;
    }
    return c;
}

GroupElem FiniteAbelianGroup::reduce(const std::vector<Int>& v) const {
    if (v.size() != moduli_.size()) throw ParseError("element rank mismatch");
    GroupElem c(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        Int r = v[i] % moduli_[i];
        if (r < 0) r += moduli_[i];
        c[i] = r.get_si();
    }
    return c;
}

long FiniteAbelianGroup::element_order(const GroupElem& a) const {
    long o = 1;
    for (size_t i = 0; i < moduli_.size(); ++i)
        o = std::lcm(o, moduli_[i] / std::gcd(moduli_[i], a[i]));
    return o;
}

size_t FiniteAbelianGroup::index_of(const GroupElem& a) const {
    size_t idx = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + static_cast<size_t>(a[i]);
    return idx;
}

GroupElem FiniteAbelianGroup::element_at(size_t idx) const {
    GroupElem a(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
        a[i] = static_cast<long>(idx % moduli_[i]);
        idx /= moduli_[i];
    }
    return a;
}

// ---------------------------------------------------------------- matrices

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ParseError("matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << (i ? "; " : "[");
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j).get_str();
        }
    }
    out << "]";
    return out.str();
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> ds;
    for (size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) ds.push_back(d.at(i, i));
    return ds;
}

// ---------------------------------------------------------------- snf

namespace {

void negate_row(IntMatrix& m, size_t i) {
    for (size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// row_i -= q * row_t
void row_axpy(IntMatrix& m, size_t i, size_t t, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(t, c);
}

void col_axpy(IntMatrix& m, size_t j, size_t t, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < m.rows(); ++r) m.at(r, j) -= q * m.at(r, t);
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    size_t nr = m.rows(), nc = m.cols();
    SnfResult out{IntMatrix::identity(nr), m, IntMatrix::identity(nc)};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    size_t t = 0;
    while (t < nr && t < nc) {
        // smallest nonzero entry of the trailing block becomes the pivot
        size_t pi = nr, pj = nc;
        Int best;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j) {
                const Int& x = d.at(i, j);
                if (x == 0) continue;
                Int a = abs(x);
                if (pi == nr || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break; // trailing block is zero

        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            if (d.at(t, t) < 0) {
                negate_row(d, t);
                negate_row(u, t);
            }
            bool dirty = false;
            for (size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) { // remainder is a smaller pivot candidate
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide every remaining entry, so that the
            // diagonal ends up as a divisibility chain
            bool fixed = false;
            for (size_t i = t + 1; i < nr && !fixed; ++i)
                for (size_t j = t + 1; j < nc && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        for (size_t c = 0; c < nc; ++c) d.at(t, c) += d.at(i, c);
                        for (size_t c = 0; c < nr; ++c) u.at(t, c) += u.at(i, c);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        ++t;
    }
    return out;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ParseError("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    size_t r = std::min(m.rows(), m.cols());
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < m.cols(); ++j)
        if (j >= r || snf.d.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix k(m.cols(), free_cols.size());
    for (size_t c = 0; c < free_cols.size(); ++c)
        for (size_t i = 0; i < m.cols(); ++i) k.at(i, c) = snf.v.at(i, free_cols[c]);
    return k;
}

IntegerSolver::IntegerSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), snf_(smith_normal_form(m)) {}

std::optional<std::vector<Int>> IntegerSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != rows_) throw ParseError("rhs dimension mismatch");
    std::vector<Int> ub(rows_, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j)
            if (snf_.u.at(i, j) != 0 && b[j] != 0) ub[i] += snf_.u.at(i, j) * b[j];
    size_t r = std::min(rows_, cols_);
    std::vector<Int> y(cols_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        if (i < r && snf_.d.at(i, i) != 0) {
            if (ub[i] % snf_.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / snf_.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(cols_, 0);
    for (size_t i = 0; i < cols_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (snf_.v.at(i, j) != 0 && y[j] != 0) x[i] += snf_.v.at(i, j) * y[j];
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    return IntegerSolver(m).solve(b);
}

// ---------------------------------------------------------------- homology

std::string HomologyResult::to_string() const {
    if (free_rank == 0) return torsion.to_string();
    std::ostringstream out;
    out << "Z^" << free_rank;
    if (torsion.rank() > 0) out << 'x' << torsion.to_string();
    return out.str();
}

HomologyResult homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in) {
    size_t n = d_out.cols();
    bool in_zero = d_in.rows() == 0 && d_in.cols() == 0;
    if (!in_zero && d_in.rows() != n) throw ParseError("differential dimensions do not chain");
    if (!in_zero && d_out.rows() > 0 && !(d_out * d_in).is_zero())
        throw ParseError("d_out * d_in != 0");

    IntMatrix kbasis = integer_kernel(d_out);
    size_t s = kbasis.cols();
    HomologyResult res;
    size_t m = in_zero ? 0 : d_in.cols();
    if (s == 0) return res; // trivial group
    if (m == 0) {
        res.free_rank = s;
        return res;
    }
    // express the image columns in kernel coordinates
    IntMatrix w(s, m);
    for (size_t c = 0; c < m; ++c) {
        std::vector<Int> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = d_in.at(i, c);
        auto sol = solve_integer(kbasis, col);
        if (!sol) throw ParseError("image is not contained in the kernel");
        for (size_t i = 0; i < s; ++i) w.at(i, c) = (*sol)[i];
    }
    SnfResult snf = smith_normal_form(w);
    std::vector<long> tors;
    size_t rank_w = 0;
    for (size_t i = 0; i < std::min(w.rows(), w.cols()); ++i) {
        const Int& di = snf.d.at(i, i);
        if (di == 0) continue;
        ++rank_w;
        if (di > 1) tors.push_back(di.get_si());
    }
    res.free_rank = s - rank_w;
    res.torsion = FiniteAbelianGroup(tors).canonical();
    return res;
}

FiniteAbelianGroup hom_group(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b) {
    std::vector<long> moduli;
    for (long m : g.moduli())
        for (long n : b.moduli()) {
            long d = std::gcd(m, n);
            if (d > 1) moduli.push_back(d);
        }
    return FiniteAbelianGroup(moduli).canonical();
}

// ---------------------------------------------------------------- mod-q

namespace {

long mod_pos(long v, long q) {
    long r = v % q;
    return r < 0 ? r + q : r;
}

// unit u mod q with u*a == gcd(a,q) mod q (a != 0 mod q)
long unit_scaling(long a, long q) {
    a = mod_pos(a, q);
    long g = std::gcd(a, q);
    long a1 = a / g, q1 = q / g;
    if (q1 == 1) return 1;
    // inverse of a1 mod q1
    long t0 = 0, t1 = 1, r0 = q1, r1 = a1 % q1;
    while (r1 != 0) {
        long qq = r0 / r1;
        std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
        std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
    }
    return mod_pos(t0, q);
}

size_t leading(const std::vector<long>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return i;
    return row.size();
}

} // namespace

std::vector<std::vector<long>> howell_form(std::vector<std::vector<long>> rows, long q) {
    if (q < 1) throw ParseError("modulus must be positive");
    size_t n = rows.empty() ? 0 : rows[0].size();
    for (auto& r : rows)
        for (auto& v : r) v = mod_pos(v, q);

    std::vector<std::vector<long>> result; // pivot rows, by increasing pivot col
    std::vector<std::vector<long>> work = std::move(rows);
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long>> here, later;
        for (auto& r : work) {
            size_t l = leading(r);
            if (l == c)
                here.push_back(std::move(r));
            else if (l > c && l < r.size())
                later.push_back(std::move(r));
        }
        work = std::move(later);
        if (here.empty()) continue;
        std::vector<long> piv = std::move(here[0]);
        for (size_t k = 1; k < here.size(); ++k) {
            std::vector<long>& r = here[k];
            long a = piv[c], b = r[c];
            long s, t;
            std::function<long(long, long, long&, long&)> egcd = [&](long aa, long bb, long& x,
                                                                     long& y) -> long {
                if (bb == 0) {
                    x = 1;
                    y = 0;
                    return aa;
                }
                long x1, y1;
                long gg = egcd(bb, aa % bb, x1, y1);
                x = y1;
                y = x1 - (aa / bb) * y1;
                return gg;
            };
            long g0 = egcd(a, b, s, t);
            std::vector<long> comb(n), rest(n);
            for (size_t j = 0; j < n; ++j) {
                comb[j] = mod_pos(s * piv[j] + t * r[j], q);
                rest[j] = mod_pos((a / g0) * r[j] - (b / g0) * piv[j], q);
            }
            piv = std::move(comb);
            if (leading(rest) < n) work.push_back(std::move(rest));
        }
        // scale the pivot entry to a divisor of q
        long u = unit_scaling(piv[c], q);
        for (auto& v : piv) v = mod_pos(u * v, q);
        long g = piv[c];
        // annihilator row keeps the span Howell-complete
        std::vector<long> ann(n);
        for (size_t j = 0; j < n; ++j) ann[j] = mod_pos((q / g) * piv[j], q);
        if (leading(ann) < n) work.push_back(std::move(ann));
        result.push_back(std::move(piv));
    }
    return result;
}

std::vector<long> lex_min_coset(std::vector<long> x0, const std::vector<std::vector<long>>& gens,
                                long q) {
    for (auto& v : x0) v = mod_pos(v, q);
    auto h = howell_form(gens, q);
    for (const auto& row : h) {
        size_t c = leading(row);
        if (c >= x0.size()) continue;
        long g = row[c];
        long k = x0[c] / g;
        if (k == 0) continue;
        for (size_t j = c; j < x0.size(); ++j) x0[j] = mod_pos(x0[j] - k * row[j], q);
    }
    return x0;
}

std::vector<std::vector<long>> kernel_mod_q(const IntMatrix& rowBasis, long q) {
    size_t n = rowBasis.cols();
    SnfResult snf = smith_normal_form(rowBasis);
    std::vector<std::vector<long>> gens;
    for (size_t j = 0; j < n; ++j) {
        Int dj = 0;
        if (j < std::min(rowBasis.rows(), rowBasis.cols())) dj = snf.d.at(j, j);
        Int g = gcd(dj, Int(q));
        Int scale_i = Int(q) / g;
        long scale = scale_i.get_si();
        std::vector<long> gen(n);
        bool nonzero = false;
        for (size_t i = 0; i < n; ++i) {
            Int v = (snf.v.at(i, j) * scale) % q;
            if (v < 0) v += q;
            gen[i] = v.get_si();
            nonzero |= gen[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

Int subgroup_order_mod_q(const std::vector<std::vector<long>>& rows, long q) {
    auto h = howell_form(rows, q);
    Int n = 1;
    for (const auto& row : h) n *= q / row[leading(row)];
    return n;
}

std::vector<std::vector<long>> enumerate_subgroup_mod_q(const std::vector<std::vector<long>>& gens,
                                                        long q, size_t n, size_t cap) {
    auto h = howell_form(gens, q);
    Int total = subgroup_order_mod_q(gens, q);
    if (total > static_cast<unsigned long>(cap)) throw CapExceededError("subgroup too large to enumerate");
    std::vector<std::vector<long>> out;
    out.push_back(std::vector<long>(n, 0));
    for (const auto& row : h) {
        long reps = q / row[leading(row)];
        size_t sz = out.size();
        for (long k = 1; k < reps; ++k)
            for (size_t i = 0; i < sz; ++i) {
                std::vector<long> v = out[i];
                for (size_t j = 0; j < n; ++j) v[j] = mod_pos(v[j] + k * row[j], q);
                out.push_back(std::move(v));
            }
    }
    return out;
}

FiniteAbelianGroup quotient_group_mod_q(const std::vector<std::vector<long>>& k_gens,
                                        const std::vector<std::vector<long>>& i_gens, long q,
                                        size_t n) {
    // lift both subgroups to full-rank integer lattices (q Z^n is in both)
    RowLattice klat(n);
    for (const auto& g : k_gens) klat.add_row(std::vector<Int>(g.begin(), g.end()));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n, 0);
        row[i] = q;
        klat.add_row(row);
    }
    IntMatrix kb = klat.basis();           // n x n, full rank
    IntegerSolver solver(kb.transposed());
    std::vector<std::vector<Int>> igens_z;
    for (const auto& g : i_gens) igens_z.emplace_back(g.begin(), g.end());
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n, 0);
        row[i] = q;
        igens_z.push_back(std::move(row));
    }
    IntMatrix w(n, igens_z.size());
    for (size_t c = 0; c < igens_z.size(); ++c) {
        auto sol = solver.solve(igens_z[c]);
        if (!sol) throw ParseError("image subgroup is not contained in the kernel subgroup");
        for (size_t i = 0; i < n; ++i) w.at(i, c) = (*sol)[i];
    }
    SnfResult snf = smith_normal_form(w);
    std::vector<long> tors;
    for (size_t i = 0; i < std::min(w.rows(), w.cols()); ++i) {
        const Int& di = snf.d.at(i, i);
        if (di > 1) tors.push_back(di.get_si());
        if (di == 0) throw ParseError("quotient is not finite");
    }
    return FiniteAbelianGroup(tors).canonical();
}

ModKernelAccumulator::ModKernelAccumulator(size_t n, long q) : n_(n), q_(q) {
    gens_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        gens_.push_back(std::move(e));
    }
}

void ModKernelAccumulator::add_constraint(const std::vector<std::pair<uint32_t, long>>& row) {
    size_t m = gens_.size();
    std::vector<long> t(m, 0);
    bool hit = false;
    for (size_t i = 0; i < m; ++i) {
        long acc = 0;
        for (auto& [c, v] : row) acc += (v % q_) * gens_[i][c];
        t[i] = ((acc % q_) + q_) % q_;
        hit |= t[i] != 0;
    }
    if (!hit) return;
    // coefficient vectors c with sum c_i t_i = 0 mod q
    IntMatrix r(1, m);
    for (size_t i = 0; i < m; ++i) r.at(0, i) = t[i];
    auto coeff_ker = kernel_mod_q(r, q_);
    std::vector<std::vector<long>> next;
    next.reserve(coeff_ker.size());
    for (const auto& c : coeff_ker) {
        std::vector<long> g(n_, 0);
        for (size_t i = 0; i < m; ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; j < n_; ++j) g[j] = (g[j] + c[i] * gens_[i][j]) % q_;
        }
        next.push_back(std::move(g));
    }
    gens_ = howell_form(next, q_);
}

// ---------------------------------------------------------------- affine

std::optional<std::vector<long>> solve_affine(const IntMatrix& m,
                                              const std::vector<long>& target_moduli,
                                              const std::vector<long>& b) {
    if (target_moduli.size() != m.rows() || b.size() != m.rows())
        throw ParseError("solve_affine dimension mismatch");
    size_t nr = m.rows(), nc = m.cols();
    long L = 1;
    for (long mod : target_moduli) {
        if (mod < 1) throw ParseError("target modulus must be positive");
        L = std::lcm(L, mod);
    }
    if (nc == 0) {
        for (size_t i = 0; i < nr; ++i)
            if (mod_pos(b[i], target_moduli[i]) != 0) return std::nullopt;
        return std::vector<long>{};
    }
    // scale every congruence to the common modulus L, then solve the
    // integer system [M' | L*I] (x, y) = b'
    IntMatrix a(nr, nc + nr);
    std::vector<Int> rhs(nr);
    for (size_t i = 0; i < nr; ++i) {
        long f = L / target_moduli[i];
        for (size_t j = 0; j < nc; ++j) a.at(i, j) = m.at(i, j) * f;
        a.at(i, nc + i) = L;
        rhs[i] = Int(b[i]) * f;
    }
    auto sol = solve_integer(a, rhs);
    if (!sol) return std::nullopt;
    std::vector<long> x0(nc);
    for (size_t j = 0; j < nc; ++j) {
        Int v = (*sol)[j] % L;
        if (v < 0) v += L;
        x0[j] = v.get_si();
    }
    IntMatrix kb = integer_kernel(a);
    std::vector<std::vector<long>> gens;
    for (size_t c = 0; c < kb.cols(); ++c) {
        std::vector<long> gen(nc);
        bool nonzero = false;
        for (size_t j = 0; j < nc; ++j) {
            Int v = kb.at(j, c) % L;
            if (v < 0) v += L;
            gen[j] = v.get_si();
            nonzero |= gen[j] != 0;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return lex_min_coset(std::move(x0), gens, L);
}

// ---------------------------------------------------------------- homs

GroupHom::GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
        throw ParseError("hom matrix has wrong shape");
    // m_i * (image of generator i) must vanish in the target
    for (size_t i = 0; i < source_.rank(); ++i)
        for (size_t j = 0; j < target_.rank(); ++j)
            if ((matrix_.at(j, i) * source_.moduli()[i]) % target_.moduli()[j] != 0)
                throw ParseError("hom matrix is not well defined");
}

GroupElem GroupHom::apply(const GroupElem& a) const {
    source_.check_element(a);
    std::vector<Int> img(target_.rank(), 0);
    for (size_t j = 0; j < target_.rank(); ++j)
        for (size_t i = 0; i < source_.rank(); ++i) img[j] += matrix_.at(j, i) * a[i];
    return target_.reduce(img);
}

bool GroupHom::is_bijective() const {
    if (source_.order() != target_.order()) return false;
    size_t n = source_.order_index();
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < n; ++i) {
        size_t idx = target_.index_of(apply(source_.element_at(i)));
        if (seen[idx]) return false;
        seen[idx] = true;
    }
    return true;
}

std::vector<GroupHom> enumerate_isomorphisms(const FiniteAbelianGroup& g,
                                             const FiniteAbelianGroup& h) {
    std::vector<GroupHom> isos;
    if (g.order() != h.order()) return isos;
    size_t k = g.rank();
    size_t nh = h.order_index();
    if (k == 0) {
        isos.emplace_back(g, h, IntMatrix(h.rank(), 0));
        return isos;
    }
    std::vector<size_t> pick(k, 0);
    for (;;) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            GroupElem u = h.element_at(pick[i]);
            if (g.moduli()[i] % h.element_order(u) != 0) ok = false;
        }
        if (ok) {
            IntMatrix mat(h.rank(), k);
            for (size_t i = 0; i < k; ++i) {
                GroupElem u = h.element_at(pick[i]);
                for (size_t j = 0; j < h.rank(); ++j) mat.at(j, i) = u[j];
            }
            GroupHom hom(g, h, std::move(mat));
            if (hom.is_bijective()) isos.push_back(std::move(hom));
        }
        size_t p = k;
        while (p-- > 0) {
            if (++pick[p] < nh) break;
            pick[p] = 0;
            if (p == 0) return isos;
        }
    }
}

size_t count_homomorphisms_bruteforce(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b) {
    size_t k = g.rank();
    if (k == 0) return 1;
    size_t nb = b.order_index();
    size_t count = 0;
    std::vector<size_t> pick(k, 0);
    for (;;) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            if (g.moduli()[i] % b.element_order(b.element_at(pick[i])) != 0) ok = false;
        if (ok) ++count;
        size_t p = k;
        while (p-- > 0) {
            if (++pick[p] < nb) break;
            pick[p] = 0;
            if (p == 0) return count;
        }
    }
}

// ---------------------------------------------------------------- lattice

RowLattice::RowLattice(size_t ncols) : ncols_(ncols) {}

namespace {

// a*b into out, false on int64 overflow
bool mul_ok(long a, long b, long& out) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<long>::max() || p < std::numeric_limits<long>::min()) return false;
    out = static_cast<long>(p);
    return true;
}

bool addmul_ok(long base, long a, long b, long& out) {
    __int128 p = static_cast<__int128>(a) * b + base;
    if (p > std::numeric_limits<long>::max() || p < std::numeric_limits<long>::min()) return false;
    out = static_cast<long>(p);
    return true;
}

long egcd_long(long a, long b, long& s, long& t) {
    if (b == 0) {
        s = a >= 0 ? 1 : -1;
        t = 0;
        return std::abs(a);
    }
    long s1, t1;
    long g = egcd_long(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

} // namespace

void RowLattice::add_sparse_row(const std::vector<std::pair<uint32_t, long>>& entries) {
    if (!wide_) {
        std::vector<long> v(ncols_, 0);
        for (auto& [c, val] : entries) v[c] += val;
        if (add_row_narrow(v)) return;
        promote();
        add_row_wide(std::vector<Int>(v.begin(), v.end()));
        return;
    }
    std::vector<Int> row(ncols_, 0);
    for (auto& [c, val] : entries) row[c] += val;
    add_row_wide(std::move(row));
}

void RowLattice::add_row(const std::vector<Int>& row_in) {
    if (row_in.size() != ncols_) throw ParseError("row length mismatch");
    if (!wide_) {
        std::vector<long> v(ncols_);
        bool fits = true;
        for (size_t j = 0; j < ncols_ && fits; ++j) {
            if (!row_in[j].fits_slong_p())
                fits = false;
            else
                v[j] = row_in[j].get_si();
        }
        if (fits && add_row_narrow(v)) return;
        promote();
        if (fits) {
            add_row_wide(std::vector<Int>(v.begin(), v.end()));
            return;
        }
    }
    add_row_wide(row_in);
}

// echelon insertion over int64; returns false (leaving v exact and the
// echelon untouched by the failing step) when any product overflows
bool RowLattice::add_row_narrow(std::vector<long>& v) {
    for (;;) {
        size_t lead = ncols_;
        for (size_t j = 0; j < ncols_; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead == ncols_) return true;
        size_t r = 0;
        while (r < nrows_.size() && pivots_[r] < lead) ++r;
        if (r == nrows_.size() || pivots_[r] != lead) {
            if (v[lead] < 0)
                for (auto& x : v) x = -x;
            nrows_.insert(nrows_.begin() + r, v);
            pivots_.insert(pivots_.begin() + r, lead);
            return true;
        }
        long a = nrows_[r][lead], b = v[lead];
        if (b % a == 0) {
            long q = b / a;
            std::vector<long> next = v;
            for (size_t j = lead; j < ncols_; ++j)
                if (!addmul_ok(next[j], -q, nrows_[r][j], next[j])) return false;
            v = std::move(next);
        } else {
            long s, t;
            long g = egcd_long(a, b, s, t);
            long af = a / g, bf = b / g;
            std::vector<long> comb(ncols_, 0), rest(ncols_, 0);
            for (size_t j = lead; j < ncols_; ++j) {
                long x1, x2, y1, y2;
                if (!mul_ok(s, nrows_[r][j], x1) || !mul_ok(t, v[j], x2) ||
                    !addmul_ok(x1, 1, x2, comb[j]))
                    return false;
                if (!mul_ok(af, v[j], y1) || !mul_ok(bf, nrows_[r][j], y2) ||
                    !addmul_ok(y1, -1, y2, rest[j]))
                    return false;
            }
            nrows_[r] = std::move(comb);
            v = std::move(rest);
        }
    }
}

void RowLattice::promote() {
    if (wide_) return;
    wide_ = true;
    wrows_.clear();
    wrows_.reserve(nrows_.size());
    for (const auto& row : nrows_) wrows_.emplace_back(row.begin(), row.end());
    nrows_.clear();
}

void RowLattice::add_row_wide(std::vector<Int> v) {
    for (;;) {
        size_t lead = ncols_;
        for (size_t j = 0; j < ncols_; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead == ncols_) return;
        size_t r = 0;
        while (r < wrows_.size() && pivots_[r] < lead) ++r;
        if (r == wrows_.size() || pivots_[r] != lead) {
            if (v[lead] < 0)
                for (auto& x : v) x = -x;
            wrows_.insert(wrows_.begin() + r, std::move(v));
            pivots_.insert(pivots_.begin() + r, lead);
            return;
        }
        Int a = wrows_[r][lead], b = v[lead];
        if (b % a == 0) {
            Int q = b / a;
            for (size_t j = lead; j < ncols_; ++j) v[j] -= q * wrows_[r][j];
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int af = a / g, bf = b / g;
            std::vector<Int> comb(ncols_, 0), rest(ncols_, 0);
            for (size_t j = lead; j < ncols_; ++j) {
                comb[j] = s * wrows_[r][j] + t * v[j];
                rest[j] = af * v[j] - bf * wrows_[r][j];
            }
            wrows_[r] = std::move(comb);
            v = std::move(rest);
        }
    }
}

void RowLattice::reduce_above_wide() {
    for (size_t r = wrows_.size(); r-- > 0;) {
        size_t p = pivots_[r];
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), wrows_[i][p].get_mpz_t(), wrows_[r][p].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = p; j < ncols_; ++j) wrows_[i][j] -= q * wrows_[r][j];
        }
    }
}

IntMatrix RowLattice::basis() const {
    RowLattice copy = *this;
    copy.promote();
    copy.reduce_above_wide();
    IntMatrix b(copy.wrows_.size(), ncols_);
    for (size_t i = 0; i < copy.wrows_.size(); ++i)
        for (size_t j = 0; j < ncols_; ++j) b.at(i, j) = copy.wrows_[i][j];
    return b;
}

// ---------------------------------------------------------------- tables

TableGroupIso canonicalize_group_table(const std::vector<std::vector<size_t>>& table, size_t zero) {
    size_t n = table.size();
    for (auto& row : table)
        if (row.size() != n) throw ParseError("group table is not square");

    // element orders by iterated addition
    std::vector<long> order(n, 0);
    for (size_t x = 0; x < n; ++x) {
        size_t acc = x;
        long o = 1;
        while (acc != zero) {
            acc = table[acc][x];
            ++o;
            if (static_cast<size_t>(o) > n) throw ParseError("table element has unbounded order");
        }
        order[x] = o;
    }

    // invariant factors from the torsion counts N(d) = #{x : d x = 0}
    auto count_killed = [&](long d) {
        size_t cnt = 0;
        for (size_t x = 0; x < n; ++x)
            if (d % order[x] == 0) ++cnt;
        return cnt;
    };
    std::vector<long> primes;
    {
        size_t rem = n;
        for (long p = 2; static_cast<size_t>(p) * p <= rem; ++p)
            if (rem % p == 0) {
                primes.push_back(p);
                while (rem % p == 0) rem /= p;
            }
        if (rem > 1) primes.push_back(static_cast<long>(rem));
    }
    std::map<long, std::vector<int>> p_exponents; // prime -> exponent per cyclic factor (desc)
    for (long p : primes) {
        std::vector<size_t> cnt{1};
        long pk = 1;
        for (;;) {
            pk *= p;
            size_t c = count_killed(pk);
            cnt.push_back(c);
            if (c == cnt[cnt.size() - 2]) break;
        }
        // factors with exponent >= j: log_p(N(p^j)/N(p^{j-1}))
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
        std::vector<int> exps; // exponent of each cyclic p-factor, descending
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
    std::vector<long> invariant(nfactors, 1); // descending, then reversed
    for (auto& [p, exps] : p_exponents)
        for (size_t i = 0; i < exps.size(); ++i) {
            long pk = 1;
            for (int e = 0; e < exps[i]; ++e) pk *= p;
            invariant[i] *= pk;
        }
    std::reverse(invariant.begin(), invariant.end()); // ascending divisibility

    TableGroupIso out;
    out.group = FiniteAbelianGroup(invariant);
    size_t k = invariant.size();

    // deterministic generators: fill slots from the last invariant factor
    // backwards, least element index first, with backtracking
    std::vector<size_t> gens(k, 0);
    std::vector<size_t> span{zero};
    std::vector<char> in_span(n, 0);
    in_span[zero] = 1;

    std::function<bool(size_t)> search = [&](size_t slot) -> bool {
        size_t idx = k - 1 - slot; // actual generator position (from the back)
        long want = invariant[idx];
        for (size_t cand = 0; cand < n; ++cand) {
            if (order[cand] != want) continue;
            // <cand> must meet the current span only at zero
            size_t acc = cand;
            bool clean = true;
            while (acc != zero) {
                if (in_span[acc]) {
                    clean = false;
                    break;
                }
                acc = table[acc][cand];
            }
            if (!clean) continue;
            // extend span by <cand>
            std::vector<size_t> added;
            std::vector<size_t> base = span;
            acc = cand;
            bool distinct = true;
            while (acc != zero && distinct) {
                for (size_t s : base) {
                    size_t e = table[s][acc];
                    if (in_span[e]) {
                        distinct = false;
                        break;
                    }
                    in_span[e] = 1;
                    span.push_back(e);
                    added.push_back(e);
                }
                acc = table[acc][cand];
            }
            if (distinct) {
                gens[idx] = cand;
                if (slot + 1 == k || search(slot + 1)) return true;
            }
            for (size_t e : added) in_span[e] = 0;
            span.resize(base.size());
        }
        return false;
    };
    if (k > 0 && !search(0)) throw ParseError("group table is not abelian of the detected type");

    out.from_canonical.assign(n, 0);
    out.to_canonical.assign(n, GroupElem{});
    size_t total = out.group.order_index();
    if (total != n) throw ParseError("table size does not match group order");
    for (size_t idx = 0; idx < total; ++idx) {
        GroupElem v = out.group.element_at(idx);
        size_t e = zero;
        for (size_t i = 0; i < k; ++i)
            for (long c = 0; c < v[i]; ++c) e = table[e][gens[i]];
        out.from_canonical[idx] = e;
        out.to_canonical[e] = v;
    }
    // bijectivity: every table element must be hit exactly once
    std::vector<char> hit(n, 0);
    for (size_t idx = 0; idx < total; ++idx) {
        if (hit[out.from_canonical[idx]]) throw ParseError("generator map is not bijective");
        hit[out.from_canonical[idx]] = 1;
    }
    return out;
}

} // namespace accube
