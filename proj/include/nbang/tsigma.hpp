/**
 * @file tsigma.hpp
 * @brief The Gorenstein quotient T_sigma: the Kuenneth tensor
 *        S_sigma = H*(X_sigma) (x) H*(X_sigma-vee) built from the two
 *        Tanisaki presentations, the symmetric form gamma through the
 *        sign-isotypic line of the top degree, T_sigma = S_sigma/rad gamma,
 *        and the bigraded-dimension/trace comparison against the harmonic
 *        module A_sigma.
 *
 * Bidegrees are written (x, y): x from the X-side factor H*(X_sigma-vee),
 * y from the Y-side factor H*(X_sigma), matching the bigrading of A_sigma.
 */
#ifndef NBANG_TSIGMA_HPP
#define NBANG_TSIGMA_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nbang/harmonics.hpp"
#include "nbang/linalg.hpp"
#include "nbang/partition.hpp"
#include "nbang/perm.hpp"
#include "nbang/springer.hpp"

namespace nbang {

struct TensorAlgebra {
    Partition sigma;
    int n = 0;
    GradedQuotientRing left;   ///< tanisaki(sigma): the Y-side factor
    GradedQuotientRing right;  ///< tanisaki(sigma-vee): the X-side factor
    int d_left = 0;            ///< top degree of the left factor
    int d_right = 0;
    long d_sigma = 0;          ///< d_left + d_right

    long dim_at(int x, int y) const {
        return right.hilbert_at(x) * left.hilbert_at(y);
    }
    long total_dim() const { return left.total_dim() * right.total_dim(); }

    std::map<std::pair<int, int>, long> dims() const {
        std::map<std::pair<int, int>, long> out;
        for (int x = 0; x <= d_right; ++x)
            for (int y = 0; y <= d_left; ++y)
                if (dim_at(x, y)) out[{x, y}] = dim_at(x, y);
        return out;
    }
};

inline TensorAlgebra build_s_sigma(const Partition& sigma, int bound = 6) {
    const int n = sigma.n();
    if (n > bound)
        throw std::invalid_argument("build_s_sigma: n exceeds the configured bound");
    TensorAlgebra s{sigma,
                    n,
                    graded_quotient(tanisaki_generators(sigma)),
                    graded_quotient(tanisaki_generators(sigma.dual())),
                    0,
                    0,
                    0};
    s.d_left = s.left.top_degree();
    s.d_right = s.right.top_degree();
    s.d_sigma = s.d_left + s.d_right;
    return s;
}

namespace detail {

inline Polynomial<Rat> mono_product(const Monomial& a, const Monomial& b, int n) {
    return Polynomial<Rat>::term(a * b, Rat(1));
}

/// Coordinates of each target column in the column space of K.
/// Throws if a target falls outside (the caller's subspace is unstable).
inline MatQ coords_in_columns(const MatQ& k, const MatQ& targets) {
    const std::size_t rows = k.rows(), cols = k.cols(), t = targets.cols();
    MatQ aug(rows, cols + t);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = k(i, j);
        for (std::size_t j = 0; j < t; ++j) aug(i, cols + j) = targets(i, j);
    }
    // row-reduce; pivots must all land in the K block
    std::size_t lead = 0;
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && sgn(aug(piv, col)) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols + t; ++j) std::swap(aug(piv, j), aug(lead, j));
        const Rat inv = Rat(1) / aug(lead, col);
        for (std::size_t j = col; j < cols + t; ++j) aug(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(aug(i, col)) == 0) continue;
            const Rat f = aug(i, col);
            for (std::size_t j = col; j < cols + t; ++j) aug(i, j) -= f * aug(lead, j);
        }
        pivot_of_col[col] = lead;
        ++lead;
    }
    // any nonzero entry of the target block outside pivot rows -> outside span
    for (std::size_t i = lead; i < rows; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (sgn(aug(i, cols + j)))
                throw std::logic_error("coords_in_columns: target outside span");
    MatQ c(cols, t);
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] != SIZE_MAX)
            for (std::size_t j = 0; j < t; ++j)
                c(col, j) = aug(pivot_of_col[col], cols + j);
    return c;
}

}  // namespace detail

/**
 * The form gamma and the bigraded dimensions of T_sigma = S_sigma/rad gamma.
 * gamma pairs complementary bidegrees only, so the Gram matrix is computed
 * block by block and the radical is bigraded.
 */
class GammaForm {
  public:
    explicit GammaForm(const TensorAlgebra& s) : s_(&s) {
        build_sign_functional();
        for (int x = 0; x <= s.d_right; ++x)
            for (int y = 0; y <= s.d_left; ++y) {
                if (!s.dim_at(x, y)) continue;
                MatQ block = gamma_block(x, y);
                const long rank = block.rank();
                const long dim = s.dim_at(x, y);
                blocks_[{x, y}] = std::move(block);
                t_dims_[{x, y}] = rank;
                radical_dims_[{x, y}] = dim - rank;
            }
    }

    const std::map<std::pair<int, int>, long>& t_dims() const { return t_dims_; }
    const std::map<std::pair<int, int>, long>& radical_dims() const {
        return radical_dims_;
    }
    long t_total() const {
        long t = 0;
        for (const auto& [key, d] : t_dims_) t += d;
        return t;
    }
    long radical_total() const {
        long t = 0;
        for (const auto& [key, d] : radical_dims_) t += d;
        return t;
    }
    const MatQ& block(int x, int y) const { return blocks_.at({x, y}); }

    /// Trace of w on T^{(x,y)} = S^{(x,y)} / radical.
    Rat t_slice_trace(const Perm& w, int x, int y) const {
        const TensorAlgebra& s = *s_;
        if (!s.dim_at(x, y)) return Rat(0);
        const MatQ rw = s.right.action_matrix(w, x);
        const MatQ lw = s.left.action_matrix(w, y);
        Rat trace = rw.trace() * lw.trace();  // trace on the full S slice
        const long rad = radical_dims_.at({x, y});
        if (rad == 0) return trace;
        // subtract the trace on the radical subspace
        const MatQ k = radical_basis(x, y);
        const MatQ aw = kron(rw, lw);
        const MatQ c = detail::coords_in_columns(k, aw * k);
        return trace - c.trace();
    }

    /// Basis of the radical inside S^{(x,y)} (columns).
    MatQ radical_basis(int x, int y) const {
        const MatQ& b = blocks_.at({x, y});
        const auto ker = b.transpose().nullspace();  // left kernel of the block
        MatQ k(b.rows(), ker.size());
        for (std::size_t j = 0; j < ker.size(); ++j)
            for (std::size_t i = 0; i < b.rows(); ++i) k(i, j) = ker[j][i];
        return k;
    }

    /**
     * Rebuilds the induced form on a chosen T-basis (representative rows on
     * each side) and checks it has zero radical; quotienting by rad gamma is
     * idempotent exactly when these representative submatrices carry full
     * rank.
     */
    bool rebuilt_radical_is_zero() const {
        const TensorAlgebra& s = *s_;
        for (const auto& [key, b] : blocks_) {
            const auto [x, y] = key;
            const long r = t_dims_.at(key);
            if (r == 0) continue;
            const auto rows = representative_rows(b);
            const auto cols = representative_rows(blocks_.at(
                {s.d_right - x, s.d_left - y}));
            MatQ sub(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j)
                    sub(i, j) = b(rows[i], cols[j]);
            if (static_cast<long>(rows.size()) != r ||
                static_cast<long>(cols.size()) != r || sub.rank() != r)
                return false;
        }
        return true;
    }

    static MatQ kron(const MatQ& a, const MatQ& b) {
        MatQ k(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (sgn(a(i, j)) == 0) continue;
                for (std::size_t p = 0; p < b.rows(); ++p)
                    for (std::size_t q = 0; q < b.cols(); ++q)
                        k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
            }
        return k;
    }

  private:
    /// Greedy independent rows of a matrix (first spanning subset).
    static std::vector<std::size_t> representative_rows(const MatQ& b) {
        std::vector<std::size_t> picked;
        MatQ acc(0, 0);
        std::vector<std::vector<Rat>> chosen;
        for (std::size_t i = 0; i < b.rows(); ++i) {
            std::vector<Rat> row(b.cols());
            for (std::size_t j = 0; j < b.cols(); ++j) row[j] = b(i, j);
            // reduce against chosen rows
            for (const auto& c : chosen) {
                // find c's pivot
                std::size_t piv = 0;
                while (piv < c.size() && sgn(c[piv]) == 0) ++piv;
                if (piv == c.size()) continue;
                const Rat f = row[piv] / c[piv];
                if (sgn(f) == 0) continue;
                for (std::size_t j = 0; j < c.size(); ++j) row[j] -= f * c[j];
            }
            bool zero = true;
            for (const auto& v : row) zero &= (sgn(v) == 0);
            if (!zero) {
                picked.push_back(i);
                chosen.push_back(std::move(row));
            }
        }
        return picked;
    }

    /// gamma on S^{(x,y)} x S^{(comp)}: the sign-line coordinate of the top
    /// component of the product.
    MatQ gamma_block(int x, int y) const {
        const TensorAlgebra& s = *s_;
        const int cx = s.d_right - x, cy = s.d_left - y;
        const auto& ru = s.right.standard_monomials(x);
        const auto& lu = s.left.standard_monomials(y);
        const long rows = s.dim_at(x, y);
        if (cx < 0 || cy < 0 || !s.dim_at(cx, cy))
            return MatQ(static_cast<std::size_t>(rows), 0);
        const auto& rv = s.right.standard_monomials(cx);
        const auto& lv = s.left.standard_monomials(cy);

        // per-factor products into the top slices
        const std::size_t rtop = s.right.standard_monomials(s.d_right).size();
        const std::size_t ltop = s.left.standard_monomials(s.d_left).size();
        std::vector<std::vector<Rat>> right_top(ru.size() * rv.size());
        for (std::size_t a = 0; a < ru.size(); ++a)
            for (std::size_t b = 0; b < rv.size(); ++b)
                right_top[a * rv.size() + b] = s.right.nf_coords(
                    detail::mono_product(ru[a], rv[b], s.n), s.d_right);
        std::vector<std::vector<Rat>> left_top(lu.size() * lv.size());
        for (std::size_t a = 0; a < lu.size(); ++a)
            for (std::size_t b = 0; b < lv.size(); ++b)
                left_top[a * lv.size() + b] = s.left.nf_coords(
                    detail::mono_product(lu[a], lv[b], s.n), s.d_left);

        MatQ block(static_cast<std::size_t>(rows), rv.size() * lv.size());
        for (std::size_t a1 = 0; a1 < ru.size(); ++a1)
            for (std::size_t b1 = 0; b1 < lu.size(); ++b1)
                for (std::size_t a2 = 0; a2 < rv.size(); ++a2)
                    for (std::size_t b2 = 0; b2 < lv.size(); ++b2) {
                        const auto& rc = right_top[a1 * rv.size() + a2];
                        const auto& lc = left_top[b1 * lv.size() + b2];
                        Rat g = 0;
                        for (std::size_t i = 0; i < rtop; ++i) {
                            if (sgn(rc[i]) == 0) continue;
                            for (std::size_t j = 0; j < ltop; ++j)
                                g += rc[i] * lc[j] *
                                     sign_functional_[i * ltop + j];
                        }
                        block(a1 * lu.size() + b1, a2 * lv.size() + b2) = g;
                    }
        return block;
    }

    /// The sign antisymmetrizer on the top bidegree must have rank one;
    /// store one nonzero row of it as the functional realizing gamma.
    void build_sign_functional() {
        const TensorAlgebra& s = *s_;
        const std::size_t rtop = s.right.standard_monomials(s.d_right).size();
        const std::size_t ltop = s.left.standard_monomials(s.d_left).size();
        MatQ proj(rtop * ltop, rtop * ltop);
        for (const auto& w : all_permutations(s.n)) {
            const MatQ rw = s.right.action_matrix(w, s.d_right);
            const MatQ lw = s.left.action_matrix(w, s.d_left);
            const MatQ k = kron(rw, lw);
            const Rat e(perm_sign(w));
            for (std::size_t i = 0; i < proj.rows(); ++i)
                for (std::size_t j = 0; j < proj.cols(); ++j)
                    proj(i, j) += e * k(i, j);
        }
        if (proj.rank() != 1)
            throw std::logic_error(
                "gamma: sign multiplicity in the top degree is not one");
        for (std::size_t i = 0; i < proj.rows(); ++i) {
            bool nonzero = false;
            for (std::size_t j = 0; j < proj.cols(); ++j)
                nonzero |= (sgn(proj(i, j)) != 0);
            if (nonzero) {
                sign_functional_.resize(proj.cols());
                for (std::size_t j = 0; j < proj.cols(); ++j)
                    sign_functional_[j] = proj(i, j);
                return;
            }
        }
        throw std::logic_error("gamma: empty sign projector");
    }

    const TensorAlgebra* s_;
    std::vector<Rat> sign_functional_;
    std::map<std::pair<int, int>, MatQ> blocks_;
    std::map<std::pair<int, int>, long> t_dims_;
    std::map<std::pair<int, int>, long> radical_dims_;
};

/// Outcome of checking T_sigma against the harmonic module A_sigma.
struct TAComparison {
    bool dims_match = false;
    bool traces_match = false;
    bool radical_rebuild_zero = false;
    bool top_is_one_dimensional = false;
    long t_total = 0;
    long a_total = 0;

    bool pass() const {
        return dims_match && traces_match && radical_rebuild_zero &&
               top_is_one_dimensional && t_total == a_total;
    }
};

/**
 * Bigraded S_n-isomorphism check between T_sigma and A_sigma: dimensions
 * and the traces of a transposition and an n-cycle on every bidegree slice.
 * The A-side slice data comes from the harmonic module through
 * A^{(x,y)} ~ H^{(dx-x, dy-y)} twisted by sign (the operator monomials of
 * bidegree (x,y) act by lowering, and w Delta = eps(w) Delta).
 */
inline TAComparison compare_t_a(const Partition& sigma, int bound = 6) {
    const HarmonicSpace h = harmonic_space(sigma, bound);
    const TensorAlgebra s = build_s_sigma(sigma, bound);
    const GammaForm gamma(s);

    TAComparison cmp;
    cmp.t_total = gamma.t_total();
    cmp.a_total = h.total_dim;

    auto a_dim = [&](int x, int y) { return h.dim_at(h.dx - x, h.dy - y); };

    cmp.dims_match = true;
    for (int x = 0; x <= s.d_right; ++x)
        for (int y = 0; y <= s.d_left; ++y) {
            long t = 0;
            const auto it = gamma.t_dims().find({x, y});
            if (it != gamma.t_dims().end()) t = it->second;
            if (t != a_dim(x, y)) cmp.dims_match = false;
        }
    // nothing outside the S-support on the A side
    for (const auto& [key, dim] : h.dims()) {
        const int x = h.dx - key.first, y = h.dy - key.second;
        if (x < 0 || y < 0 || x > s.d_right || y > s.d_left) cmp.dims_match = false;
    }

    const int n = sigma.n();
    cmp.traces_match = true;
    if (n >= 2) {
        for (const Perm& w : {transposition(n, 0, 1), full_cycle(n)}) {
            const Rat eps(perm_sign(w));
            for (int x = 0; x <= s.d_right; ++x)
                for (int y = 0; y <= s.d_left; ++y) {
                    if (!s.dim_at(x, y) && !a_dim(x, y)) continue;
                    const Rat t_trace = s.dim_at(x, y)
                                            ? gamma.t_slice_trace(w, x, y)
                                            : Rat(0);
                    const Rat a_trace =
                        eps * h.slice_trace(w, h.dx - x, h.dy - y);
                    if (t_trace != a_trace) cmp.traces_match = false;
                }
        }
    }

    const auto top = gamma.t_dims().find({s.d_right, s.d_left});
    cmp.top_is_one_dimensional = top != gamma.t_dims().end() && top->second == 1;
    cmp.radical_rebuild_zero = gamma.rebuilt_radical_is_zero();
    return cmp;
}

}  // namespace nbang

#endif
