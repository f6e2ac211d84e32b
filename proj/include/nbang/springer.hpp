/**
 * @file springer.hpp
 * @brief Presentations of Springer-fibre cohomology as graded quotients of
 *        P_n = C[X_1..X_n]: the elementary-symmetric (Tanisaki) generators,
 *        the S_{h,t,k} (de Concini-Procesi) generators, the ideals J_p and
 *        J_q-vee of the box-plus-row analysis, and degree-sliced quotient
 *        rings with normal forms.
 *
 * Quotients are computed by per-degree linear algebra, never by Groebner
 * bases: every presentation here contains the full symmetric ideal or
 * variable powers, so the quotient dies in degree <= n(n-1)/2 + 1 and each
 * degree slice is a plain echelon computation. Standard monomials are the
 * non-pivot (graded-lex smallest) monomials, so normal forms are unique.
 */
#ifndef NBANG_SPRINGER_HPP
#define NBANG_SPRINGER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbang/linalg.hpp"
#include "nbang/partition.hpp"
#include "nbang/perm.hpp"
#include "nbang/polynomial.hpp"

namespace nbang {

enum class PresKind { tanisaki, dcp, jp, jqvee, coinvariant };

struct IdealPresentation {
    int n = 0;
    PresKind kind = PresKind::coinvariant;
    std::string label;
    std::vector<Polynomial<Rat>> generators;  ///< homogeneous, deduplicated
};

namespace detail {

inline void push_unique(std::vector<Polynomial<Rat>>& gens,
                        std::set<std::string>& seen, Polynomial<Rat> g) {
    if (g.is_zero()) return;
    std::string key = g.to_string();
    if (seen.insert(std::move(key)).second) gens.push_back(std::move(g));
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int s = from; s < n; ++s) {
            cur.push_back(s);
            self(self, s + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// J(sigma): e_r(X_{s_1},...,X_{s_k}) over all k-subsets, k - d_k < r <= k.
inline IdealPresentation tanisaki_generators(const Partition& sigma) {
    const int n = sigma.n();
    IdealPresentation pres;
    pres.n = n;
    pres.kind = PresKind::tanisaki;
    pres.label = "tanisaki(" + sigma.to_string() + ")";
    std::set<std::string> seen;
    for (int k = 1; k <= n; ++k) {
        const int dk = d_k(sigma, k);
        for (int r = std::max(1, k - dk + 1); r <= k; ++r)
            for (const auto& sub : detail::subsets_of_size(n, k))
                detail::push_unique(pres.generators, seen,
                                    elementary_symmetric<Rat>(n, sub, r));
    }
    return pres;
}

/// The full symmetric ideal: e_1,...,e_n of all the variables.
inline IdealPresentation coinvariant_generators(int n) {
    IdealPresentation pres;
    pres.n = n;
    pres.kind = PresKind::coinvariant;
    pres.label = "coinvariant(" + std::to_string(n) + ")";
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::set<std::string> seen;
    for (int r = 1; r <= n; ++r)
        detail::push_unique(pres.generators, seen,
                            elementary_symmetric<Rat>(n, all, r));
    return pres;
}

/**
 * J-hat(sigma): S_{h,t,k} over all t-subsets with h + t = n_k + 1. The
 * defining family ranges over all k >= 0; layers with n_k = 0 contribute
 * only the power X_i^k, so truncating at the first such layer (k = sigma_0)
 * already generates the whole ideal.
 */
inline IdealPresentation dcp_generators(const Partition& sigma) {
    const int n = sigma.n();
    IdealPresentation pres;
    pres.n = n;
    pres.kind = PresKind::dcp;
    pres.label = "dcp(" + sigma.to_string() + ")";
    std::set<std::string> seen;
    const int kmax = sigma.part(0);
    for (int k = 0; k <= kmax; ++k) {
        const int nk = n_k(sigma, k);
        for (int t = 1; t <= std::min(n, nk + 1); ++t) {
            const int h = nk + 1 - t;
            for (const auto& sub : detail::subsets_of_size(n, t))
                detail::push_unique(pres.generators, seen,
                                    s_htk<Rat>(n, sub, h, k));
        }
    }
    return pres;
}

/// J_p = J + (X_1^p, ..., X_n^p).
inline IdealPresentation jp_presentation(int n, int p) {
    if (p < 1) throw std::invalid_argument("jp_presentation: p must be >= 1");
    IdealPresentation pres = coinvariant_generators(n);
    pres.kind = PresKind::jp;
    pres.label = "jp(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
    std::set<std::string> seen;
    for (const auto& g : pres.generators) seen.insert(g.to_string());
    for (int i = 0; i < n; ++i)
        detail::push_unique(pres.generators, seen,
                            Polynomial<Rat>::variable(n, i, p));
    return pres;
}

/// J_q-vee = ((X_{i_1}...X_{i_{r+1}})^q over (r+1)-subsets) + J_{q+1}.
inline IdealPresentation jqvee_presentation(int n, int q, int r) {
    if (q < 1 || r < 0 || r + 1 > n)
        throw std::invalid_argument("jqvee_presentation: bad (q, r)");
    IdealPresentation pres = jp_presentation(n, q + 1);
    pres.kind = PresKind::jqvee;
    pres.label = "jqvee(n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                 ",r=" + std::to_string(r) + ")";
    std::set<std::string> seen;
    for (const auto& g : pres.generators) seen.insert(g.to_string());
    for (const auto& sub : detail::subsets_of_size(n, r + 1)) {
        Monomial m(n);
        for (int v : sub) m.set(v, q);
        detail::push_unique(pres.generators, seen,
                            Polynomial<Rat>::term(m, Rat(1)));
    }
    return pres;
}

/**
 * Degree-sliced quotient P_n / ideal. Construction stops at the first
 * degree with an empty quotient slice (every higher slice is then empty
 * too); failing to reach one by `top_bound` is an error rather than a
 * silent truncation.
 */
class GradedQuotientRing {
  public:
    GradedQuotientRing(IdealPresentation pres, int top_bound)
        : pres_(std::move(pres)) {
        const int n = pres_.n;
        for (int d = 0;; ++d) {
            if (d > top_bound)
                throw std::runtime_error(
                    "graded_quotient: no vanishing degree within the bound (" +
                    pres_.label + ")");
            EchelonBasis<Rat> slice;
            for (const auto& g : pres_.generators) {
                const int dg = g.degree();
                if (dg > d) continue;
                for (const auto& m : monomials_of_degree(n, d - dg)) {
                    Polynomial<Rat> row = g;
                    // multiply by the monomial m
                    std::vector<Polynomial<Rat>::Term> terms;
                    for (const auto& t : row.terms())
                        terms.push_back({t.mono * m, t.coeff});
                    slice.insert(
                        Polynomial<Rat>::from_terms(n, std::move(terms)));
                }
            }
            std::vector<Monomial> std_monos;
            for (const auto& m : monomials_of_degree(n, d))
                if (!slice.is_pivot(m)) std_monos.push_back(m);
            const long dim = static_cast<long>(std_monos.size());
            ideal_.push_back(std::move(slice));
            std_monos_.push_back(std::move(std_monos));
            hilbert_.push_back(dim);
            total_dim_ += dim;
            if (dim == 0) break;
        }
        top_degree_ = static_cast<int>(hilbert_.size()) - 2;
    }

    const IdealPresentation& presentation() const { return pres_; }
    int n() const { return pres_.n; }
    int top_degree() const { return top_degree_; }
    long total_dim() const { return total_dim_; }
    const std::vector<long>& hilbert() const { return hilbert_; }
    long hilbert_at(int d) const {
        return (d >= 0 && d < static_cast<int>(hilbert_.size()))
                   ? hilbert_[static_cast<std::size_t>(d)]
                   : 0;
    }
    const std::vector<Monomial>& standard_monomials(int d) const {
        return std_monos_[static_cast<std::size_t>(d)];
    }

    /// Unique normal form of a homogeneous element on the standard monomials.
    Polynomial<Rat> normal_form(const Polynomial<Rat>& f) const {
        if (f.is_zero()) return f;
        if (!f.is_homogeneous())
            throw std::invalid_argument("normal_form: input not homogeneous");
        const int d = f.degree();
        if (d >= static_cast<int>(ideal_.size()))
            return Polynomial<Rat>::zero(pres_.n);  // past the vanishing degree
        return ideal_[static_cast<std::size_t>(d)].reduce(f);
    }

    /// Coordinates of the normal form in standard_monomials(d).
    std::vector<Rat> nf_coords(const Polynomial<Rat>& f, int d) const {
        const Polynomial<Rat> nf = normal_form(f);
        const auto& monos = std_monos_[static_cast<std::size_t>(d)];
        std::vector<Rat> c(monos.size(), Rat(0));
        for (std::size_t i = 0; i < monos.size(); ++i) c[i] = nf.coefficient(monos[i]);
        return c;
    }

    /// Matrix of w acting on the degree-d slice (columns = std monomials).
    MatQ action_matrix(const Perm& w, int d) const {
        const auto& monos = std_monos_[static_cast<std::size_t>(d)];
        MatQ m(monos.size(), monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const auto moved =
                Polynomial<Rat>::term(monos[j], Rat(1)).rename_variables(w);
            const auto c = nf_coords(moved, d);
            for (std::size_t i = 0; i < monos.size(); ++i) m(i, j) = c[i];
        }
        return m;
    }

  private:
    IdealPresentation pres_;
    std::vector<EchelonBasis<Rat>> ideal_;
    std::vector<std::vector<Monomial>> std_monos_;
    std::vector<long> hilbert_;
    long total_dim_ = 0;
    int top_degree_ = -1;
};

inline int default_top_bound(int n) { return n * (n - 1) / 2 + 2; }

inline GradedQuotientRing graded_quotient(IdealPresentation pres, int top_bound) {
    return GradedQuotientRing(std::move(pres), top_bound);
}

inline GradedQuotientRing graded_quotient(IdealPresentation pres) {
    const int n = pres.n;
    return GradedQuotientRing(std::move(pres), default_top_bound(n));
}

/// Membership of a homogeneous f in the degree-slice span of the ideal.
inline bool ideal_membership(const Polynomial<Rat>& f,
                             const IdealPresentation& pres) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument("ideal_membership: input not homogeneous");
    const int d = f.degree();
    EchelonBasis<Rat> slice;
    for (const auto& g : pres.generators) {
        const int dg = g.degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(pres.n, d - dg)) {
            std::vector<Polynomial<Rat>::Term> terms;
            for (const auto& t : g.terms()) terms.push_back({t.mono * m, t.coeff});
            slice.insert(Polynomial<Rat>::from_terms(pres.n, std::move(terms)));
        }
    }
    return slice.contains(f);
}

// ---------------------------------------------------------------------------
// Graded comparison of two ideals (exact or modular-consensus ranks).
// ---------------------------------------------------------------------------

struct SpanComparison {
    bool equal = true;
    std::string certificate = "exact";
    int degrees_checked = 0;
};

namespace detail {

inline std::vector<SparseRow> slice_rows(const IdealPresentation& pres, int d) {
    std::map<Monomial, std::size_t, MonomialDesc> columns;
    for (const auto& m : monomials_of_degree(pres.n, d)) columns.emplace(m, columns.size());
    std::vector<SparseRow> rows;
    for (const auto& g : pres.generators) {
        const int dg = g.degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(pres.n, d - dg)) {
            SparseRow row;
            for (const auto& t : g.terms())
                row.emplace_back(columns.at(t.mono * m), t.coeff);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace detail

/**
 * Equality of the two ideals as graded spans: per degree,
 * rank(A) = rank(B) = rank(A stacked on B). Stops once both quotient slices
 * are empty, after which all higher slices are the full space.
 */
inline SpanComparison graded_span_equal(const IdealPresentation& a,
                                        const IdealPresentation& b, int top_bound,
                                        RankMode mode,
                                        std::uint64_t seed = kDefaultPrimeSeed) {
    if (a.n != b.n) throw std::invalid_argument("graded_span_equal: sizes differ");
    SpanComparison cmp;
    for (int d = 0;; ++d) {
        if (d > top_bound)
            throw std::runtime_error("graded_span_equal: no stabilization in bound");
        const auto rows_a = detail::slice_rows(a, d);
        const auto rows_b = detail::slice_rows(b, d);
        std::vector<SparseRow> stacked = rows_a;
        stacked.insert(stacked.end(), rows_b.begin(), rows_b.end());
        const auto ra = rank_certified(rows_a, mode, seed);
        const auto rb = rank_certified(rows_b, mode, seed);
        const auto rab = rank_certified(stacked, mode, seed);
        if (ra.certificate != "exact" || rb.certificate != "exact" ||
            rab.certificate != "exact")
            cmp.certificate = "consensus";
        ++cmp.degrees_checked;
        if (!(ra.rank == rb.rank && rb.rank == rab.rank)) {
            cmp.equal = false;
            return cmp;
        }
        const long full = static_cast<long>(monomials_of_degree(a.n, d).size());
        if (ra.rank == full) return cmp;  // both ideals contain the whole slice
    }
}

/// Hilbert function of P_n/pres by rank per degree, in the chosen mode.
struct HilbertResult {
    std::vector<long> hilbert;  ///< through the first zero entry
    long total = 0;
    int top_degree = -1;
    std::string certificate = "exact";
};

inline HilbertResult hilbert_function(const IdealPresentation& pres, int top_bound,
                                      RankMode mode,
                                      std::uint64_t seed = kDefaultPrimeSeed) {
    HilbertResult res;
    for (int d = 0;; ++d) {
        if (d > top_bound)
            throw std::runtime_error("hilbert_function: no vanishing degree in bound");
        const auto rows = detail::slice_rows(pres, d);
        const auto rank = rank_certified(rows, mode, seed);
        if (rank.certificate != "exact") res.certificate = "consensus";
        const long full = static_cast<long>(monomials_of_degree(pres.n, d).size());
        const long dim = full - rank.rank;
        res.hilbert.push_back(dim);
        res.total += dim;
        if (dim == 0) break;
    }
    res.top_degree = static_cast<int>(res.hilbert.size()) - 2;
    return res;
}

/// n! / (sigma_0! sigma_1! ... ): the external dimension cross-check label
/// for dim P_n/J(sigma).
inline Int multinomial_dimension(const Partition& sigma) {
    Int d = factorial(sigma.n());
    for (int p : sigma.parts()) d /= factorial(p);
    return d;
}

}  // namespace nbang

#endif
