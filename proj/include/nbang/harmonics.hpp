/**
 * @file harmonics.hpp
 * @brief The generalized Vandermonde Delta_sigma and its harmonic module:
 *        the closure of Delta_sigma under all 2n first-order partials, with
 *        the n!-dimension, sign, regular-representation, Gorenstein and
 *        vanishing checks that characterize it.
 *
 * The cells of D_sigma are taken in row-major order; this fixes the sign of
 * Delta_sigma, and every dimension computed here is insensitive to it.
 * Variables are 0-based: X_s is variable s, Y_s is variable n+s.
 */
#ifndef NBANG_HARMONICS_HPP
#define NBANG_HARMONICS_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nbang/linalg.hpp"
#include "nbang/partition.hpp"
#include "nbang/perm.hpp"
#include "nbang/polynomial.hpp"

namespace nbang {

constexpr int kHarmonicBound = 6;

/// Determinant of the n x n matrix (X_s^{i_t} Y_s^{j_t}) over the row-major
/// cells of D_sigma. The n! expansion terms are pairwise distinct monomials,
/// so the result has exactly n! terms with coefficients +-1.
template <class K = Rat>
Polynomial<K> delta_sigma(const Partition& sigma) {
    const int n = sigma.n();
    const auto cells = sigma.cells();
    std::vector<typename Polynomial<K>::Term> terms;
    Perm w = identity_perm(n);
    do {
        Monomial m(2 * n);
        for (int s = 0; s < n; ++s) {
            const Cell& c = cells[static_cast<std::size_t>(w[static_cast<std::size_t>(s)])];
            m.set(s, c.i);
            m.set(n + s, c.j);
        }
        terms.push_back({std::move(m), K(perm_sign(w))});
    } while (std::next_permutation(w.begin(), w.end()));
    return Polynomial<K>::from_terms(2 * n, std::move(terms));
}

/// The one-set-of-variables Vandermonde det(X_s^t) = prod_{s<t} (X_t - X_s),
/// in n variables.
template <class K = Rat>
Polynomial<K> vandermonde(int n) {
    std::vector<typename Polynomial<K>::Term> terms;
    Perm w = identity_perm(n);
    do {
        Monomial m(n);
        for (int s = 0; s < n; ++s) m.set(s, w[static_cast<std::size_t>(s)]);
        terms.push_back({std::move(m), K(perm_sign(w))});
    } while (std::next_permutation(w.begin(), w.end()));
    return Polynomial<K>::from_terms(n, std::move(terms));
}

/**
 * The harmonic module of sigma: the span of all constant-coefficient
 * derivatives of Delta_sigma, computed as the closure under the 2n
 * first-order partials (in characteristic zero the operator algebra is
 * generated in degree one, so this closure is the whole module).
 */
struct HarmonicSpace {
    Partition sigma;
    int n = 0;
    Polynomial<Rat> delta;
    int dx = 0, dy = 0;  ///< bidegree of Delta_sigma
    long d_sigma = 0;
    GradedSpan<Rat> span;
    long total_dim = 0;

    std::map<std::pair<int, int>, long> dims() const { return span.dims(); }

    long dim_at(int a, int b) const {
        const auto it = span.slices.find({a, b});
        return it == span.slices.end() ? 0 : static_cast<long>(it->second.dim());
    }

    /// Action of w in S_n on a vector of the module.
    Polynomial<Rat> act(const Perm& w, const Polynomial<Rat>& f) const {
        return f.rename_variables(diagonal_xy(w));
    }

    /// Trace of w on the slice (a,b); solving in the reduced basis must
    /// succeed, anything else indicates a corrupted basis.
    Rat slice_trace(const Perm& w, int a, int b) const {
        const auto it = span.slices.find({a, b});
        if (it == span.slices.end()) return Rat(0);
        Rat t = 0;
        const auto& basis = it->second;
        for (std::size_t i = 0; i < basis.rows().size(); ++i) {
            const auto coords = basis.coords(act(w, basis.rows()[i]));
            if (!coords)
                throw std::logic_error("harmonic slice is not S_n-stable");
            t += (*coords)[i];
        }
        return t;
    }

    Rat total_trace(const Perm& w) const {
        Rat t = 0;
        for (const auto& [key, basis] : span.slices)
            t += slice_trace(w, key.first, key.second);
        return t;
    }
};

inline HarmonicSpace harmonic_space(const Partition& sigma,
                                    int bound = kHarmonicBound) {
    const int n = sigma.n();
    if (n > bound)
        throw std::invalid_argument("harmonic_space: n exceeds the configured bound");
    HarmonicSpace h;
    h.sigma = sigma;
    h.n = n;
    h.delta = delta_sigma(sigma);
    const auto bd = h.delta.bidegree(n);
    h.dx = bd.first;
    h.dy = bd.second;
    h.d_sigma = bd.first + bd.second;
    std::vector<DerivedOp> ops;
    for (int v = 0; v < 2 * n; ++v) ops.push_back({v, 1, false});
    h.span = graded_span<Rat>(2 * n, n, {h.delta}, ops);
    h.total_dim = h.span.total_dim();
    return h;
}

/// dim = n! and every non-identity cycle type has vanishing trace: the
/// character criterion for the regular representation.
inline bool regular_rep_check(const HarmonicSpace& h) {
    if (factorial(h.n) != h.total_dim) return false;
    for (const auto& w : cycle_type_representatives(h.n)) {
        if (is_identity(w)) continue;
        if (sgn(h.total_trace(w)) != 0) return false;
    }
    return true;
}

/// Multiplicity of the sign character per bidegree, by the rank of the
/// antisymmetrizer on each slice.
inline std::map<std::pair<int, int>, long> sign_analysis(const HarmonicSpace& h) {
    std::map<std::pair<int, int>, long> mult;
    const auto perms = all_permutations(h.n);
    for (const auto& [key, basis] : h.span.slices) {
        EchelonBasis<Rat> image;
        for (const auto& row : basis.rows()) {
            Polynomial<Rat> proj(2 * h.n);
            for (const auto& w : perms)
                proj.add_scaled(h.act(w, row), Rat(perm_sign(w)));
            if (!proj.is_zero()) image.insert(std::move(proj));
        }
        if (image.dim()) mult[key] = static_cast<long>(image.dim());
    }
    return mult;
}

/**
 * Perfectness of the multiplication pairing A^m x A^{d-m} -> A^d realized
 * apolarly: the accepted operator monomials of degree m are a monomial
 * basis of A^m, and pairing them against the harmonic basis vectors of
 * polynomial degree m reduces every block to an exact rank computation.
 */
inline bool gorenstein_check(const HarmonicSpace& h) {
    std::map<int, std::vector<Monomial>> tags_by_degree;
    for (const auto& [key, tags] : h.span.tags)
        for (const auto& t : tags) tags_by_degree[t.degree()].push_back(t);

    std::map<int, std::vector<const Polynomial<Rat>*>> rows_by_degree;
    for (const auto& [key, basis] : h.span.slices)
        for (const auto& row : basis.rows())
            rows_by_degree[key.first + key.second].push_back(&row);

    for (long m = 0; m <= h.d_sigma; ++m) {
        const auto& ops = tags_by_degree[static_cast<int>(m)];       // basis of A^m
        const auto& vecs = rows_by_degree[static_cast<int>(m)];      // basis of H^m
        // dim A^m = |ops|, dim A^{d-m} = dim H^m = |vecs|
        if (ops.size() != vecs.size()) return false;
        MatQ p(ops.size(), vecs.size());
        for (std::size_t a = 0; a < ops.size(); ++a)
            for (std::size_t b = 0; b < vecs.size(); ++b)
                p(a, b) = apolar_with_monomial(ops[a], *vecs[b]);
        if (p.rank() != static_cast<long>(ops.size())) return false;
    }
    return true;
}

/**
 * Lemma "e_r of Y-partials kills Delta_sigma": for a k-subset of point
 * indices (0-based) and k - d_k(sigma) < r <= k, applies
 * e_r(partial_{Y_{s_1}},...,partial_{Y_{s_k}}) to Delta_sigma and reports
 * whether the result vanishes. Arguments outside the stated range are a
 * usage error, not a counterexample.
 */
inline bool lemma_vanish(const Partition& sigma, int k, int r,
                         const std::vector<int>& subset) {
    const int n = sigma.n();
    if (k < 1 || k > n || static_cast<int>(subset.size()) != k)
        throw std::invalid_argument("lemma_vanish: need |subset| = k <= n");
    for (std::size_t a = 0; a < subset.size(); ++a) {
        if (subset[a] < 0 || subset[a] >= n)
            throw std::invalid_argument("lemma_vanish: index out of range");
        if (a && subset[a - 1] >= subset[a])
            throw std::invalid_argument("lemma_vanish: subset must increase");
    }
    if (!(r <= k && k - d_k(sigma, k) < r))
        throw std::invalid_argument(
            "lemma_vanish: (k, r) outside k - d_k < r <= k");
    std::vector<int> yvars;
    for (int s : subset) yvars.push_back(n + s);
    const auto op = elementary_symmetric<Rat>(2 * n, yvars, r);
    return apply_operator(op, delta_sigma(sigma)).is_zero();
}

/**
 * Smallest total degree of R_n containing the sign character, with its
 * multiplicity there: antisymmetrize every monomial of each degree slice of
 * the 2n-variable ring and take the rank. Enumerative, so n is capped.
 */
inline std::pair<long, long> lowest_sign_degree(int n) {
    if (n > 4)
        throw std::invalid_argument("lowest_sign_degree: enumeration capped at n = 4");
    const auto perms = all_permutations(n);
    for (int d = 0;; ++d) {
        if (d > 64) throw std::logic_error("lowest_sign_degree: no sign found");
        EchelonBasis<Rat> image;
        for (const auto& m : monomials_of_degree(2 * n, d)) {
            const auto f = Polynomial<Rat>::term(m, Rat(1));
            Polynomial<Rat> proj(2 * n);
            for (const auto& w : perms)
                proj.add_scaled(f.rename_variables(diagonal_xy(w)),
                                Rat(perm_sign(w)));
            if (!proj.is_zero()) image.insert(std::move(proj));
        }
        if (image.dim()) return {d, static_cast<long>(image.dim())};
    }
}

}  // namespace nbang

#endif
