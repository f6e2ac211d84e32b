/**
 * @file charp.hpp
 * @brief Divided-power modules over prime fields: the exponent-folding map
 *        phi (X^i Y^j -> X^{i+pj}), the divided-power closure of the
 *        Vandermonde, the box-partition comparison at n = p^2, and the
 *        sign-polynomial counterexample showing the closure dimension can
 *        drop below the characteristic-zero value.
 *
 * The divided-power algebra over F_p is generated by the operators
 * partial^(p^e): base-p digits of m factor partial^(m) into them with unit
 * Lucas coefficients, and a ladder up to the top exponent in play loses
 * nothing. Closures here always use the full ladder.
 */
#ifndef NBANG_CHARP_HPP
#define NBANG_CHARP_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "nbang/harmonics.hpp"
#include "nbang/linalg.hpp"
#include "nbang/partition.hpp"
#include "nbang/polynomial.hpp"

namespace nbang {

/// phi: F_p[X_1..X_n, Y_1..Y_n] -> F_p[X_1..X_n], X^i Y^j -> X^{i+pj},
/// applied termwise (it is an algebra homomorphism).
template <unsigned P>
Polynomial<Fp<P>> char_phi(const Polynomial<Fp<P>>& f, int n) {
    if (f.vars() != 2 * n)
        throw std::invalid_argument("char_phi: expected a 2n-variable input");
    std::vector<typename Polynomial<Fp<P>>::Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m(n);
        for (int v = 0; v < n; ++v)
            m.set(v, t.mono.exp(v) + static_cast<int>(P) * t.mono.exp(n + v));
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial<Fp<P>>::from_terms(n, std::move(terms));
}

/// Divided-power ladder partial^(p^e) on every variable, e = 0,1,... while
/// p^e does not exceed the top exponent that can occur.
template <unsigned P>
std::vector<DerivedOp> divided_ladder(int vars, int max_exponent) {
    std::vector<DerivedOp> ops;
    for (int v = 0; v < vars; ++v)
        for (long pe = 1; pe <= max_exponent; pe *= P)
            ops.push_back({v, static_cast<int>(pe), true});
    return ops;
}

/// Closure of f under the divided-power ladder; the span of D(f) over the
/// whole divided-power algebra.
template <unsigned P>
GradedSpan<Fp<P>> divided_closure(const Polynomial<Fp<P>>& f) {
    return graded_span<Fp<P>>(f.vars(), f.vars(), {f},
                              divided_ladder<P>(f.vars(), f.degree()));
}

/// Closure of f under a custom generator ladder (used by the guard that
/// probes generator sufficiency).
template <unsigned P>
long closure_dim(const Polynomial<Fp<P>>& f, const std::vector<DerivedOp>& ops) {
    return graded_span<Fp<P>>(f.vars(), f.vars(), {f}, ops).total_dim();
}

/// dim of the divided-power module of the Vandermonde over F_p.
template <unsigned P>
long divided_span_dim(int n, int bound = kHarmonicBound) {
    if (n < 1 || n > bound)
        throw std::invalid_argument("divided_span_dim: n out of range");
    return divided_closure<P>(vandermonde<Fp<P>>(n)).total_dim();
}

/// Axiom-by-axiom record of the box-partition comparison at n = p^2.
struct CharPReport {
    int n = 0;
    unsigned p = 0;
    long dim_divided = 0;   ///< dim of the divided module of Delta_n
    long dim_box = 0;       ///< dim of the ordinary-partials closure of Delta_box
    Int dim_classical = 0;  ///< n!
    bool phi_box_is_vandermonde = false;  ///< phi(Delta_box) = +-Delta_n
    bool phi_v_equals_divided = false;    ///< phi(V) = D(Delta_n) as subspaces
    bool inequality_holds = false;        ///< dim V >= dim D(Delta_n)
    bool box_dim_is_factorial = false;    ///< dim V = n!

    bool pass() const {
        return phi_box_is_vandermonde && phi_v_equals_divided &&
               inequality_holds && box_dim_is_factorial;
    }
};

template <unsigned P>
CharPReport box_comparison() {
    static_assert(P == 2 || P == 3, "box comparison runs at n = p^2 <= 9");
    const int n = static_cast<int>(P * P);
    CharPReport rep;
    rep.n = n;
    rep.p = P;
    rep.dim_classical = factorial(n);

    const Partition box(std::vector<int>(P, static_cast<int>(P)));
    const auto delta_box = delta_sigma<Fp<P>>(box);
    const auto delta_n = vandermonde<Fp<P>>(n);

    // phi(Delta_box) = +-Delta_n
    const auto phi_box = char_phi<P>(delta_box, n);
    {
        auto sum = phi_box;
        sum.add_scaled(delta_n, Fp<P>(1));
        auto diff = phi_box;
        diff.add_scaled(delta_n, Fp<P>(-1));
        rep.phi_box_is_vandermonde = sum.is_zero() || diff.is_zero();
    }

    // V: ordinary-partials closure of Delta_box in the 2n variables
    std::vector<DerivedOp> partials;
    for (int v = 0; v < 2 * n; ++v) partials.push_back({v, 1, false});
    const auto v_span = graded_span<Fp<P>>(2 * n, n, {delta_box}, partials);
    rep.dim_box = v_span.total_dim();

    const auto divided = divided_closure<P>(delta_n);
    rep.dim_divided = divided.total_dim();

    // phi(V) and D(Delta_n) as subspaces of P_n
    EchelonBasis<Fp<P>> phi_v;
    std::vector<Polynomial<Fp<P>>> phi_rows;
    for (const auto& [key, basis] : v_span.slices)
        for (const auto& row : basis.rows()) {
            auto image = char_phi<P>(row, n);
            if (image.is_zero()) continue;
            phi_v.insert(image);
            phi_rows.push_back(std::move(image));
        }
    EchelonBasis<Fp<P>> div_span;
    std::vector<Polynomial<Fp<P>>> div_rows;
    for (const auto& [key, basis] : divided.slices)
        for (const auto& row : basis.rows()) {
            div_span.insert(row);
            div_rows.push_back(row);
        }
    bool equal = phi_v.dim() == div_span.dim();
    for (const auto& r : phi_rows) equal = equal && div_span.contains(r);
    for (const auto& r : div_rows) equal = equal && phi_v.contains(r);
    rep.phi_v_equals_divided = equal;

    rep.inequality_holds = rep.dim_box >= rep.dim_divided;
    rep.box_dim_is_factorial = (rep.dim_classical == rep.dim_box);
    return rep;
}

/// The sign-polynomial counterexample: f = (X1 - X2)(X1 + X2) has a
/// 2-dimensional divided module over F_2 but a 4-dimensional derivative
/// span over the rationals.
inline std::pair<long, long> counterexample_remark_c() {
    using P2 = Polynomial<Fp<2>>;
    const P2 f = P2::term(Monomial(2, {{0, 2}}), Fp<2>(1)) -
                 P2::term(Monomial(2, {{1, 2}}), Fp<2>(1));
    const long dim_p = divided_closure<2>(f).total_dim();

    const Polynomial<Rat> g = Polynomial<Rat>::term(Monomial(2, {{0, 2}}), Rat(1)) -
                              Polynomial<Rat>::term(Monomial(2, {{1, 2}}), Rat(1));
    const auto span =
        graded_span<Rat>(2, 2, {g}, {{0, 1, false}, {1, 1, false}});
    return {dim_p, span.total_dim()};
}

}  // namespace nbang

#endif
