/**
 * @file grfiltration.hpp
 * @brief The coinvariant algebra P_n/J modeled apolarly as the derivative
 *        closure of the one-variable-set Vandermonde, the multiplicative
 *        filtration F_s = F_1^s with F_1 = span{1, x_i, x_i^p}, its layer
 *        dimensions, and the comparison of Gr(F) against the harmonic
 *        module of the box-plus-one-row partition sigma(p,q,r).
 *
 * A class f of P_n/J is represented by the polynomial f(partial)(Delta_n);
 * multiplying by x_i (resp. x_i^p) becomes applying partial_i (resp.
 * partial_i^p), so every layer is plain derivative linear algebra. Under
 * this model the natural action of w carries an extra eps(w), which cancels
 * in every rank used here.
 */
#ifndef NBANG_GRFILTRATION_HPP
#define NBANG_GRFILTRATION_HPP

#include <stdexcept>
#include <vector>

#include "nbang/harmonics.hpp"
#include "nbang/linalg.hpp"
#include "nbang/partition.hpp"
#include "nbang/perm.hpp"
#include "nbang/springer.hpp"

namespace nbang {

struct CoinvariantModel {
    int n = 0;
    Polynomial<Rat> vdm;   ///< Delta_n in the n X-variables
    GradedSpan<Rat> span;  ///< derivative closure, graded by degree
    long total_dim = 0;

    /// Dimension of the degree-d component of P_n/J; the model vector of a
    /// degree-d class has polynomial degree n(n-1)/2 - d.
    long class_dim(int d) const {
        const int top = n * (n - 1) / 2;
        const auto it = span.slices.find({top - d, 0});
        return it == span.slices.end() ? 0 : static_cast<long>(it->second.dim());
    }
};

/**
 * The n!-dimensional derivative closure of Delta_n. For n <= 4 the graded
 * dimensions are revalidated against the sliced quotient by e_1..e_n, since
 * the model rests on J being the apolar annihilator of Delta_n.
 */
inline CoinvariantModel coinvariant_model(int n, int bound = kHarmonicBound) {
    if (n < 1 || n > bound)
        throw std::invalid_argument("coinvariant_model: n out of range");
    CoinvariantModel model;
    model.n = n;
    model.vdm = vandermonde<Rat>(n);
    std::vector<DerivedOp> ops;
    for (int v = 0; v < n; ++v) ops.push_back({v, 1, false});
    model.span = graded_span<Rat>(n, n, {model.vdm}, ops);
    model.total_dim = model.span.total_dim();

    if (n <= 4) {
        const auto quotient = graded_quotient(coinvariant_generators(n));
        if (quotient.total_dim() != model.total_dim)
            throw std::logic_error("coinvariant model dimension mismatch");
        for (int d = 0; d <= quotient.top_degree() + 1; ++d)
            if (quotient.hilbert_at(d) != model.class_dim(d))
                throw std::logic_error("coinvariant model grading mismatch");
    }
    return model;
}

struct Filtration {
    int n = 0;
    int p = 0;
    std::vector<long> layer_dims;  ///< dim F_s, s = 0,1,...
    std::vector<long> gr_dims;     ///< dim F_s - dim F_{s-1}
    std::vector<std::vector<Polynomial<Rat>>> layer_bases;

    int top_layer() const { return static_cast<int>(gr_dims.size()) - 1; }
};

/**
 * F_0 = constants, F_1 = span{1, x_i, x_i^p}, F_{s+1} = F_1 * F_s, until the
 * whole n!-dimensional algebra is reached. Layers are built by applying
 * {id, partial_i, partial_i^p} to the previous layer in the apolar model.
 */
inline Filtration gr_series(int n, int p, int bound = kHarmonicBound) {
    if (p < 2) throw std::invalid_argument("gr_series: p must be >= 2");
    const CoinvariantModel model = coinvariant_model(n, bound);

    Filtration f;
    f.n = n;
    f.p = p;

    EchelonBasis<Rat> current;
    current.insert(model.vdm);
    std::vector<Polynomial<Rat>> frontier = {model.vdm};
    f.layer_dims.push_back(static_cast<long>(current.dim()));
    f.gr_dims.push_back(static_cast<long>(current.dim()));
    f.layer_bases.push_back(frontier);

    while (f.layer_dims.back() < model.total_dim) {
        std::vector<Polynomial<Rat>> next_frontier;
        long before = f.layer_dims.back();
        for (const auto& v : frontier)
            for (int i = 0; i < n; ++i)
                for (int order : {1, p}) {
                    Polynomial<Rat> img = v.derivative(i, order);
                    if (img.is_zero()) continue;
                    if (current.insert(img)) next_frontier.push_back(std::move(img));
                }
        const long now = static_cast<long>(current.dim());
        if (now == before)
            throw std::logic_error("gr_series: filtration stalled before n!");
        f.layer_dims.push_back(now);
        f.gr_dims.push_back(now - before);
        std::vector<Polynomial<Rat>> layer;
        for (const auto& row : current.rows()) layer.push_back(row);
        f.layer_bases.push_back(std::move(layer));
        frontier = std::move(next_frontier);
    }
    return f;
}

/// Multiplicity of the sign character of P_n/J inside F_s. In the apolar
/// model the sign twist turns the antisymmetrizer into the plain
/// symmetrizer, whose rank on the layer is taken exactly.
inline long sign_multiplicity_in_layer(const Filtration& f, int s) {
    const auto& basis = f.layer_bases[static_cast<std::size_t>(s)];
    if (basis.empty()) return 0;
    const int n = f.n;
    EchelonBasis<Rat> image;
    const auto perms = all_permutations(n);
    for (const auto& v : basis) {
        Polynomial<Rat> proj(n);
        for (const auto& w : perms) proj.add_scaled(v.rename_variables(w), Rat(1));
        if (!proj.is_zero()) image.insert(std::move(proj));
    }
    return static_cast<long>(image.dim());
}

/// Layer index where the sign character of P_n/J first appears.
inline int sign_layer(const Filtration& f) {
    for (int s = 0; s <= f.top_layer(); ++s)
        if (sign_multiplicity_in_layer(f, s) > 0) return s;
    return -1;
}

/// Every F_s is S_n-stable: transposed basis vectors stay inside the layer.
inline bool layers_sn_stable(const Filtration& f) {
    for (const auto& basis : f.layer_bases) {
        EchelonBasis<Rat> span;
        for (const auto& v : basis) span.insert(v);
        for (const auto& v : basis)
            for (int a = 0; a + 1 < f.n; ++a)
                if (!span.contains(
                        v.rename_variables(transposition(f.n, a, a + 1))))
                    return false;
    }
    return true;
}

/// Comparison of Gr(F) for (n = pq + r, p) against A_{sigma(p,q,r)}.
struct GrReport {
    int p = 0, q = 0, r = 0, n = 0;
    std::vector<long> gr_dims;
    std::vector<long> a_collapsed;      ///< total-degree collapse of A_sigma
    bool series_equal = false;
    long d_sigma = 0;
    bool top_layer_matches = false;     ///< top index d_sigma, dimension 1
    bool sign_at_top = false;
    long d_formula = 0, dvee_formula = 0;
    bool top_degree_formulas = false;   ///< tanisaki tops match d, d-vee

    bool pass() const {
        return series_equal && top_layer_matches && sign_at_top &&
               top_degree_formulas;
    }
};

inline GrReport gr_vs_a(int p, int q, int r, int bound = kHarmonicBound) {
    const Partition sigma = box_plus_row(p, q, r);
    const int n = sigma.n();
    if (n > bound) throw std::invalid_argument("gr_vs_a: n exceeds the bound");

    GrReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.n = n;

    const Filtration f = gr_series(n, p, bound);
    rep.gr_dims = f.gr_dims;

    const HarmonicSpace h = harmonic_space(sigma, bound);
    rep.d_sigma = h.d_sigma;
    rep.a_collapsed.assign(static_cast<std::size_t>(h.d_sigma) + 1, 0);
    for (const auto& [key, dim] : h.dims())
        rep.a_collapsed[static_cast<std::size_t>(key.first + key.second)] += dim;

    rep.series_equal = rep.gr_dims == rep.a_collapsed;
    rep.top_layer_matches =
        f.top_layer() == rep.d_sigma && f.gr_dims.back() == 1;
    rep.sign_at_top = sign_layer(f) == rep.d_sigma;

    rep.d_formula = (2L * q * r + static_cast<long>(p) * (q - 1) * q) / 2;
    rep.dvee_formula =
        (static_cast<long>(q) * p * (p - 1) + static_cast<long>(r) * (r - 1)) / 2;
    const auto qt = graded_quotient(tanisaki_generators(sigma));
    const auto qd = graded_quotient(tanisaki_generators(sigma.dual()));
    rep.top_degree_formulas =
        qt.top_degree() == rep.d_formula && qd.top_degree() == rep.dvee_formula &&
        p * rep.d_formula + rep.dvee_formula == static_cast<long>(n) * (n - 1) / 2;
    return rep;
}

}  // namespace nbang

#endif
