/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over an exact coefficient field,
 *        with the differential operators (ordinary and divided powers) and
 *        the symmetric-function builders used throughout.
 *
 * Monomials are exponent vectors ordered by graded lex (degree first, then
 * earlier variables weigh more); the order is fixed globally so reduced
 * bases and serialized output are reproducible. Exponent arithmetic is
 * checked; overflow throws instead of wrapping.
 */
#ifndef NBANG_POLYNOMIAL_HPP
#define NBANG_POLYNOMIAL_HPP

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbang/coeff.hpp"

namespace nbang {

constexpr int kMaxExponent = 1 << 20;

/// Exponent vector of fixed length (the variable count).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int vars) : e_(static_cast<std::size_t>(vars), 0) {}
    Monomial(int vars, const std::vector<std::pair<int, int>>& exps)
        : e_(static_cast<std::size_t>(vars), 0) {
        for (auto [v, k] : exps) set(v, exp(v) + k);
    }

    int vars() const { return static_cast<int>(e_.size()); }
    int exp(int v) const { return e_[static_cast<std::size_t>(v)]; }
    void set(int v, int k) {
        if (k < 0 || k > kMaxExponent)
            throw std::overflow_error("monomial: exponent out of range");
        e_[static_cast<std::size_t>(v)] = k;
    }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        for (int k : e_)
            if (k) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int v = 0; v < vars(); ++v) r.set(v, r.exp(v) + o.exp(v));
        return r;
    }

    /// Graded lex: degree first; ties broken so that a higher exponent on an
    /// earlier variable makes the monomial larger.
    static int compare(const Monomial& a, const Monomial& b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t v = 0; v < a.e_.size(); ++v)
            if (a.e_[v] != b.e_[v]) return a.e_[v] < b.e_[v] ? -1 : 1;
        return 0;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return compare(a, b) < 0;
    }

    const std::vector<int>& exponents() const { return e_; }

  private:
    std::vector<int> e_;
};

/// Descending graded-lex comparator (leading monomial first).
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// All monomials in `vars` variables of total degree d, descending.
inline std::vector<Monomial> monomials_of_degree(int vars, int d) {
    std::vector<Monomial> out;
    Monomial m(vars);
    auto rec = [&](auto&& self, int v, int rem) -> void {
        if (v == vars - 1) {
            m.set(v, rem);
            out.push_back(m);
            m.set(v, 0);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            m.set(v, k);
            self(self, v + 1, rem - k);
        }
        m.set(v, 0);
    };
    if (vars > 0)
        rec(rec, 0, d);
    else if (d == 0)
        out.push_back(m);
    return out;
}

/// Sparse polynomial: sorted term list, leading monomial first, no zeros.
template <class K>
class Polynomial {
  public:
    struct Term {
        Monomial mono;
        K coeff;
    };

    Polynomial() = default;
    explicit Polynomial(int vars) : vars_(vars) {}

    static Polynomial zero(int vars) { return Polynomial(vars); }

    static Polynomial term(const Monomial& m, const K& c) {
        Polynomial p(m.vars());
        if (!coeff_is_zero(c)) p.terms_.push_back(Term{m, c});
        return p;
    }

    static Polynomial constant(int vars, const K& c) {
        return term(Monomial(vars), c);
    }

    static Polynomial variable(int vars, int v, int power = 1) {
        return term(Monomial(vars, {{v, power}}), K(1));
    }

    /// Builds from unsorted terms, combining duplicates.
    static Polynomial from_terms(int vars, std::vector<Term> terms) {
        std::map<Monomial, K, MonomialDesc> acc;
        for (auto& t : terms) {
            auto [it, fresh] = acc.emplace(t.mono, t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        Polynomial p(vars);
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) p.terms_.push_back(Term{m, c});
        return p;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        return terms_.front();
    }

    int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    /// True iff every term has the same total degree.
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    /// (degree in the first xvars variables, degree in the rest); requires
    /// all terms to share the bidegree.
    std::pair<int, int> bidegree(int xvars) const {
        if (terms_.empty()) return {-1, -1};
        auto bd = [&](const Monomial& m) {
            int x = 0;
            for (int v = 0; v < xvars; ++v) x += m.exp(v);
            return std::pair<int, int>{x, m.degree() - x};
        };
        auto first = bd(terms_.front().mono);
        for (const auto& t : terms_)
            if (bd(t.mono) != first)
                throw std::logic_error("polynomial is not bihomogeneous");
        return first;
    }

    K coefficient(const Monomial& m) const {
        // binary search over the descending order
        std::size_t lo = 0, hi = terms_.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            const int c = Monomial::compare(terms_[mid].mono, m);
            if (c == 0) return terms_[mid].coeff;
            if (c > 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return K(0);
    }

    Polynomial& operator*=(const K& c) {
        if (coeff_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.coeff *= c;
        return *this;
    }

    /// this += c * other, by merge of the sorted term lists.
    void add_scaled(const Polynomial& other, const K& c) {
        if (coeff_is_zero(c) || other.terms_.empty()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < other.terms_.size()) {
            const int cmp = Monomial::compare(terms_[i].mono, other.terms_[j].mono);
            if (cmp > 0) {
                merged.push_back(std::move(terms_[i++]));
            } else if (cmp < 0) {
                K nc = other.terms_[j].coeff;
                nc *= c;
                if (!coeff_is_zero(nc)) merged.push_back(Term{other.terms_[j].mono, nc});
                ++j;
            } else {
                K nc = other.terms_[j].coeff;
                nc *= c;
                nc += terms_[i].coeff;
                if (!coeff_is_zero(nc)) merged.push_back(Term{terms_[i].mono, nc});
                ++i;
                ++j;
            }
        }
        while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
        while (j < other.terms_.size()) {
            K nc = other.terms_[j].coeff;
            nc *= c;
            if (!coeff_is_zero(nc)) merged.push_back(Term{other.terms_[j].mono, nc});
            ++j;
        }
        terms_ = std::move(merged);
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r.add_scaled(o, K(1));
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        r.add_scaled(o, K(-1));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        std::map<Monomial, K, MonomialDesc> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                K c = a.coeff;
                c *= b.coeff;
                const Monomial m = a.mono * b.mono;
                auto [it, fresh] = acc.emplace(m, c);
                if (!fresh) it->second += c;
            }
        Polynomial r(vars_);
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) r.terms_.push_back(Term{m, c});
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono ||
                !coeff_is_zero(a.terms_[i].coeff - b.terms_[i].coeff))
                return false;
        return true;
    }

    /// Ordinary partial derivative, iterated `order` times. Lowering the
    /// same variable by the same amount preserves the graded-lex order, so
    /// the term list stays sorted.
    Polynomial derivative(int var, int order = 1) const {
        Polynomial r(vars_);
        for (const auto& t : terms_) {
            const int a = t.mono.exp(var);
            if (a < order) continue;
            K c = t.coeff;
            for (int s = 0; s < order; ++s) c *= K(a - s);
            if (coeff_is_zero(c)) continue;
            Monomial m = t.mono;
            m.set(var, a - order);
            r.terms_.push_back(Term{m, c});
        }
        return r;
    }

    /// Divided power derivative: X^a -> C(a,m) X^{a-m}. Over F_p the
    /// binomial is taken by Lucas; over the rationals exactly.
    Polynomial divided_derivative(int var, int m) const {
        if (m < 1) throw std::invalid_argument("divided_derivative: order >= 1");
        Polynomial r(vars_);
        for (const auto& t : terms_) {
            const int a = t.mono.exp(var);
            if (a < m) continue;
            K c = t.coeff;
            c *= binomial_in<K>(a, m);
            if (coeff_is_zero(c)) continue;
            Monomial mm = t.mono;
            mm.set(var, a - m);
            r.terms_.push_back(Term{mm, c});
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (k) s += " + ";
            s += coeff_to_string(terms_[k].coeff);
            for (int v = 0; v < vars_; ++v) {
                const int e = terms_[k].mono.exp(v);
                if (!e) continue;
                s += '*';
                s += v < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(v)]
                                                        : "x" + std::to_string(v);
                if (e > 1) s += '^' + std::to_string(e);
            }
        }
        return s;
    }

    /// Restores the sorted-descending invariant (used by transforms that
    /// permute or remap exponents).
    void resort() {
        std::map<Monomial, K, MonomialDesc> acc;
        for (auto& t : terms_) {
            auto [it, fresh] = acc.emplace(t.mono, t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        terms_.clear();
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) terms_.push_back(Term{m, c});
    }

    /// Applies a variable permutation: variable v of the result carries the
    /// exponent of variable perm[v] ... i.e. x_v -> x_{perm[v]}.
    Polynomial rename_variables(const std::vector<int>& perm) const {
        Polynomial r(vars_);
        for (const auto& t : terms_) {
            Monomial m(vars_);
            for (int v = 0; v < vars_; ++v)
                m.set(perm[static_cast<std::size_t>(v)], t.mono.exp(v));
            r.terms_.push_back(Term{m, t.coeff});
        }
        r.resort();
        return r;
    }

  private:
    template <class F>
    static F binomial_in(int a, int m) {
        if constexpr (field_traits<F>::is_prime_field) {
            return F(static_cast<long>(binom_mod(
                static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(m),
                field_traits<F>::characteristic)));
        } else {
            Int num = 1;
            for (int t = 0; t < m; ++t) num *= a - t;
            Rat b(num, factorial(m));
            b.canonicalize();
            return b;
        }
    }

    int vars_ = 0;
    std::vector<Term> terms_;
};

template <class K>
inline Polynomial<K> differentiate(const Polynomial<K>& f, int var, int order = 1) {
    return f.derivative(var, order);
}

template <class K>
inline Polynomial<K> divided_diff(const Polynomial<K>& f, int var, int m) {
    return f.divided_derivative(var, m);
}

/// f(partial)(g): apply every term of f as a monomial differential operator.
template <class K>
inline Polynomial<K> apply_operator(const Polynomial<K>& f, const Polynomial<K>& g) {
    Polynomial<K> acc(g.vars());
    for (const auto& t : f.terms()) {
        Polynomial<K> d = g;
        for (int v = 0; v < f.vars() && !d.is_zero(); ++v) {
            const int k = t.mono.exp(v);
            if (k) d = d.derivative(v, k);
        }
        acc.add_scaled(d, t.coeff);
    }
    return acc;
}

/// Constant term of f(partial)(g), characteristic zero. Equals
/// sum_m f_m g_m m! over the common monomials.
inline Rat apolar_pair(const Polynomial<Rat>& f, const Polynomial<Rat>& g) {
    if (f.vars() != g.vars())
        throw std::invalid_argument("apolar_pair: variable counts differ");
    Rat acc = 0;
    for (const auto& t : f.terms()) {
        const Rat gc = g.coefficient(t.mono);
        if (coeff_is_zero(gc)) continue;
        Int w = 1;
        for (int e : t.mono.exponents()) w *= factorial(e);
        acc += t.coeff * gc * Rat(w);
    }
    return acc;
}

/// Constant term of m(partial)(g) for a single monomial operator m.
inline Rat apolar_with_monomial(const Monomial& m, const Polynomial<Rat>& g) {
    const Rat gc = g.coefficient(m);
    if (coeff_is_zero(gc)) return Rat(0);
    Int w = 1;
    for (int e : m.exponents()) w *= factorial(e);
    return gc * Rat(w);
}

/// r-th elementary symmetric polynomial in the chosen variables (0-based
/// indices into a ring with `vars` variables). r > |indices| gives 0.
template <class K>
inline Polynomial<K> elementary_symmetric(int vars, const std::vector<int>& indices,
                                          int r) {
    if (r <= 0) throw std::invalid_argument("elementary_symmetric: r must be >= 1");
    const int t = static_cast<int>(indices.size());
    for (std::size_t a = 0; a + 1 < indices.size(); ++a)
        if (indices[a] >= indices[a + 1])
            throw std::invalid_argument("elementary_symmetric: indices must increase");
    Polynomial<K> p(vars);
    if (r > t) return p;
    std::vector<typename Polynomial<K>::Term> terms;
    std::vector<int> pick(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == r) {
            Monomial m(vars);
            for (int v : pick) m.set(v, m.exp(v) + 1);
            terms.push_back({m, K(1)});
            return;
        }
        for (int a = from; a < t; ++a) {
            pick[static_cast<std::size_t>(depth)] = indices[static_cast<std::size_t>(a)];
            self(self, a + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return Polynomial<K>::from_terms(vars, std::move(terms));
}

/// Complete homogeneous sum of degree h in the chosen variables.
template <class K>
inline Polynomial<K> complete_homogeneous(int vars, const std::vector<int>& indices,
                                          int h) {
    std::vector<typename Polynomial<K>::Term> terms;
    const int t = static_cast<int>(indices.size());
    std::vector<int> exps(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == t - 1) {
            exps[static_cast<std::size_t>(pos)] = rem;
            Monomial m(vars);
            for (int a = 0; a < t; ++a)
                m.set(indices[static_cast<std::size_t>(a)],
                      m.exp(indices[static_cast<std::size_t>(a)]) +
                          exps[static_cast<std::size_t>(a)]);
            terms.push_back({m, K(1)});
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            exps[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, rem - k);
        }
    };
    if (t == 0) {
        if (h == 0) terms.push_back({Monomial(vars), K(1)});
    } else {
        rec(rec, 0, h);
    }
    return Polynomial<K>::from_terms(vars, std::move(terms));
}

/// S_{h,t,k} = (Z_1 ... Z_t)^k * (complete homogeneous of degree h), over the
/// chosen t variables; total degree h + tk.
template <class K>
inline Polynomial<K> s_htk(int vars, const std::vector<int>& indices, int h, int k) {
    if (indices.empty()) throw std::invalid_argument("s_htk: t must be >= 1");
    Polynomial<K> body = complete_homogeneous<K>(vars, indices, h);
    Monomial shift(vars);
    for (int v : indices) shift.set(v, k);
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& t : body.terms()) terms.push_back({t.mono * shift, t.coeff});
    return Polynomial<K>::from_terms(vars, std::move(terms));
}

}  // namespace nbang

#endif
