/**
 * @file linalg.hpp
 * @brief Exact linear algebra: reduced echelon bases of polynomial spans,
 *        the graded closure engine behind every derivative-span computation,
 *        certified rank (exact and modular-consensus), and small dense
 *        rational matrices.
 */
#ifndef NBANG_LINALG_HPP
#define NBANG_LINALG_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbang/coeff.hpp"
#include "nbang/polynomial.hpp"

namespace nbang {

/**
 * Reduced echelon basis of a span of polynomials. Rows are fully
 * inter-reduced with leading coefficient 1, so the basis of a given
 * subspace is canonical: it does not depend on insertion order.
 */
template <class K>
class EchelonBasis {
  public:
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Polynomial<K>>& rows() const { return rows_; }

    /// Full normal form of v modulo the span.
    Polynomial<K> reduce(Polynomial<K> v) const {
        std::size_t idx = 0;
        while (idx < v.term_count()) {
            const auto it = pivots_.find(v.terms()[idx].mono);
            if (it == pivots_.end()) {
                ++idx;
                continue;
            }
            K c = v.terms()[idx].coeff;
            v.add_scaled(rows_[it->second], -c);
        }
        return v;
    }

    /// Inserts v; returns true iff the dimension grew.
    bool insert(Polynomial<K> v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        K inv = unit_over(v.leading().coeff);
        v *= inv;
        const Monomial pivot = v.leading().mono;
        for (auto& row : rows_) {
            const K c = row.coefficient(pivot);
            if (!coeff_is_zero(c)) row.add_scaled(v, -c);
        }
        pivots_.emplace(pivot, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const Polynomial<K>& v) const { return reduce(v).is_zero(); }

    bool is_pivot(const Monomial& m) const { return pivots_.count(m) > 0; }

    /// Coordinates of v in the basis rows, or nullopt if v is outside.
    std::optional<std::vector<K>> coords(Polynomial<K> v) const {
        std::vector<K> c(rows_.size(), K(0));
        std::size_t idx = 0;
        while (idx < v.term_count()) {
            const auto it = pivots_.find(v.terms()[idx].mono);
            if (it == pivots_.end()) return std::nullopt;
            const K a = v.terms()[idx].coeff;
            c[it->second] += a;
            v.add_scaled(rows_[it->second], -a);
        }
        return c;
    }

  private:
    static K unit_over(const K& c) {
        if constexpr (field_traits<K>::is_prime_field)
            return c.inverse();
        else
            return K(1) / c;
    }

    std::vector<Polynomial<K>> rows_;
    std::map<Monomial, std::size_t, MonomialDesc> pivots_;
};

/// A first-order or divided-power derivation used to close a span.
struct DerivedOp {
    int var = 0;
    int order = 1;
    bool divided = false;
};

/**
 * Graded span: per-(bi)degree reduced bases plus, for every accepted basis
 * vector, the operator monomial that produced it from the generator.
 * Single-graded spans use xvars == vars (the Y-degree is then always 0).
 */
template <class K>
struct GradedSpan {
    int vars = 0;
    int xvars = 0;
    std::map<std::pair<int, int>, EchelonBasis<K>> slices;
    std::map<std::pair<int, int>, std::vector<Monomial>> tags;

    long total_dim() const {
        long d = 0;
        for (const auto& [key, basis] : slices) d += static_cast<long>(basis.dim());
        return d;
    }

    std::map<std::pair<int, int>, long> dims() const {
        std::map<std::pair<int, int>, long> out;
        for (const auto& [key, basis] : slices)
            if (basis.dim()) out[key] = static_cast<long>(basis.dim());
        return out;
    }
};

/**
 * Smallest graded subspace containing the (homogeneous) generators and
 * closed under the listed derivations. Derivations lower degree, so the
 * closure proceeds degree by degree downward; the per-slice reduced bases
 * are canonical whatever the traversal order.
 */
template <class K>
GradedSpan<K> graded_span(int vars, int xvars,
                          const std::vector<Polynomial<K>>& generators,
                          const std::vector<DerivedOp>& ops) {
    GradedSpan<K> span;
    span.vars = vars;
    span.xvars = xvars;

    struct Item {
        Polynomial<K> poly;
        Monomial tag;
    };
    std::map<int, std::deque<Item>> pending;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("graded_span: generator is not homogeneous");
        pending[g.degree()].push_back(Item{g, Monomial(vars)});
    }

    while (!pending.empty()) {
        const int deg = pending.rbegin()->first;
        auto& queue = pending.rbegin()->second;
        if (queue.empty()) {
            pending.erase(deg);
            continue;
        }
        Item item = std::move(queue.front());
        queue.pop_front();

        const auto key = item.poly.bidegree(xvars);
        if (!span.slices[key].insert(item.poly)) continue;
        span.tags[key].push_back(item.tag);

        for (const auto& op : ops) {
            Polynomial<K> img = op.divided
                                    ? item.poly.divided_derivative(op.var, op.order)
                                    : item.poly.derivative(op.var, op.order);
            if (img.is_zero()) continue;
            Monomial tag = item.tag;
            tag.set(op.var, tag.exp(op.var) + op.order);
            pending[deg - op.order].push_back(Item{std::move(img), std::move(tag)});
        }
    }
    return span;
}

// ---------------------------------------------------------------------------
// Certified rank of a sparse exact matrix.
// ---------------------------------------------------------------------------

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Seed for the replayable modular-prime generator; recorded in all reports.
constexpr std::uint64_t kDefaultPrimeSeed = 0x6e62616e67ULL;

inline std::vector<unsigned long> draw_primes(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> dist(1ul << 30, (1ul << 31) - 1);
    std::vector<unsigned long> primes;
    while (primes.size() < count) {
        unsigned long c = dist(rng) | 1ul;
        if (!is_prime(c)) continue;
        bool seen = false;
        for (unsigned long p : primes) seen |= (p == c);
        if (!seen) primes.push_back(c);
    }
    return primes;
}

/// Rank by exact sparse Gaussian elimination over the rationals.
inline long sparse_rank_exact(const std::vector<SparseRow>& rows) {
    std::map<std::size_t, SparseRow> pivots;  // pivot column -> reduced row
    long rank = 0;
    for (const auto& input : rows) {
        SparseRow v = input;
        while (!v.empty()) {
            const std::size_t col = v.front().first;
            const auto it = pivots.find(col);
            if (it == pivots.end()) break;
            const Rat factor = v.front().second;
            // v -= factor * pivot row (both sorted by column)
            SparseRow merged;
            std::size_t i = 0, j = 0;
            const SparseRow& w = it->second;
            while (i < v.size() && j < w.size()) {
                if (v[i].first < w[j].first) {
                    merged.push_back(v[i++]);
                } else if (v[i].first > w[j].first) {
                    Rat c = -factor * w[j].second;
                    if (sgn(c)) merged.emplace_back(w[j].first, c);
                    ++j;
                } else {
                    Rat c = v[i].second - factor * w[j].second;
                    if (sgn(c)) merged.emplace_back(v[i].first, c);
                    ++i;
                    ++j;
                }
            }
            while (i < v.size()) merged.push_back(v[i++]);
            while (j < w.size()) {
                Rat c = -factor * w[j].second;
                if (sgn(c)) merged.emplace_back(w[j].first, c);
                ++j;
            }
            v = std::move(merged);
        }
        if (v.empty()) continue;
        const Rat lead = v.front().second;
        for (auto& [col, c] : v) c /= lead;
        pivots.emplace(v.front().first, std::move(v));
        ++rank;
    }
    return rank;
}

/// Rank modulo p. Entries with denominator divisible by p are reported via
/// the return flag so the caller can pick a different prime.
inline std::optional<long> sparse_rank_mod(const std::vector<SparseRow>& rows,
                                           unsigned long p) {
    using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
    auto inv_mod = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::map<std::size_t, Row> pivots;
    long rank = 0;
    for (const auto& input : rows) {
        Row v;
        for (const auto& [col, q] : input) {
            const Int num = q.get_num(), den = q.get_den();
            if (mpz_divisible_ui_p(den.get_mpz_t(), p)) return std::nullopt;
            const std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
            const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
            const std::uint64_t e = n * inv_mod(d) % p;
            if (e) v.emplace_back(col, e);
        }
        while (!v.empty()) {
            const auto it = pivots.find(v.front().first);
            if (it == pivots.end()) break;
            const std::uint64_t factor = v.front().second;
            Row merged;
            std::size_t i = 0, j = 0;
            const Row& w = it->second;
            while (i < v.size() && j < w.size()) {
                if (v[i].first < w[j].first) {
                    merged.push_back(v[i++]);
                } else if (v[i].first > w[j].first) {
                    const std::uint64_t c = (p - factor * w[j].second % p) % p;
                    if (c) merged.emplace_back(w[j].first, c);
                    ++j;
                } else {
                    const std::uint64_t c =
                        (v[i].second + p - factor * w[j].second % p) % p;
                    if (c) merged.emplace_back(v[i].first, c);
                    ++i;
                    ++j;
                }
            }
            while (i < v.size()) merged.push_back(v[i++]);
            while (j < w.size()) {
                const std::uint64_t c = (p - factor * w[j].second % p) % p;
                if (c) merged.emplace_back(w[j].first, c);
                ++j;
            }
            v = std::move(merged);
        }
        if (v.empty()) continue;
        const std::uint64_t inv = inv_mod(v.front().second);
        for (auto& [col, c] : v) c = c * inv % p;
        pivots.emplace(v.front().first, std::move(v));
        ++rank;
    }
    return rank;
}

enum class RankMode { exact, modular_consensus };

struct RankResult {
    long rank = 0;
    std::string certificate;  ///< "exact" or "consensus"
    std::vector<unsigned long> primes;
    std::uint64_t seed = kDefaultPrimeSeed;
};

/**
 * Exact mode: fraction-free elimination, unconditional. Consensus mode:
 * ranks modulo two distinct seeded 31-bit primes; agreement certifies a
 * lower bound (mod-p rank never exceeds the rational rank) and is returned
 * as "consensus"; disagreement escalates to exact.
 */
inline RankResult rank_certified(const std::vector<SparseRow>& rows, RankMode mode,
                                 std::uint64_t seed = kDefaultPrimeSeed) {
    RankResult res;
    res.seed = seed;
    if (mode == RankMode::exact) {
        res.rank = sparse_rank_exact(rows);
        res.certificate = "exact";
        return res;
    }
    std::vector<unsigned long> primes = draw_primes(8, seed);
    std::vector<long> ranks;
    for (unsigned long p : primes) {
        if (ranks.size() == 2) break;
        const auto r = sparse_rank_mod(rows, p);
        if (!r) continue;  // denominator hit this prime; use the next one
        ranks.push_back(*r);
        res.primes.push_back(p);
    }
    if (ranks.size() == 2 && ranks[0] == ranks[1]) {
        res.rank = ranks[0];
        res.certificate = "consensus";
        return res;
    }
    res.rank = sparse_rank_exact(rows);
    res.certificate = "exact";
    return res;
}

// ---------------------------------------------------------------------------
// Dense rational matrices (nilpotent-pair arithmetic, small solves).
// ---------------------------------------------------------------------------

class MatQ {
  public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static MatQ identity(std::size_t n) {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    friend MatQ operator+(const MatQ& x, const MatQ& y) {
        MatQ r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend MatQ operator-(const MatQ& x, const MatQ& y) {
        MatQ r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    friend MatQ operator*(const MatQ& x, const MatQ& y) {
        MatQ r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Rat& c = x(i, k);
                if (sgn(c) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += c * y(k, j);
            }
        return r;
    }
    friend MatQ operator*(const Rat& c, const MatQ& x) {
        MatQ r = x;
        for (auto& v : r.a_) v *= c;
        return r;
    }

    MatQ transpose() const {
        MatQ r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (sgn(v)) return false;
        return true;
    }

    Rat trace() const {
        Rat t = 0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    friend bool operator==(const MatQ& x, const MatQ& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    long rank() const {
        MatQ m = *this;
        long r = 0;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
            std::size_t piv = lead;
            while (piv < rows_ && sgn(m(piv, col)) == 0) ++piv;
            if (piv == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(lead, j));
            const Rat inv = Rat(1) / m(lead, col);
            for (std::size_t j = col; j < cols_; ++j) m(lead, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == lead || sgn(m(i, col)) == 0) continue;
                const Rat f = m(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    m(i, j) -= f * m(lead, j);
            }
            ++lead;
            ++r;
        }
        return r;
    }

    /// Basis of the right null space {x : Ax = 0}.
    std::vector<std::vector<Rat>> nullspace() const {
        MatQ m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
            std::size_t piv = lead;
            while (piv < rows_ && sgn(m(piv, col)) == 0) ++piv;
            if (piv == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(lead, j));
            const Rat inv = Rat(1) / m(lead, col);
            for (std::size_t j = col; j < cols_; ++j) m(lead, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == lead || sgn(m(i, col)) == 0) continue;
                const Rat f = m(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    m(i, j) -= f * m(lead, j);
            }
            pivot_col.push_back(col);
            ++lead;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<Rat>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rat> x(cols_, Rat(0));
            x[free] = 1;
            for (std::size_t k = 0; k < pivot_col.size(); ++k)
                x[pivot_col[k]] = -m(k, free);
            basis.push_back(std::move(x));
        }
        return basis;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace nbang

#endif
