/**
 * @file partition.hpp
 * @brief Partitions and their diagram combinatorics: duals, the integers
 *        d_k and n_k, degree/remainder of n, shape classification and the
 *        one-box reduction step.
 */
#ifndef NBANG_PARTITION_HPP
#define NBANG_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbang {

/// Lattice cell (i,j); i is the column (X-exponent), j the row (Y-exponent).
struct Cell {
    int i = 0;
    int j = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A partition sigma_0 >= sigma_1 >= ... >= sigma_m > 0 of n = sum(parts).
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("partition: empty part list");
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] <= 0)
                throw std::invalid_argument("partition: parts must be positive");
            if (j > 0 && parts_[j] > parts_[j - 1])
                throw std::invalid_argument("partition: parts must be nonincreasing");
        }
    }

    /// Parses "p0,p1,..." (e.g. "3,1,1"). Rejects the empty string.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("partition: bad part '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("partition: bad part '" + tok + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part sigma_j, with sigma_j = 0 beyond the last row.
    int part(int j) const {
        return (j >= 0 && j < length()) ? parts_[static_cast<std::size_t>(j)] : 0;
    }

    /// Dual partition: sigma^vee_k = #{j : sigma_j > k}.
    Partition dual() const {
        std::vector<int> d(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int k = 0; k < p; ++k) ++d[static_cast<std::size_t>(k)];
        return Partition(std::move(d));
    }

    /// Cells of D_sigma = {(i,j) : i < sigma_j} in row-major order
    /// (j ascending, i ascending within each row).
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(n()));
        for (int j = 0; j < length(); ++j)
            for (int i = 0; i < parts_[static_cast<std::size_t>(j)]; ++i)
                out.push_back(Cell{i, j});
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(parts_[j]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// Diagram invariants of sigma.
struct DiagramStats {
    std::vector<Cell> cells;      ///< row-major cells of D_sigma
    long d_sigma = 0;             ///< sum of i+j over the cells (top degree)
    int d_ideal = 0;              ///< smallest d with C[X,Y]_d contained in I_sigma
    long staircase_defect = 0;    ///< N = d_ideal(d_ideal+1)/2 - n; 0 iff staircase
};

inline DiagramStats diagram_stats(const Partition& sigma) {
    DiagramStats st;
    st.cells = sigma.cells();
    int max_norm = 0;
    for (const Cell& c : st.cells) {
        st.d_sigma += c.i + c.j;
        max_norm = std::max(max_norm, c.i + c.j);
    }
    st.d_ideal = max_norm + 1;
    st.staircase_defect =
        static_cast<long>(st.d_ideal) * (st.d_ideal + 1) / 2 - sigma.n();
    return st;
}

/// d_k(sigma) = n - sum_{s=0}^{n-k-1} sigma^vee_s, for 1 <= k <= n.
inline int d_k(const Partition& sigma, int k) {
    const int n = sigma.n();
    if (k < 1 || k > n) throw std::invalid_argument("d_k: k out of range");
    const Partition dv = sigma.dual();
    int sum = 0;
    for (int s = 0; s <= n - k - 1; ++s) sum += dv.part(s);
    return n - sum;
}

/// Tail sum n_k(sigma) = sigma^vee_k + sigma^vee_{k+1} + ..., for k >= 0.
inline int n_k(const Partition& sigma, int k) {
    if (k < 0) throw std::invalid_argument("n_k: k must be >= 0");
    const Partition dv = sigma.dual();
    int sum = 0;
    for (int s = k; s < dv.length(); ++s) sum += dv.part(s);
    return sum;
}

/// n written as 1+2+...+m+s with 0 <= s < m+1; deg(n) = sum t(t-1) + s*m.
struct DegRemainder {
    long deg = 0;
    int remainder = 0;
};

inline DegRemainder deg_remainder(long n) {
    if (n < 1) throw std::invalid_argument("deg_remainder: n must be positive");
    long m = 0;
    while ((m + 1) * (m + 2) / 2 <= n) ++m;
    const long s = n - m * (m + 1) / 2;
    DegRemainder dr;
    for (long t = 1; t <= m; ++t) dr.deg += t * (t - 1);
    dr.deg += s * m;
    dr.remainder = static_cast<int>(s);
    return dr;
}

enum class Shape { staircase, box, box_plus_row, other };

struct Classification {
    Shape shape = Shape::other;
    int p = 0, q = 0, r = 0;  ///< set for box (r = 0) and box_plus_row shapes
    bool b_fixed = false;     ///< strictly decreasing parts
};

/// Shape of sigma. Staircase wins over box_plus_row when both apply;
/// box(p,q) is the r = 0 case of box_plus_row.
inline Classification classify(const Partition& sigma) {
    Classification c;
    const auto& parts = sigma.parts();
    c.b_fixed = true;
    for (std::size_t j = 0; j + 1 < parts.size(); ++j)
        if (parts[j] <= parts[j + 1]) c.b_fixed = false;

    bool staircase = parts.back() == 1 && c.b_fixed;
    for (std::size_t j = 0; staircase && j + 1 < parts.size(); ++j)
        if (parts[j] != parts[j + 1] + 1) staircase = false;
    if (staircase && parts[0] == static_cast<int>(parts.size())) {
        c.shape = Shape::staircase;
        return c;
    }

    const int p = parts[0];
    std::size_t q = 0;
    while (q < parts.size() && parts[q] == p) ++q;
    if (q == parts.size()) {
        if (p > 1) {
            c.shape = Shape::box;
            c.p = p;
            c.q = static_cast<int>(q);
        }
        return c;
    }
    if (q == parts.size() - 1 && p > 1 && parts[q] < p) {
        c.shape = Shape::box_plus_row;
        c.p = p;
        c.q = static_cast<int>(q);
        c.r = parts[q];
    }
    return c;
}

/// The box-plus-one-row partition sigma(p,q,r): p repeated q times, then r
/// (omitted when r = 0). Requires p > r >= 0, p > 1, q >= 1.
inline Partition box_plus_row(int p, int q, int r) {
    if (!(p > 1 && q >= 1 && r >= 0 && r < p))
        throw std::invalid_argument("box_plus_row: need p > r >= 0, p > 1, q >= 1");
    std::vector<int> parts(static_cast<std::size_t>(q), p);
    if (r > 0) parts.push_back(r);
    return Partition(std::move(parts));
}

/// Appends a part equal to 1, giving a partition of n+1.
inline Partition reduce_step(const Partition& sigma) {
    std::vector<int> parts = sigma.parts();
    parts.push_back(1);
    return Partition(std::move(parts));
}

/// All partitions of n, in lexicographically decreasing order of parts.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace nbang

#endif
