#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nbang/linalg.hpp"
#include "nbang/polynomial.hpp"

using namespace nbang;

namespace {

using PQ = Polynomial<Rat>;

PQ mono(int vars, std::vector<std::pair<int, int>> exps, long c = 1) {
    return PQ::term(Monomial(vars, exps), Rat(c));
}

template <class K>
Polynomial<K> random_poly(std::mt19937_64& rng, int vars, int max_deg, int terms) {
    std::uniform_int_distribution<int> expd(0, max_deg);
    std::uniform_int_distribution<long> coeffd(-9, 9);
    std::vector<typename Polynomial<K>::Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars);
        for (int v = 0; v < vars; ++v) m.set(v, expd(rng));
        ts.push_back({m, K(coeffd(rng))});
    }
    return Polynomial<K>::from_terms(vars, std::move(ts));
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric<Rat>(3, {0, 1}, 2) == mono(3, {{0, 1}, {1, 1}}));
    CHECK(elementary_symmetric<Rat>(3, {0, 1, 2}, 1) ==
          mono(3, {{0, 1}}) + mono(3, {{1, 1}}) + mono(3, {{2, 1}}));
    CHECK(elementary_symmetric<Rat>(3, {0, 1, 2}, 2) ==
          mono(3, {{0, 1}, {1, 1}}) + mono(3, {{0, 1}, {2, 1}}) +
              mono(3, {{1, 1}, {2, 1}}));
    CHECK(elementary_symmetric<Rat>(3, {0, 1}, 3).is_zero());
    CHECK_THROWS_AS(elementary_symmetric<Rat>(3, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("S_{h,t,k}") {
    CHECK(s_htk<Rat>(2, {0, 1}, 2, 0) ==
          mono(2, {{0, 2}}) + mono(2, {{0, 1}, {1, 1}}) + mono(2, {{1, 2}}));
    CHECK(s_htk<Rat>(2, {0, 1}, 0, 1) == mono(2, {{0, 1}, {1, 1}}));
    CHECK(s_htk<Rat>(1, {0}, 1, 1) == mono(1, {{0, 2}}));
    // total degree is h + t*k
    CHECK(s_htk<Rat>(4, {0, 2, 3}, 2, 3).degree() == 2 + 3 * 3);
}

TEST_CASE("ordinary derivatives") {
    const PQ f = mono(2, {{0, 2}, {1, 1}});  // X1^2 X2
    CHECK(differentiate(f, 0) == mono(2, {{0, 1}, {1, 1}}, 2));
    CHECK(differentiate(f, 0, 2) == mono(2, {{1, 1}}, 2));
    using P2 = Polynomial<Fp<2>>;
    const P2 g = P2::term(Monomial(1, {{0, 2}}), Fp<2>(1));
    CHECK(differentiate(g, 0).is_zero());
}

TEST_CASE("divided-power derivatives via Lucas") {
    using P2 = Polynomial<Fp<2>>;
    const P2 c3 = P2::term(Monomial(1, {{0, 3}}), Fp<2>(1));
    CHECK(divided_diff(c3, 0, 2) == P2::term(Monomial(1, {{0, 1}}), Fp<2>(1)));
    const P2 c2 = P2::term(Monomial(1, {{0, 2}}), Fp<2>(1));
    CHECK(divided_diff(c2, 0, 2) == P2::constant(1, Fp<2>(1)));
    using P3 = Polynomial<Fp<3>>;
    const P3 c4 = P3::term(Monomial(1, {{0, 4}}), Fp<3>(1));
    CHECK(divided_diff(c4, 0, 3) == P3::term(Monomial(1, {{0, 1}}), Fp<3>(1)));
}

TEST_CASE("apolar pairing") {
    CHECK(apolar_pair(mono(2, {{0, 1}}), mono(2, {{0, 1}})) == Rat(1));
    CHECK(apolar_pair(mono(2, {{0, 2}}), mono(2, {{0, 2}})) == Rat(2));
    CHECK(apolar_pair(mono(2, {{0, 1}}), mono(2, {{1, 1}})) == Rat(0));
}

TEST_CASE("partials commute on random sparse polynomials") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> vard(0, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const PQ f = random_poly<Rat>(rng, 8, 5, 12);
        const int a = vard(rng), b = vard(rng);
        CHECK(differentiate(differentiate(f, a), b) ==
              differentiate(differentiate(f, b), a));
    }
}

template <unsigned P>
static void lucas_composition_property() {
    std::mt19937_64 rng(P);
    std::uniform_int_distribution<int> expd(0, 24), ordd(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int e = expd(rng), a = ordd(rng), b = ordd(rng);
        using Poly = Polynomial<Fp<P>>;
        const Poly f = Poly::term(Monomial(1, {{0, e}}), Fp<P>(1));
        const Poly lhs = divided_diff(divided_diff(f, 0, b), 0, a);
        Poly rhs = divided_diff(f, 0, a + b);
        rhs *= Fp<P>(static_cast<long>(binom_mod(
            static_cast<std::uint64_t>(a + b), static_cast<std::uint64_t>(a), P)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("divided powers compose with Lucas binomials") {
    lucas_composition_property<2>();
    lucas_composition_property<3>();
    lucas_composition_property<5>();
}

TEST_CASE("graded span: basic closures") {
    // X1 - X2 under both partials: dims {1:1, 0:1}
    const PQ lin = mono(2, {{0, 1}}) - mono(2, {{1, 1}});
    auto span = graded_span<Rat>(2, 2, {lin}, {{0, 1, false}, {1, 1, false}});
    CHECK(span.total_dim() == 2);
    CHECK(span.slices[{1, 0}].dim() == 1);
    CHECK(span.slices[{0, 0}].dim() == 1);

    // Vandermonde in 3 variables: classical coinvariant dimension 3!
    const PQ v01 = mono(3, {{1, 1}}) - mono(3, {{0, 1}});
    const PQ v02 = mono(3, {{2, 1}}) - mono(3, {{0, 1}});
    const PQ v12 = mono(3, {{2, 1}}) - mono(3, {{1, 1}});
    const PQ vdm = v01 * v02 * v12;
    auto cspan = graded_span<Rat>(3, 3, {vdm},
                                  {{0, 1, false}, {1, 1, false}, {2, 1, false}});
    CHECK(cspan.total_dim() == 6);

    // X1X2 under both partials: dims {2:1, 1:2, 0:1}
    auto qspan = graded_span<Rat>(2, 2, {mono(2, {{0, 1}, {1, 1}})},
                                  {{0, 1, false}, {1, 1, false}});
    CHECK(qspan.total_dim() == 4);
    CHECK(qspan.slices[{2, 0}].dim() == 1);
    CHECK(qspan.slices[{1, 0}].dim() == 2);
    CHECK(qspan.slices[{0, 0}].dim() == 1);
}

TEST_CASE("graded span bases are canonical in the generator order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PQ> gens;
        for (int g = 0; g < 3; ++g) {
            PQ f(4);
            // homogeneous of degree 3
            for (const auto& m : monomials_of_degree(4, 3)) {
                std::uniform_int_distribution<long> cd(-2, 2);
                const long c = cd(rng);
                if (c) f.add_scaled(PQ::term(m, Rat(1)), Rat(c));
            }
            if (!f.is_zero()) gens.push_back(f);
        }
        std::vector<DerivedOp> ops;
        for (int v = 0; v < 4; ++v) ops.push_back({v, 1, false});
        auto a = graded_span<Rat>(4, 4, gens, ops);
        std::reverse(gens.begin(), gens.end());
        auto b = graded_span<Rat>(4, 4, gens, ops);
        REQUIRE(a.dims() == b.dims());
        for (const auto& [key, basis] : a.slices) {
            const auto& other = b.slices.at(key);
            REQUIRE(basis.dim() == other.dim());
            // reduced bases of equal spans coincide as sets of rows
            for (const auto& row : basis.rows()) CHECK(other.contains(row));
            for (const auto& row : basis.rows())
                CHECK(other.reduce(row).is_zero());
        }
    }
}

TEST_CASE("rank certification") {
    std::vector<SparseRow> id3 = {
        {{0, Rat(1)}}, {{1, Rat(1)}}, {{2, Rat(1)}}};
    auto r = rank_certified(id3, RankMode::exact);
    CHECK(r.rank == 3);
    CHECK(r.certificate == "exact");

    std::vector<SparseRow> dep = {{{0, Rat(1)}, {1, Rat(2)}},
                                  {{0, Rat(2)}, {1, Rat(4)}}};
    CHECK(rank_certified(dep, RankMode::exact).rank == 1);

    // planted rank 50: product of random 100x50 and 50x100 integer matrices
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<std::vector<long>> a(100, std::vector<long>(50));
    std::vector<std::vector<long>> b(50, std::vector<long>(100));
    for (auto& row : a)
        for (auto& x : row) x = d(rng);
    for (auto& row : b)
        for (auto& x : row) x = d(rng);
    std::vector<SparseRow> prod(100);
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            long s = 0;
            for (int k = 0; k < 50; ++k) s += a[i][k] * b[k][j];
            if (s) prod[static_cast<std::size_t>(i)].emplace_back(j, Rat(s));
        }
    const auto exact = rank_certified(prod, RankMode::exact);
    const auto cons = rank_certified(prod, RankMode::modular_consensus);
    CHECK(exact.rank == 50);
    CHECK(cons.rank == 50);
    CHECK(cons.certificate == "consensus");
    CHECK(cons.primes.size() == 2);
}

TEST_CASE("modular consensus never exceeds the exact rank") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> sized(4, 12);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = sized(rng), k = sized(rng) % n + 1;
        std::vector<std::vector<long>> a(static_cast<std::size_t>(n),
                                         std::vector<long>(static_cast<std::size_t>(k)));
        std::vector<std::vector<long>> b(static_cast<std::size_t>(k),
                                         std::vector<long>(static_cast<std::size_t>(n)));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        for (auto& row : b)
            for (auto& x : row) x = d(rng);
        std::vector<SparseRow> prod(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long s = 0;
                for (int t = 0; t < k; ++t)
                    s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                         b[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (s) prod[static_cast<std::size_t>(i)].emplace_back(j, Rat(s));
            }
        const long exact = rank_certified(prod, RankMode::exact).rank;
        const auto cons =
            rank_certified(prod, RankMode::modular_consensus, 1000 + trial);
        CHECK(cons.rank <= exact);
        CHECK(cons.rank == exact);
    }
}

TEST_CASE("echelon coordinates") {
    EchelonBasis<Rat> basis;
    const PQ f = mono(2, {{0, 1}}) + mono(2, {{1, 1}});
    const PQ g = mono(2, {{0, 1}}) - mono(2, {{1, 1}});
    CHECK(basis.insert(f));
    CHECK(basis.insert(g));
    CHECK_FALSE(basis.insert(f + g));
    const auto c = basis.coords(mono(2, {{0, 1}}, 2));
    REQUIRE(c.has_value());
    PQ recon(2);
    for (std::size_t i = 0; i < c->size(); ++i)
        recon.add_scaled(basis.rows()[i], (*c)[i]);
    CHECK(recon == mono(2, {{0, 1}}, 2));
    CHECK_FALSE(basis.coords(mono(2, {{0, 2}})).has_value());
}

TEST_CASE("dense rational matrices") {
    MatQ m(3, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(2, 2) = 5;
    CHECK(m.rank() == 2);
    const auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    // check A x = 0
    for (std::size_t i = 0; i < 3; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * ns[0][j];
        CHECK(sgn(s) == 0);
    }
    CHECK(MatQ::identity(4).rank() == 4);
}

TEST_CASE("exponent overflow is rejected") {
    Monomial m(1);
    CHECK_THROWS_AS(m.set(0, kMaxExponent + 1), std::overflow_error);
    CHECK_THROWS_AS(m.set(0, -1), std::overflow_error);
}
