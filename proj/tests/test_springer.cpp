#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nbang/springer.hpp"

using namespace nbang;

namespace {

std::set<std::string> generator_strings(const IdealPresentation& pres) {
    std::set<std::string> out;
    for (const auto& g : pres.generators) out.insert(g.to_string());
    return out;
}

bool setwise_stable(const IdealPresentation& pres, const Perm& w) {
    const auto strings = generator_strings(pres);
    for (const auto& g : pres.generators)
        if (!strings.count(g.rename_variables(w).to_string())) return false;
    return true;
}

}  // namespace

TEST_CASE("tanisaki generators") {
    const auto p21 = tanisaki_generators(Partition::parse("2,1"));
    // e_2 of each 2-subset, e_1..e_3 of {1,2,3}
    CHECK(p21.generators.size() == 6);

    const auto p3 = tanisaki_generators(Partition::parse("3"));
    const auto strs = generator_strings(p3);
    CHECK(strs.count(Polynomial<Rat>::variable(3, 0).to_string()));
    CHECK(strs.count(Polynomial<Rat>::variable(3, 1).to_string()));
    CHECK(strs.count(Polynomial<Rat>::variable(3, 2).to_string()));

    const auto p11 = tanisaki_generators(Partition::parse("1,1"));
    CHECK(p11.generators.size() == 2);  // e_1, e_2 of {1,2}
}

TEST_CASE("tanisaki quotients match the multinomial dimension") {
    const auto q21 = graded_quotient(tanisaki_generators(Partition::parse("2,1")));
    CHECK(q21.total_dim() == 3);
    CHECK(q21.hilbert_at(0) == 1);
    CHECK(q21.hilbert_at(1) == 2);
    CHECK(q21.hilbert_at(2) == 0);
    CHECK(q21.top_degree() == 1);

    CHECK(graded_quotient(tanisaki_generators(Partition::parse("3"))).total_dim() == 1);
    CHECK(graded_quotient(tanisaki_generators(Partition::parse("1,1"))).total_dim() == 2);

    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : partitions_of(n)) {
            const auto q = graded_quotient(tanisaki_generators(sigma));
            CHECK(q.total_dim() == multinomial_dimension(sigma));
        }
    // one n = 5 spot check
    const auto q = graded_quotient(tanisaki_generators(Partition::parse("2,2,1")));
    CHECK(q.total_dim() == 30);
}

TEST_CASE("dcp generators include the expected layers for (2,1)") {
    const auto pres = dcp_generators(Partition::parse("2,1"));
    const auto strs = generator_strings(pres);
    // X_i^2 (k = 2 layer, equivalently S_{1,1,1}), X_i X_j, e_1
    CHECK(strs.count(Polynomial<Rat>::variable(3, 0, 2).to_string()));
    CHECK(strs.count(s_htk<Rat>(3, {0, 1}, 0, 1).to_string()));
    CHECK(strs.count(s_htk<Rat>(3, {0, 1, 2}, 1, 0).to_string()));
}

TEST_CASE("dcp quotient equals tanisaki of the dual, degree by degree") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : partitions_of(n)) {
            const auto qd = graded_quotient(dcp_generators(sigma));
            const auto qt = graded_quotient(tanisaki_generators(sigma.dual()));
            CHECK(qd.total_dim() == qt.total_dim());
            CHECK(qd.hilbert() == qt.hilbert());
        }
    // the two extremes at n = 4: a point and the full flag variety
    CHECK(graded_quotient(dcp_generators(Partition::parse("1,1,1,1"))).total_dim() == 1);
    CHECK(graded_quotient(dcp_generators(Partition::parse("4"))).total_dim() == 24);
}

TEST_CASE("J_p and J_q-vee generators") {
    const auto j2 = jp_presentation(3, 2);
    const auto strs = generator_strings(j2);
    CHECK(j2.generators.size() == 6);  // e_1,e_2,e_3 and three squares
    CHECK(strs.count(Polynomial<Rat>::variable(3, 1, 2).to_string()));

    const auto jv = jqvee_presentation(3, 1, 1);
    const auto vstrs = generator_strings(jv);
    // pairs (X_i X_j)^1 on top of J_2
    CHECK(vstrs.count(s_htk<Rat>(3, {0, 2}, 0, 1).to_string()));
    CHECK(jv.generators.size() == 9);
}

TEST_CASE("J_p equals the dcp ideal of the box-plus-row partition") {
    struct Case {
        int p, q, r;
    };
    for (const Case c : {Case{2, 1, 1}, Case{2, 2, 0}, Case{3, 1, 1}}) {
        const int n = c.p * c.q + c.r;
        const Partition sigma = box_plus_row(c.p, c.q, c.r);
        const auto cmp = graded_span_equal(jp_presentation(n, c.p),
                                           dcp_generators(sigma),
                                           default_top_bound(n), RankMode::exact);
        CHECK(cmp.equal);
        const auto cmp2 = graded_span_equal(jqvee_presentation(n, c.q, c.r),
                                            dcp_generators(sigma.dual()),
                                            default_top_bound(n), RankMode::exact);
        CHECK(cmp2.equal);
        CHECK(graded_quotient(jp_presentation(n, c.p)).total_dim() ==
              graded_quotient(dcp_generators(sigma)).total_dim());
    }
}

TEST_CASE("ideal membership") {
    // X_1 is not in J_2 for n = 3: the degree-1 slice is spanned by e_1
    CHECK_FALSE(ideal_membership(Polynomial<Rat>::variable(3, 0),
                                 jp_presentation(3, 2)));

    // S_{h,t,k} with h+t >= n_k+1 lies in J_p for sigma(2,2,1), n = 5
    const Partition sigma = box_plus_row(2, 2, 1);
    const auto jp = jp_presentation(5, 2);
    for (int k = 0; k <= 2; ++k) {
        const int nk = n_k(sigma, k);
        for (int t = 1; t <= 3; ++t) {
            const int h = std::max(0, nk + 1 - t);
            CHECK(ideal_membership(s_htk<Rat>(5, {0, 1, 2}, h, k), jp));
        }
    }

    // and in J_q-vee with the dual tail sums
    const Partition dual = sigma.dual();
    const auto jq = jqvee_presentation(5, 2, 1);
    for (int k = 0; k <= 2; ++k) {
        const int nk = n_k(dual, k);
        for (int t = 1; t <= 3; ++t) {
            const int h = std::max(0, nk + 1 - t);
            CHECK(ideal_membership(s_htk<Rat>(5, {1, 2, 4}, h, k), jq));
        }
    }
}

TEST_CASE("generator sets are S_n-stable") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : partitions_of(n)) {
            for (const auto& pres : {tanisaki_generators(sigma), dcp_generators(sigma)}) {
                CHECK(setwise_stable(pres, transposition(n, 0, 1)));
                CHECK(setwise_stable(pres, full_cycle(n)));
            }
        }
    CHECK(setwise_stable(jp_presentation(4, 2), full_cycle(4)));
    CHECK(setwise_stable(jqvee_presentation(4, 2, 1), transposition(4, 1, 3)));
}

TEST_CASE("normal forms and quotient multiplication") {
    const auto q = graded_quotient(tanisaki_generators(Partition::parse("1,1")));
    // coinvariants of S_2; the smaller monomial x1 is the standard one,
    // so x0 reduces to -x1 and x1^2 to 0
    const auto nf = q.normal_form(Polynomial<Rat>::variable(2, 0));
    CHECK(nf == Polynomial<Rat>::term(Monomial(2, {{1, 1}}), Rat(-1)));
    CHECK(q.normal_form(Polynomial<Rat>::variable(2, 1, 2)).is_zero());
    CHECK(q.standard_monomials(1) == std::vector<Monomial>{Monomial(2, {{1, 1}})});
}

TEST_CASE("modular hilbert agrees with exact") {
    for (const auto& sigma : partitions_of(4)) {
        const auto pres = tanisaki_generators(sigma);
        const auto exact = hilbert_function(pres, default_top_bound(4), RankMode::exact);
        const auto cons =
            hilbert_function(pres, default_top_bound(4), RankMode::modular_consensus);
        CHECK(exact.hilbert == cons.hilbert);
        CHECK(cons.certificate == "consensus");
        const auto ring = graded_quotient(pres);
        CHECK(exact.hilbert == ring.hilbert());
    }
}

TEST_CASE("quotient construction refuses non-terminating bounds") {
    IdealPresentation pres;
    pres.n = 2;
    pres.label = "principal(x0)";
    pres.generators.push_back(Polynomial<Rat>::variable(2, 0));
    CHECK_THROWS_AS(graded_quotient(pres, 6), std::runtime_error);
}
