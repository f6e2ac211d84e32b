#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nbang/grfiltration.hpp"

using namespace nbang;

TEST_CASE("coinvariant model dimensions") {
    CHECK(coinvariant_model(2).total_dim == 2);
    const auto m3 = coinvariant_model(3);
    CHECK(m3.total_dim == 6);
    CHECK(m3.class_dim(0) == 1);
    CHECK(m3.class_dim(1) == 2);
    CHECK(m3.class_dim(2) == 2);
    CHECK(m3.class_dim(3) == 1);
    CHECK(coinvariant_model(4).total_dim == 24);
}

TEST_CASE("gr series examples") {
    CHECK(gr_series(3, 2).gr_dims == std::vector<long>{1, 4, 1});
    CHECK(gr_series(2, 2).gr_dims == std::vector<long>{1, 1});
    const auto f33 = gr_series(3, 3);
    CHECK(std::accumulate(f33.gr_dims.begin(), f33.gr_dims.end(), 0L) == 6);
    for (int n = 2; n <= 4; ++n)
        for (int p = 2; p <= 4; ++p) {
            const auto f = gr_series(n, p);
            CHECK(std::accumulate(f.gr_dims.begin(), f.gr_dims.end(), 0L) ==
                  factorial(n));
        }
}

TEST_CASE("layers are S_n-stable") {
    for (int n = 2; n <= 4; ++n)
        for (int p : {2, 3}) CHECK(layers_sn_stable(gr_series(n, p)));
}

TEST_CASE("gr versus the harmonic module, worked anchor (2,1,1)") {
    const auto rep = gr_vs_a(2, 1, 1);
    CHECK(rep.gr_dims == std::vector<long>{1, 4, 1});
    CHECK(rep.a_collapsed == std::vector<long>{1, 4, 1});
    CHECK(rep.series_equal);
    CHECK(rep.d_sigma == 2);
    CHECK(rep.top_layer_matches);
    CHECK(rep.sign_at_top);
    CHECK(rep.d_formula == 1);
    CHECK(rep.dvee_formula == 1);
    CHECK(rep.top_degree_formulas);
}

TEST_CASE("gr versus the harmonic module, n <= 4 tuples") {
    struct Tuple {
        int p, q, r;
    };
    for (const Tuple t :
         {Tuple{2, 1, 0}, Tuple{3, 1, 0}, Tuple{2, 1, 1}, Tuple{4, 1, 0},
          Tuple{3, 1, 1}, Tuple{2, 2, 0}}) {
        CAPTURE(t.p);
        CAPTURE(t.q);
        CAPTURE(t.r);
        const auto rep = gr_vs_a(t.p, t.q, t.r);
        CHECK(rep.pass());
        CHECK(std::accumulate(rep.gr_dims.begin(), rep.gr_dims.end(), 0L) ==
              factorial(rep.n));
    }
    // (2,2,0): top gr degree is d_(2,2) = 4 with a one-dimensional layer
    const auto rep = gr_vs_a(2, 2, 0);
    CHECK(rep.d_sigma == 4);
    CHECK(rep.gr_dims.size() == 5);
    CHECK(rep.gr_dims.back() == 1);

    // (3,1,1): p*d + d-vee = n(n-1)/2 with d = 1, d-vee = 3
    const auto rep311 = gr_vs_a(3, 1, 1);
    CHECK(rep311.d_formula == 1);
    CHECK(rep311.dvee_formula == 3);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gr_series(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(gr_vs_a(2, 1, 2), std::invalid_argument);  // r >= p
    CHECK_THROWS_AS(gr_vs_a(1, 2, 0), std::invalid_argument);  // p = 1
}
