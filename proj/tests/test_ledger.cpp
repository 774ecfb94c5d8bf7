#include "rcdim/ledger.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>

using namespace rcdim;
using namespace rcdim::ledger;

TEST_CASE("expected fiber dimension") {
    CHECK(expected_fiber_dim(8, 7, 2) == 2);
    CHECK(expected_fiber_dim(5, 4, 1) == 0);  // lines through a point: finite
    CHECK(expected_fiber_dim(10, 9, 5) == 8);
    CHECK_THROWS_AS(expected_fiber_dim(8, 8, 2), std::invalid_argument);
    CHECK_THROWS_AS(expected_fiber_dim(8, 7, 0), std::invalid_argument);
}

TEST_CASE("codim of the non-1-level locus") {
    CHECK(codim_s1(8) == 18);
    CHECK(codim_s1(10) == 31);
    CHECK_THROWS_WITH_AS(codim_s1(7),
                         doctest::Contains("hypothesis 7 <= d = n-1"),
                         std::invalid_argument);
}

TEST_CASE("comparison constants") {
    auto c = comparison_constants(8, 7);
    CHECK(c.singular_line_codim == 43);
    CHECK(c.ss_codim == 36);
    c = comparison_constants(4, 3);
    CHECK(c.singular_line_codim == 7);
    CHECK(c.ss_codim == 10);
    c = comparison_constants(3, 2);
    CHECK(c.singular_line_codim == 3);
    CHECK(c.ss_codim == 6);
    // d = n-1 simplification: dn - 2n + 3 = n^2 - 3n + 3
    for (int n = 3; n <= 30; ++n) {
        CHECK(comparison_constants(n, n - 1).singular_line_codim ==
              Int(n) * n - 3 * n + 3);
    }
}

TEST_CASE("per-step bound") {
    CHECK(step_bound(8, 7, 2) == 12);
    CHECK(step_bound(8, 7, 8) == 0);
    CHECK_THROWS_AS(step_bound(8, 7, 1), std::invalid_argument);
    for (int n = 3; n <= 30; ++n) {
        CHECK(step_bound(n, n - 1, n) == 0);
        // strictly decreasing in e, hitting 0 at e = n
        for (int e = 3; e <= n; ++e) {
            CHECK(step_bound(n, n - 1, e) < step_bound(n, n - 1, e - 1));
        }
    }
}

TEST_CASE("residual quadratic") {
    CHECK(residual(8, 2) == 6);
    CHECK(residual(8, 3) == -4);
    CHECK(residual(4, 2) == 0);
    CHECK(residual(10, 3) == 1);
}

TEST_CASE("residual telescopes against the base-minus-steps route") {
    // Independent route: C(n+1,2) - 3(n-2) minus the summed step bounds.
    for (int n = 4; n <= 50; ++n) {
        const Int base = Int(n + 1) * n / 2 - 3 * Int(n - 2);
        Int steps = 0;
        for (int e = 2; e <= n; ++e) {
            steps += step_bound(n, n - 1, e);
            const Rat r = residual(n, e);
            CHECK(boost::multiprecision::denominator(r) == 1);
            CHECK(r == Rat(base - steps));
        }
    }
}

TEST_CASE("bound report branches") {
    SUBCASE("n = 10") {
        const auto b = max_level_degree(10);
        REQUIRE(b.max_e_quadratic.has_value());
        CHECK(*b.max_e_quadratic == 3);
    }
    SUBCASE("n = 8: the two bounds disagree") {
        const auto b = max_level_degree(8);
        REQUIRE(b.max_e_quadratic.has_value());
        CHECK(*b.max_e_quadratic == 2);
        CHECK(b.closed_form_kind == ClosedFormKind::value);
        CHECK(b.max_e_closed_form == 4);  // 8 - (1 + sqrt(41))/2 ~ 4.298
        CHECK_FALSE(b.agreement);
    }
    SUBCASE("n = 4: negative radicand, zero residual") {
        const auto b = max_level_degree(4);
        CHECK_FALSE(b.max_e_quadratic.has_value());
        CHECK(b.closed_form_kind == ClosedFormKind::ill_defined);
        CHECK(b.quadratic_str() == "none");
        CHECK(b.closed_form_str() == "ill-defined");
    }
    SUBCASE("conic special case noted for n <= 7") {
        CHECK(max_level_degree(7).note ==
              "d = n-1 < 7: e <= 2 via the conic argument; ledger chain not applicable");
        CHECK(max_level_degree(8).note.empty());
    }
}

TEST_CASE("bound report internal consistency by re-substitution") {
    for (int n = 8; n <= 50; ++n) {
        const auto b = max_level_degree(n);
        REQUIRE(b.max_e_quadratic.has_value());
        const int m = *b.max_e_quadratic;
        for (int e = 2; e <= m; ++e) CHECK(residual(n, e) > 0);
        CHECK(residual(n, m + 1) <= 0);

        REQUIRE(b.closed_form_kind == ClosedFormKind::value);
        const Int radicand = Int(n) * n - n - 15;
        const int mc = b.max_e_closed_form;
        const Int lhs = 2 * Int(n) - 1 - 2 * Int(mc);
        CHECK(lhs > 0);
        CHECK(lhs * lhs > radicand);
        const Int lhs_next = lhs - 2;
        CHECK((lhs_next <= 0 || lhs_next * lhs_next <= radicand));
    }
}

TEST_CASE("quadratic bound is monotone non-decreasing over 8 <= n <= 50") {
    int prev = 0;
    for (int n = 8; n <= 50; ++n) {
        const auto b = max_level_degree(n);
        REQUIRE_MESSAGE(b.max_e_quadratic.has_value(), "n = ", n);
        CHECK_MESSAGE(*b.max_e_quadratic >= prev, "monotonicity violated at n = ", n);
        prev = *b.max_e_quadratic;
    }
}

TEST_CASE("dimension floors") {
    CHECK(pgl_dim_floor(4) == 9);
    CHECK(bendbreak_threshold(4) == 7);
    CHECK(pgl_dim_floor(2) == 3);
    CHECK(bendbreak_threshold(2) == 3);
    CHECK(pgl_dim_floor(10) == 27);
    CHECK(bendbreak_threshold(10) == 19);
    // 3n-3 >= 2n-1 exactly when n >= 2
    for (int n = 2; n <= 50; ++n) CHECK(pgl_dim_floor(n) >= bendbreak_threshold(n));
}

TEST_CASE("ledger chain rows") {
    const auto ledger = CodimLedger::compute(8, 7, 4);
    REQUIRE(ledger.rows.size() == 4);
    CHECK(ledger.rows[0].e == 1);
    CHECK(ledger.rows[0].codim_lower_bound == 18);
    CHECK(ledger.rows[0].provenance == Provenance::s1_base);
    CHECK_FALSE(ledger.rows[0].exhausted);
    CHECK(ledger.rows[1].codim_lower_bound == 6);
    CHECK(ledger.rows[1].step_bound_applied == 12);
    CHECK(ledger.rows[1].provenance == Provenance::bbf_step);
    // negative rows are reported, never clamped
    CHECK(ledger.rows[2].codim_lower_bound == -4);
    CHECK(ledger.rows[2].exhausted);
    CHECK(ledger.rows[3].codim_lower_bound == -12);
    CHECK(std::string(provenance_name(ledger.rows[0].provenance)) == "S1-base");
    CHECK(std::string(provenance_name(ledger.rows[1].provenance)) == "BBF-step");

    CHECK_THROWS_AS(CodimLedger::compute(8, 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(CodimLedger::compute(7, 6, 4), std::invalid_argument);
}
