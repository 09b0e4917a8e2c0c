#include "fppkit/proof.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fppkit;

namespace {

// The expected survivor set: two points carrying (1,0) or (0,1), one point
// untouched, in every arrangement.
std::set<ClaimSurvivor> expected_survivors() {
    std::set<ClaimSurvivor> out;
    const std::vector<PointProfile> unit = {{0, 1}, {1, 0}};
    for (int empty_at = 0; empty_at < 3; ++empty_at)
        for (const auto& p : unit)
            for (const auto& q : unit) {
                ClaimSurvivor s{{}, Rat(0)};
                int slot = 0;
                for (int k = 0; k < 3; ++k)
                    s.points[k] = (k == empty_at) ? PointProfile{0, 0} : (slot++ ? q : p);
                s.c2_tilde = make_rat(4, 3) + ck2(s.points[0]) + ck2(s.points[1]) +
                             ck2(s.points[2]);
                out.insert(s);
            }
    return out;
}

}  // namespace

TEST_CASE("local profile values") {
    CHECK(ck2({1, 0}) == make_rat(-2, 3));
    CHECK(ck2({0, 1}) == make_rat(-2, 3));
    CHECK(ck2({1, 1}) == -2);
    CHECK(ck2({2, 0}) == make_rat(-8, 3));
    CHECK(ck2({2, 1}) == make_rat(-14, 3));
    CHECK(ck2({0, 0}) == 0);
    CHECK(PointProfile{0, 0}.min_multiplicity() == 0);
    CHECK(PointProfile{1, 0}.min_multiplicity() == 1);
    CHECK(PointProfile{1, 2}.min_multiplicity() == 2);
}

TEST_CASE("ck2_values lists the first distinct values in decreasing order") {
    CHECK(ck2_values(4) ==
          std::vector<Rat>{make_rat(-2, 3), make_rat(-2), make_rat(-8, 3), make_rat(-14, 3)});
    // The next ones continue -6, -8 (s = 9 from (3,0), s = 12 from (2,2)).
    auto six = ck2_values(6);
    CHECK(six[4] == -6);
    CHECK(six[5] == -8);
}

TEST_CASE("claim enumeration") {
    SUBCASE("survivors at bound 3: exactly the two-unit-points configurations") {
        auto cls = claim_enumeration(3);
        CHECK(cls.profiles_examined == 16L * 16 * 16);
        std::set<ClaimSurvivor> got(cls.survivors.begin(), cls.survivors.end());
        CHECK(got.size() == cls.survivors.size());  // duplicate-free
        CHECK(got == expected_survivors());
        CHECK(cls.survivors.size() == 12);
        for (const auto& s : cls.survivors)
            CHECK(s.c2_tilde == 0);
    }
    SUBCASE("all-zero triple is rejected by integrality") {
        auto cls = claim_enumeration(2);
        for (const auto& s : cls.survivors)
            CHECK(s.points != std::array<PointProfile, 3>{});
        // 4/3 is not an integer.
        CHECK_FALSE(is_integer(make_rat(4, 3)));
    }
    SUBCASE("stability across bounds 2, 3, 5") {
        auto s2 = claim_enumeration(2).survivors;
        auto s3 = claim_enumeration(3).survivors;
        auto s5 = claim_enumeration(5).survivors;
        CHECK(s2 == s3);
        CHECK(s3 == s5);
    }
    SUBCASE("bound validation") {
        CHECK_THROWS_AS(claim_enumeration(1), std::invalid_argument);
    }
    SUBCASE("one-point profiles are never integral") {
        // a^2 + b^2 + ab is 0 or 1 mod 3, never 2, so 4/3 + C_k^2 fails.
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 6; ++b) {
                if (a + b == 0)
                    continue;
                CHECK_FALSE(is_integer(make_rat(4, 3) + ck2({a, b})));
            }
    }
    SUBCASE("the rotation-pair filter alone already forces exactly two points") {
        // Keeping only the rotation pairs (dropping the self-pair bound),
        // every surviving triple still touches exactly two points; the
        // stronger filter only trims multiplicities at those two.
        for (long a1 = 0; a1 <= 3; ++a1)
            for (long b1 = 0; b1 <= 3; ++b1)
                for (long a2 = 0; a2 <= 3; ++a2)
                    for (long b2 = 0; b2 <= 3; ++b2)
                        for (long a3 = 0; a3 <= 3; ++a3)
                            for (long b3 = 0; b3 <= 3; ++b3) {
                                std::array<PointProfile, 3> pts{
                                    PointProfile{a1, b1}, {a2, b2}, {a3, b3}};
                                Rat c2 = make_rat(4, 3);
                                for (const auto& p : pts)
                                    c2 += ck2(p);
                                if (!is_integer(c2))
                                    continue;
                                std::array<long, 3> m{};
                                for (int k = 0; k < 3; ++k)
                                    m[k] = pts[k].min_multiplicity();
                                bool ok = true;
                                for (int rot = 1; rot <= 2; ++rot) {
                                    long sum = 0;
                                    for (int k = 0; k < 3; ++k)
                                        sum += m[k] * m[(k + rot) % 3];
                                    ok = ok && sum <= 4;
                                }
                                if (!ok)
                                    continue;
                                int nonzero = 0;
                                for (const auto& p : pts)
                                    if (p.depth() > 0)
                                        ++nonzero;
                                CHECK(nonzero == 2);
                            }
    }
}

TEST_CASE("kc fibre argument certificates") {
    SUBCASE("(2,3)") {
        auto cert = kc_nonneg_fiber_argument(EllipticCase::c23);
        CHECK(cert.upper_bound == make_rat(6, 7));
        CHECK(cert.kc_value == 0);
        CHECK(cert.fibre_classes == std::vector<int>{6, 9});
        CHECK(cert.full_fibre_class == 18);
        CHECK_FALSE(cert.two_reachable);
    }
    SUBCASE("(2,4)") {
        auto cert = kc_nonneg_fiber_argument(EllipticCase::c24);
        CHECK(cert.fibre_classes == std::vector<int>{3, 4, 6});
        CHECK(cert.full_fibre_class == 12);
        CHECK_FALSE(cert.two_reachable);
    }
    SUBCASE("(3,3)") {
        auto cert = kc_nonneg_fiber_argument(EllipticCase::c33);
        CHECK(cert.fibre_classes == std::vector<int>{3});
        CHECK(cert.full_fibre_class == 9);
        CHECK_FALSE(cert.two_reachable);
    }
}

TEST_CASE("the small-degree h^0 regime is resolved only by the obstruction chain") {
    TorsionGroup g({2, 2, 2});
    CHECK_FALSE(h0_large(g, {2, g.zero()}).has_value());
    // The closed obstruction chain pins it to zero for every elliptic case.
    for (EllipticCase c : {EllipticCase::c23, EllipticCase::c24, EllipticCase::c33})
        CHECK(vanishing_h0_2L(c) == 0);
    CHECK(exceptional_sequence_check(derive_vanishing_table(vanishing_h0_2L(EllipticCase::c24))));
}

TEST_CASE("exclusion reports") {
    SUBCASE("(2,3)") {
        auto rep = exclusion_report(EllipticCase::c23);
        REQUIRE(rep.verdicts.size() == 3);
        CHECK(rep.verdicts[0].mu == 1);
        CHECK(rep.verdicts[0].classification == MuClassification::admissible);
        CHECK(rep.verdicts[1].mu == 2);
        CHECK(rep.verdicts[1].classification == MuClassification::excluded_by_torsion_argument);
        CHECK(rep.verdicts[2].mu == 3);
        CHECK(rep.verdicts[2].classification == MuClassification::excluded_by_torsion_argument);
        CHECK(rep.admissible == std::vector<int>{1});
    }
    SUBCASE("(2,4)") {
        auto rep = exclusion_report(EllipticCase::c24);
        REQUIRE(rep.verdicts.size() == 3);
        CHECK(rep.verdicts[1].mu == 2);
        CHECK(rep.verdicts[1].classification == MuClassification::excluded_by_torsion_argument);
        CHECK(rep.verdicts[2].mu == 4);
        CHECK(rep.verdicts[2].classification == MuClassification::combinatorially_infeasible);
        CHECK(rep.verdicts[2].detail.find("incidence bound") != std::string::npos);
        CHECK(rep.admissible == std::vector<int>{1});
    }
    SUBCASE("(3,3)") {
        auto rep = exclusion_report(EllipticCase::c33);
        REQUIRE(rep.verdicts.size() == 2);
        CHECK(rep.verdicts[1].mu == 3);
        CHECK(rep.verdicts[1].classification == MuClassification::combinatorially_infeasible);
        CHECK(rep.admissible == std::vector<int>{1});
    }
}

TEST_CASE("verify_paper") {
    SUBCASE("fresh run passes with enough anchored checks") {
        auto report = verify_paper();
        CHECK(report.pass());
        CHECK(report.checks.size() >= 35);
        std::set<std::string> names;
        for (const auto& c : report.checks) {
            CHECK_FALSE(c.name.empty());
            CHECK_FALSE(c.anchor.empty());
            CHECK(names.insert(c.name).second);  // unique names
        }
        // Axiom entries are present and never count as failures.
        CHECK(std::any_of(report.checks.begin(), report.checks.end(),
                          [](const Check& c) { return c.status == CheckStatus::axiom; }));
    }
    SUBCASE("deterministic serialization") {
        auto a = verify_paper().to_json_string();
        auto b = verify_paper().to_json_string();
        CHECK(a == b);
        CHECK(a.find("\"status\": \"pass\"") != std::string::npos);
    }
    SUBCASE("mutated preset is caught") {
        VerifyOptions options;
        options.mutate_singularity_order = true;
        auto report = verify_paper(options);
        CHECK_FALSE(report.pass());
        bool surface_failed = false;
        for (const auto& c : report.checks)
            if (c.name.rfind("surface.XC7", 0) == 0 && c.status == CheckStatus::fail)
                surface_failed = true;
        CHECK(surface_failed);
    }
    SUBCASE("--only restricts to one group") {
        VerifyOptions options;
        options.only = "fiber";
        auto report = verify_paper(options);
        CHECK(report.pass());
        CHECK(!report.checks.empty());
        for (const auto& c : report.checks)
            CHECK(c.name.rfind("fiber.", 0) == 0);

        options.only = "nonexistent";
        CHECK(verify_paper(options).checks.empty());
    }
}
