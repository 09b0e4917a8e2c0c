#include "fppkit/independence.hpp"

#include <doctest.h>

using namespace fppkit;

namespace {

std::string trace_of(const VanishingPattern& pattern) {
    return section_independence(pattern).trace_str(pattern);
}

}  // namespace

TEST_CASE("cyclic pattern certifies 4 monomials with the known elimination order") {
    auto pattern = cyclic_two_point_pattern();
    auto cert = section_independence(pattern);
    CHECK(cert.certified_count == 4);
    CHECK(cert.monomials.size() == 6);
    CHECK(cert.trace.size() == 3);
    CHECK(trace_of(pattern) ==
          "x3 kills g1^2, x1 kills g2^2, x2 kills g3^2, remainder g1*g2 independent");
    // The cross terms g1*g2, g1*g3, g2*g3 all vanish at every marked point,
    // so full-set certification stalls; the certified subset is still 4.
    CHECK(cert.stalled);
    CHECK_FALSE(cert.fully_certified);
    CHECK(cert.survivors.size() == 3);
}

TEST_CASE("orbit pattern certifies 4 monomials") {
    auto pattern = orbit_pattern();
    auto cert = section_independence(pattern);
    CHECK(cert.certified_count == 4);
    CHECK(trace_of(pattern) ==
          "x3 kills g1^2, x2 kills g2^2, x1 kills g3^2, remainder g1*g2 independent");
}

TEST_CASE("single section, single monomial") {
    VanishingPattern pattern({"x1", "x2"}, {{"g", {1}}});
    auto cert = section_independence(pattern);
    CHECK(cert.monomials.size() == 1);
    CHECK(cert.certified_count == 1);
    CHECK(cert.fully_certified);
    CHECK_FALSE(cert.stalled);
}

TEST_CASE("two sections of the cyclic pattern certify 3") {
    VanishingPattern pattern({"x1", "x2", "x3"}, {{"g1", {1, 2}}, {"g2", {2, 3}}});
    auto cert = section_independence(pattern);
    // g1^2 killed at x3, g2^2 at x1, remainder g1*g2.
    CHECK(cert.certified_count == 3);
    CHECK(cert.fully_certified);
}

TEST_CASE("certified count is monotone along the paper's nested prefixes") {
    std::vector<VanishingSection> sections = {
        {"g1", {1, 2}}, {"g2", {2, 3}}, {"g3", {3, 1}}};
    int previous = 0;
    for (std::size_t n = 1; n <= sections.size(); ++n) {
        VanishingPattern pattern({"x1", "x2", "x3"},
                                 {sections.begin(), sections.begin() + n});
        auto cert = section_independence(pattern);
        CHECK(cert.certified_count >= previous);
        previous = cert.certified_count;
    }
    CHECK(previous == 4);
}

TEST_CASE("duplicate vanishing sets stall the elimination") {
    VanishingPattern pattern({"x1", "x2", "x3"}, {{"g1", {1, 2}}, {"g2", {1, 2}}});
    auto cert = section_independence(pattern);
    // All three monomials vanish exactly at {x1, x2}; no point distinguishes.
    CHECK(cert.trace.empty());
    CHECK(cert.stalled);
    CHECK(cert.certified_count == 1);
}

TEST_CASE("degenerate sections are rejected") {
    CHECK_THROWS_AS(VanishingPattern({"x1", "x2"}, {{"g", {1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(VanishingPattern({"x1"}, {{"g", {2}}}), std::invalid_argument);
    CHECK_THROWS_AS(section_independence(VanishingPattern({"x1"}, {})), std::invalid_argument);
}
