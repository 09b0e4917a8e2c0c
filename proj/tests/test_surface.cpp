#include "fppkit/model_io.hpp"
#include "fppkit/surface.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

using namespace fppkit;

namespace {

SurfaceModel model_y() { return find_preset("X/C7"); }

SurfaceModel model_z(Int c) {
    SurfaceModel m{"Z", make_rat(0), {}, std::move(c), KAmpleSign::ample};
    for (int i = 1; i <= 3; ++i)
        m.singularities.emplace_back(3, 2, "p" + std::to_string(i));
    m.singularities.emplace_back(7, 5, "p4");
    return m;
}

}  // namespace

TEST_CASE("invariants of the three-point 1/7(1,5) model") {
    auto inv = compute_invariants(model_y());
    CHECK(inv.k2_s == make_rat(9, 7));
    CHECK(inv.det_r == 343);
    CHECK(inv.d == 441);
    CHECK(inv.d == Int(3) * 3 * 7 * 7);
    CHECK(inv.d_prime == 9);
    REQUIRE(inv.sqrt_d_prime.has_value());
    CHECK(*inv.sqrt_d_prime == 3);
}

TEST_CASE("invariants of a smooth model") {
    SurfaceModel m{"smooth", make_rat(9), {}, 1, KAmpleSign::ample};
    auto inv = compute_invariants(m);
    CHECK(inv.k2_s == 9);
    CHECK(inv.det_r == 1);
    CHECK(inv.d == 9);
    CHECK(inv.d_prime == 9);
}

TEST_CASE("invariants of the four-point model with c = 3") {
    // Hand oracle: |det R| = 3^3 * 7 = 189 and K^2 = 0 + 0 + 0 + 0 + 3/7.
    Int det_oracle = Int(3) * 3 * 3 * 7;
    Rat k2_oracle = make_rat(0) + 0 + 0 + 0 + make_rat(3, 7);
    CHECK(det_oracle == 189);
    CHECK(k2_oracle == make_rat(3, 7));

    auto inv = compute_invariants(model_z(3));
    CHECK(inv.k2_s == k2_oracle);
    CHECK(inv.det_r == det_oracle);
    CHECK(inv.d == 81);
    CHECK(inv.d_prime == 9);
}

TEST_CASE("quotient presets") {
    auto presets = quotient_presets();
    REQUIRE(presets.size() == 4);

    auto count_sing = [](const SurfaceModel& m, long q) {
        return std::count_if(m.singularities.begin(), m.singularities.end(),
                             [&](const SingularityType& p) { return p.q == q; });
    };

    CHECK(presets[0].name == "X/C3");
    CHECK(presets[0].k2_resolution == 3);
    CHECK(count_sing(presets[0], 3) == 3);

    CHECK(presets[1].name == "X/C3^2");
    CHECK(presets[1].k2_resolution == 1);
    CHECK(count_sing(presets[1], 3) == 4);

    CHECK(presets[2].name == "X/C7");
    CHECK(presets[2].k2_resolution == 0);
    CHECK(count_sing(presets[2], 7) == 3);
    CHECK(presets[2].c == 7);

    CHECK(presets[3].name == "X/(7:3)");
    CHECK(presets[3].k2_resolution == 0);
    CHECK(count_sing(presets[3], 3) == 3);
    CHECK(count_sing(presets[3], 7) == 1);

    SUBCASE("K^2 = 9/|G| for the quotient group order") {
        const std::vector<long> group_orders = {3, 9, 7, 21};
        for (std::size_t i = 0; i < presets.size(); ++i) {
            auto inv = compute_invariants(presets[i]);
            CHECK(inv.k2_s == make_rat(9, group_orders[i]));
            CHECK(is_perfect_square(inv.d));
        }
    }

    CHECK_THROWS_AS(find_preset("X/C5"), std::invalid_argument);
}

TEST_CASE("compute_invariants is order-independent in the singularity list") {
    auto m = model_z(3);
    auto inv = compute_invariants(m);
    std::reverse(m.singularities.begin(), m.singularities.end());
    auto inv_reversed = compute_invariants(m);
    CHECK(inv.k2_s == inv_reversed.k2_s);
    CHECK(inv.det_r == inv_reversed.det_r);
    CHECK(inv.d == inv_reversed.d);
    CHECK(inv.d_prime == inv_reversed.d_prime);
}

TEST_CASE("mutating a singularity order breaks the squareness check") {
    auto m = model_y();
    m.c = 1;
    m.singularities[0] = SingularityType(5, 3, "y1");
    CHECK_THROWS_WITH_AS(compute_invariants(m),
                         doctest::Contains("not a Q-homology-plane candidate"),
                         std::domain_error);

    // Every choice of weight for q = 5 breaks it.
    for (long a : {1L, 2L, 3L, 4L}) {
        auto mm = model_y();
        mm.c = 1;
        mm.singularities[0] = SingularityType(5, a, "y1");
        CHECK_THROWS_AS(compute_invariants(mm), std::domain_error);
    }
}

TEST_CASE("invalid c is rejected") {
    auto m = model_y();
    m.c = 2;  // 4 does not divide 441
    CHECK_THROWS_WITH_AS(compute_invariants(m), doctest::Contains("invalid c"),
                         std::domain_error);
    m.c = 0;
    CHECK_THROWS_AS(compute_invariants(m), std::domain_error);
}

TEST_CASE("four-point model with unsupported c") {
    CHECK_THROWS_AS(compute_invariants(model_z(2)), std::domain_error);  // 4 does not divide 81
    CHECK(compute_invariants(model_z(1)).d_prime == 81);
    CHECK(compute_invariants(model_z(9)).d_prime == 1);
}

TEST_CASE("model JSON round trip") {
    auto m = model_z(3);
    auto j = model_to_json(m);
    auto back = model_from_json(j);
    CHECK(back.name == m.name);
    CHECK(back.k2_resolution == m.k2_resolution);
    CHECK(back.c == m.c);
    REQUIRE(back.singularities.size() == m.singularities.size());
    for (std::size_t i = 0; i < m.singularities.size(); ++i) {
        CHECK(back.singularities[i].q == m.singularities[i].q);
        CHECK(back.singularities[i].a == m.singularities[i].a);
        CHECK(back.singularities[i].label == m.singularities[i].label);
    }
}

TEST_CASE("rational JSON forms") {
    CHECK(rat_from_json(nlohmann::json::parse("3")) == 3);
    CHECK(rat_from_json(nlohmann::json::parse("\"9/7\"")) == make_rat(9, 7));
    CHECK(rat_from_json(nlohmann::json::parse("{\"num\": 9, \"den\": 7}")) == make_rat(9, 7));
    CHECK(rat_from_json(nlohmann::json::parse("\"5\"")) == 5);
    CHECK_THROWS_AS(rat_from_json(nlohmann::json::parse("1.5")), std::invalid_argument);
}

TEST_CASE("model JSON rejects malformed input") {
    using nlohmann::json;
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"name": "x"})")), std::invalid_argument);
    CHECK_THROWS_AS(
        model_from_json(json::parse(R"({"k2_resolution": 0, "singularities": 3})")),
        std::invalid_argument);
    CHECK_THROWS_AS(model_from_json(json::parse(
                        R"({"k2_resolution": 0, "singularities": [{"q": 4, "a": 2}]})")),
                    std::invalid_argument);  // non-coprime singularity
    CHECK_THROWS_AS(model_from_json(json::parse(
                        R"({"k2_resolution": "x/y", "singularities": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        model_from_json(json::parse(
            R"({"k2_resolution": 0, "singularities": [], "k_ample_sign": "huge"})")),
        std::invalid_argument);
}

TEST_CASE("model file loading") {
    const char* path = "test_model_tmp.json";
    {
        std::ofstream out(path);
        out << R"({
            "name": "Y",
            "k2_resolution": 0,
            "singularities": [
                {"q": 7, "a": 5, "label": "y1"},
                {"q": 7, "a": 5, "label": "y2"},
                {"q": 7, "a": 5}
            ],
            "c": 7
        })";
    }
    auto m = load_model(path);
    CHECK(m.name == "Y");
    CHECK(m.singularities.size() == 3);
    CHECK(m.singularities[2].label == "p3");  // auto label
    CHECK(m.k_ample_sign == KAmpleSign::ample);
    CHECK(compute_invariants(m).d == 441);
    std::remove(path);

    CHECK_THROWS_AS(load_model("does_not_exist.json"), std::runtime_error);
}
