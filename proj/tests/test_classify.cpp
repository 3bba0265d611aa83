#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rosenau/classify.hpp"
#include "rosenau/errors.hpp"

using namespace rosenau;

namespace {

bool multiset_contains(const RootSet& rs, std::complex<double> z, double tol) {
    return std::any_of(rs.roots.begin(), rs.roots.end(),
                       [&](const std::complex<double>& r) { return std::abs(r - z) <= tol; });
}

}  // namespace

TEST_CASE("profile-equation coefficients a, b") {
    // Rosenau-RLW, alpha = -1, beta = eps = 1, cs = 1.1.
    const EquationParams rlw{-1.0, 1.0, 0.0, 1.0, 0.0};
    const auto c = ab_coefficients(rlw, 1.1);
    CHECK(c.a == doctest::Approx(0.1 / 1.1).epsilon(1e-14));
    CHECK(c.b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.mu1 == doctest::Approx(1.0 / 3.0));
    CHECK(c.mu2 == doctest::Approx(1.0 / 9.0 - 0.1 / 1.1));
    CHECK(c.rho == doctest::Approx(1.0));
    CHECK(c.delta == doctest::Approx(-1.0));

    // a vanishes exactly at cs = eps.
    CHECK(ab_coefficients(rlw, 1.0).a == 0.0);

    // Rosenau at cs = 2: a = 1/2, b = 0.
    const EquationParams rosenau{0.0, 1.0, 0.0, 1.0, 0.0};
    const auto cr = ab_coefficients(rosenau, 2.0);
    CHECK(cr.a == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cr.b == 0.0);

    // beta*cs = gamma degenerates the quartic term.
    const EquationParams deg{0.0, 1.0, 1.5, 1.0, 0.0};
    CHECK_THROWS_AS(ab_coefficients(deg, 1.5), DegenerateSpeed);
}

TEST_CASE("characteristic roots: closed-form cases") {
    SUBCASE("a=0, b=4 factors as lambda^2 (lambda^2 - 4)") {
        const auto rs = characteristic_roots(0.0, 4.0);
        CHECK(multiset_contains(rs, {2.0, 0.0}, 1e-12));
        CHECK(multiset_contains(rs, {-2.0, 0.0}, 1e-12));
        CHECK(multiset_contains(rs, {0.0, 0.0}, 1e-12));
    }
    SUBCASE("a=1, b=0: fourth roots of -1") {
        const auto rs = characteristic_roots(1.0, 0.0);
        const double c = 1.0 / std::sqrt(2.0);
        CHECK(multiset_contains(rs, {c, c}, 1e-12));
        CHECK(multiset_contains(rs, {c, -c}, 1e-12));
        CHECK(multiset_contains(rs, {-c, c}, 1e-12));
        CHECK(multiset_contains(rs, {-c, -c}, 1e-12));
    }
    SUBCASE("a=1/11, b=1 (Rosenau-RLW at cs=1.1)") {
        const auto rs = characteristic_roots(1.0 / 11.0, 1.0);
        CHECK(multiset_contains(rs, {0.9480833389574636, 0.0}, 1e-10));
        CHECK(multiset_contains(rs, {-0.31802198413202063, 0.0}, 1e-10));
    }
}

TEST_CASE("root set properties over random (a, b)") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 300; ++i) {
        const double a = dist(gen), b = dist(gen);
        const auto rs = characteristic_roots(a, b);
        const double scale = 1.0 + std::abs(a) + std::abs(b);

        for (const auto& r : rs.roots) {
            const auto res = r * r * r * r - b * r * r + a;
            CHECK(std::abs(res) <= 1e-10 * scale);
            CHECK(multiset_contains(rs, -r, 1e-10 * scale));
            CHECK(multiset_contains(rs, std::conj(r), 1e-10 * scale));
        }

        // Vieta on the biquadratic: product of the four roots is a, and the
        // two lambda^2 values satisfy s1+s2 = b, s1^2+s2^2 = b^2 - 2a.
        const auto prod = rs.roots[0] * rs.roots[1] * rs.roots[2] * rs.roots[3];
        CHECK(std::abs(prod - a) <= 1e-10 * (1.0 + std::abs(a)));
        const auto s1 = rs.lambda_sq[0], s2 = rs.lambda_sq[1];
        CHECK(std::abs(s1 + s2 - b) <= 1e-10 * scale);
        CHECK(std::abs(s1 * s1 + s2 * s2 - (b * b - 2.0 * a)) <=
              1e-10 * (1.0 + std::abs(a) + b * b));
    }
}

TEST_CASE("region labels and wave predictions") {
    auto coeffs = [](double a, double b) {
        RegimeCoefficients c;
        c.a = a;
        c.b = b;
        c.mu1 = b / 3.0;
        c.mu2 = c.mu1 * c.mu1 - a;
        return c;
    };

    auto r2 = classify_region(coeffs(1.0 / 11.0, 1.0));
    CHECK(r2.label == RegionLabel::Region2);
    CHECK(r2.predicted_waves == std::set<WaveType>{WaveType::CSW});
    REQUIRE(r2.nearest_curve.has_value());
    CHECK(r2.nearest_curve->id == CurveId::C0);

    auto r3 = classify_region(coeffs(-0.0909, -1.0));
    CHECK(r3.label == RegionLabel::Region3);
    CHECK(r3.predicted_waves == std::set<WaveType>{WaveType::GSW});
    CHECK(r3.nearest_curve->id == CurveId::C1);

    auto r1 = classify_region(coeffs(0.5, 0.0));
    CHECK(r1.label == RegionLabel::Region1);
    CHECK(r1.predicted_waves == std::set<WaveType>{WaveType::NMCSW});
    CHECK(r1.nearest_curve->id == CurveId::C3);

    auto r4 = classify_region(coeffs(0.05, -1.0));
    CHECK(r4.label == RegionLabel::Region4);
    CHECK(r4.predicted_waves == std::set<WaveType>{WaveType::GSW, WaveType::PTW});

    auto c0 = classify_region(coeffs(0.0, 2.0));
    CHECK(c0.label == RegionLabel::C0);
    auto c1 = classify_region(coeffs(0.0, -2.0));
    CHECK(c1.label == RegionLabel::C1);
    auto c2 = classify_region(coeffs(1.0, -2.0));
    CHECK(c2.label == RegionLabel::C2);
    auto c3 = classify_region(coeffs(1.0, 2.0));
    CHECK(c3.label == RegionLabel::C3);
    CHECK(c3.predicted_waves == std::set<WaveType>{WaveType::CSW, WaveType::NMCSW});
    auto origin = classify_region(coeffs(0.0, 0.0));
    CHECK(origin.label == RegionLabel::Origin);
    CHECK(origin.predicted_waves.empty());
}

TEST_CASE("mu coordinates and curve identification") {
    auto coeffs = [](double a, double b) {
        RegimeCoefficients c;
        c.a = a;
        c.b = b;
        c.mu1 = b / 3.0;
        c.mu2 = c.mu1 * c.mu1 - a;
        return c;
    };
    auto m0 = mu_coordinates(coeffs(0.0, 3.0));
    CHECK(m0.mu1 == doctest::Approx(1.0));
    CHECK(m0.mu2 == doctest::Approx(1.0));
    CHECK(m0.on_curve == CurveId::C0);

    auto m1 = mu_coordinates(coeffs(0.0, -3.0));
    CHECK(m1.mu1 == doctest::Approx(-1.0));
    CHECK(m1.mu2 == doctest::Approx(1.0));
    CHECK(m1.on_curve == CurveId::C1);

    auto m3 = mu_coordinates(coeffs(2.25, 3.0));
    CHECK(m3.mu2 == doctest::Approx(-1.25));
    CHECK(m3.on_curve == CurveId::C3);

    auto m2 = mu_coordinates(coeffs(2.25, -3.0));
    CHECK(m2.on_curve == CurveId::C2);

    CHECK_FALSE(mu_coordinates(coeffs(0.3, 1.0)).on_curve.has_value());
}

TEST_CASE("coercivity thresholds: family closed forms") {
    SUBCASE("Rosenau: x+ = 0, x- = -eps exactly") {
        for (double eps : {0.5, 1.0, 2.0, 7.5}) {
            const ThresholdSet t = coercivity_thresholds({0.0, 1.3, 0.0, eps, 0.0});
            CHECK(std::abs(t.x_plus) <= 1e-14 * eps);
            CHECK(t.x_minus == doctest::Approx(-eps).epsilon(1e-14));
        }
    }
    SUBCASE("Rosenau-KdV eta=1: x+- = (-1 +- sqrt(2))/2") {
        const ThresholdSet t =
            coercivity_thresholds({0.0, 1.0, 0.0, 1.0, 1.0}, FamilyTag::RosenauKdV);
        CHECK(t.x_plus == doctest::Approx(0.20710678118654752).epsilon(1e-14));
        CHECK(t.x_minus == doctest::Approx(-1.2071067811865475).epsilon(1e-14));
        CHECK(t.family_thresholds.at("x_plus") == doctest::Approx(t.x_plus).epsilon(1e-14));
    }
    SUBCASE("Rosenau-RLW-Kawahara eta=1: z+ = 2/3, z- = -2") {
        const ThresholdSet t =
            coercivity_thresholds({-1.0, 1.0, -1.0, 1.0, 1.0}, FamilyTag::RosenauRLWKawahara);
        CHECK(t.x_plus == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(t.x_minus == doctest::Approx(-2.0).epsilon(1e-14));
        CHECK(t.family_thresholds.at("z_plus") == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(t.family_thresholds.at("z_minus") == doctest::Approx(-2.0).epsilon(1e-14));
    }
    SUBCASE("Rosenau-RLW named threshold eps*alpha^2/(4 beta - alpha^2)") {
        const ThresholdSet t =
            coercivity_thresholds({-1.0, 1.0, 0.0, 1.0, 0.0}, FamilyTag::RosenauRLW);
        CHECK(t.family_thresholds.at("rlw_threshold") == doctest::Approx(1.0 / 3.0));
        CHECK(t.x_plus == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(t.x_minus == doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("coercivity check") {
    const EquationParams rosenau{0.0, 1.0, 0.0, 1.0, 0.0};
    CHECK(coercivity_check(rosenau, 1.5));
    CHECK_FALSE(coercivity_check(rosenau, 0.9));

    // Kawahara with gamma=2 (rho=-1), eta=-1/2: y+ ~ 1.059017.
    const EquationParams kaw{0.0, 1.0, 2.0, 1.0, -0.5};
    CHECK(coercivity_check(kaw, 2.2));
    CHECK_FALSE(coercivity_check(kaw, 2.0));
}

TEST_CASE("alpha = 0 reduces the general roots to the Kawahara y+-") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> pos(0.05, 5.0);
    std::uniform_real_distribution<double> any(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        EquationParams p{0.0, pos(gen), any(gen), pos(gen), any(gen)};
        const ThresholdSet t = coercivity_thresholds(p);
        const double rb = (p.beta * p.epsilon - p.gamma) / p.beta;
        const double s = std::sqrt(rb * rb + p.eta * p.eta / p.beta);
        const double y_plus = (-rb + s) / 2.0;
        const double y_minus = (-rb - s) / 2.0;
        const double scale = std::max({1.0, std::abs(y_plus), std::abs(y_minus)});
        CHECK(std::abs(t.x_plus - y_plus) <= 1e-12 * scale);
        CHECK(std::abs(t.x_minus - y_minus) <= 1e-12 * scale);
    }
}

TEST_CASE("coercivity implies the profile symbol determinant condition") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> pos(0.05, 4.0);
    std::uniform_real_distribution<double> any(-4.0, 4.0);
    int checked = 0;
    while (checked < 200) {
        EquationParams p{any(gen), pos(gen), any(gen), pos(gen), any(gen)};
        if (!validate_params(p).ok) continue;
        const double cs = pos(gen);
        if (!coercivity_check(p, cs)) continue;
        ++checked;
        const double lhs = (p.alpha * cs - p.eta) * (p.alpha * cs - p.eta);
        const double rhs = 4.0 * (p.beta * cs - p.gamma) * (cs - p.epsilon);
        CHECK(lhs < rhs);
    }
}

TEST_CASE("family regime: worked examples") {
    SUBCASE("Rosenau-RLW alpha=-1 at cs=1.1: Region 2, CSW") {
        const auto rep = family_regime(FamilyTag::RosenauRLW, {-1.0, 1.0, 0.0, 1.0, 0.0}, 1.1);
        CHECK(rep.label == RegionLabel::Region2);
        CHECK(rep.predicted_waves.count(WaveType::CSW) == 1);
        CHECK(rep.thresholds.family_thresholds.at("rlw_threshold") ==
              doctest::Approx(1.0 / 3.0));
        CHECK_FALSE(rep.coercive);  // 0 < cs-eps < threshold = x_plus
    }
    SUBCASE("Rosenau-RLW alpha=+1 at cs=1.5: Region 1, NMCSW, coercive") {
        const auto rep = family_regime(FamilyTag::RosenauRLW, {1.0, 1.0, 0.0, 1.0, 0.0}, 1.5);
        CHECK(rep.label == RegionLabel::Region1);
        CHECK(rep.predicted_waves.count(WaveType::NMCSW) == 1);
        CHECK(rep.coercive);
    }
    SUBCASE("Rosenau-KdV eta=1 at cs=0.9: Region 3 near C0, PTW") {
        const auto rep = family_regime(FamilyTag::RosenauKdV, {0.0, 1.0, 0.0, 1.0, 1.0}, 0.9);
        CHECK(rep.label == RegionLabel::Region3);
        CHECK(rep.predicted_waves.count(WaveType::PTW) == 1);
        REQUIRE(rep.nearest_curve.has_value());
        CHECK(rep.nearest_curve->id == CurveId::C0);
    }
    SUBCASE("pattern mismatch is rejected") {
        CHECK_THROWS_AS(family_regime(FamilyTag::Rosenau, {-1.0, 1.0, 0.0, 1.0, 0.0}, 1.1),
                        UnsupportedPattern);
    }
}

// Parameter sets and wave types quoted from the figure captions.
TEST_CASE("figure-caption fixture: classifier fidelity") {
    struct Fixture {
        FamilyTag family;
        EquationParams params;
        double cs;
        WaveType expected;
    };
    const std::vector<Fixture> fixtures = {
        // CSW generation
        {FamilyTag::RosenauRLW, {-1.0, 1.0, 0.0, 1.0, 0.0}, 1.1, WaveType::CSW},
        {FamilyTag::RosenauKawahara, {0.0, 1.0, 2.0, 1.0, -0.5}, 0.951, WaveType::CSW},
        {FamilyTag::RosenauRLWKawahara, {-1.0, 1.0, -1.0, 1.0, 1.0}, 1.102, WaveType::CSW},
        // PTW generation near C0
        {FamilyTag::RosenauKdV, {0.0, 1.0, 0.0, 1.0, 1.0}, 0.9, WaveType::PTW},
        {FamilyTag::RosenauKawahara, {0.0, 2.0, 1.0, 1.0, 1.0}, 0.9, WaveType::PTW},
        {FamilyTag::RosenauRLWKawahara, {-1.0, 1.0, -1.0, 1.0, 1.0}, 0.9, WaveType::PTW},
        // GSW generation near C1
        {FamilyTag::RosenauRLW, {1.0, 1.0, 0.0, 1.0, 0.0}, 0.9, WaveType::GSW},
        {FamilyTag::RosenauKawahara, {0.0, 4.0, 2.0, 0.25, 1.0}, 0.43, WaveType::GSW},
        {FamilyTag::RosenauKawahara, {0.0, 2.0, 1.0, 1.0, -1.0}, 0.9, WaveType::GSW},
        // PTW generation in region 4
        {FamilyTag::RosenauKdV, {0.0, 1.0, 0.0, 1.0, -1.0}, 1.05, WaveType::PTW},
        {FamilyTag::RosenauKawahara, {0.0, 4.0, 2.0, 0.25, 1.0}, 0.208, WaveType::PTW},
        {FamilyTag::RosenauKawahara, {0.0, 8.0, 1.0, 0.125, 1.0}, 0.115, WaveType::PTW},
        // Nonmonotone CSW generation in region 1
        {FamilyTag::RosenauRLW, {1.0, 1.0, 0.0, 1.0, 0.0}, 1.5, WaveType::NMCSW},
        {FamilyTag::RosenauKdV, {0.0, 1.0, 0.0, 1.0, -1.0}, 1.3071, WaveType::NMCSW},
        {FamilyTag::RosenauKawahara, {0.0, 1.0, 2.0, 1.0, -1.0}, 2.2590, WaveType::NMCSW},
        // Region 2 -> region 1 transition across C3
        {FamilyTag::RosenauRLW, {-1.0, 1.0, 0.0, 1.0, 0.0}, 1.3, WaveType::CSW},
        {FamilyTag::RosenauRLW, {-1.0, 1.0, 0.0, 1.0, 0.0}, 1.7, WaveType::NMCSW},
        {FamilyTag::RosenauKawahara, {0.0, 2.0, 1.0, 1.0, -1.0}, 0.4538, WaveType::CSW},
        {FamilyTag::RosenauKawahara, {0.0, 2.0, 1.0, 1.0, -1.0}, 0.1438, WaveType::NMCSW},
    };
    REQUIRE(fixtures.size() >= 15);
    for (size_t i = 0; i < fixtures.size(); ++i) {
        CAPTURE(i);
        const auto& f = fixtures[i];
        const auto rep = family_regime(f.family, f.params, f.cs);
        CHECK_MESSAGE(rep.predicted_waves.count(f.expected) == 1,
                      "fixture ", i, ": expected ", wave_name(f.expected), ", got label ",
                      region_name(rep.label));
    }
}

TEST_CASE("family threshold logic agrees with the sign-pattern classifier") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> pos(0.05, 4.0);
    std::uniform_real_distribution<double> any(-3.0, 3.0);

    auto draw_params = [&](FamilyTag tag) {
        EquationParams p{0.0, pos(gen), 0.0, pos(gen), 0.0};
        switch (tag) {
            case FamilyTag::RosenauRLW: p.alpha = any(gen); break;
            case FamilyTag::RosenauKdV: p.eta = any(gen); break;
            case FamilyTag::RosenauKawahara:
                p.eta = any(gen);
                p.gamma = any(gen);
                break;
            case FamilyTag::RosenauRLWKawahara:
                p.alpha = p.gamma = -1.0;
                p.beta = p.epsilon = 1.0;
                p.eta = pos(gen);
                break;
            default: break;
        }
        return p;
    };

    for (FamilyTag tag : {FamilyTag::Rosenau, FamilyTag::RosenauRLW, FamilyTag::RosenauKdV,
                          FamilyTag::RosenauKawahara, FamilyTag::RosenauRLWKawahara}) {
        int done = 0;
        while (done < 200) {
            const EquationParams p = draw_params(tag);
            if (!validate_params(p).ok) continue;
            const double cs = pos(gen);
            RegimeCoefficients coeffs;
            try {
                coeffs = ab_coefficients(p, cs);
            } catch (const DegenerateSpeed&) {
                continue;
            }
            ++done;
            const auto generic = classify_region(coeffs);
            const auto familial = family_regime(tag, p, cs);
            CAPTURE(family_name(tag));
            CAPTURE(cs);
            CHECK(generic.label == familial.label);
        }
    }
}
