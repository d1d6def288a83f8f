#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vpl/propagation.hpp"

using vpl::Frequency;
using vpl::ModelParams;

namespace {

// Oracle values computed independently with 50-digit arithmetic and the
// exact speed of light, then rounded to the nearest double.
constexpr double kFspl596GhzDb = 67.9527084166881;
constexpr double kFspl28GhzDb = 61.3909438487278;
constexpr double kAnchor596GhzDb = 32.3094819272723; // 18.2*log10(59.6)
constexpr double kThreeGpp596At10mDb = 87.7794819272723;
constexpr double kMovingIn50At1mDb = 72.7294819272723;

double sample_mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    const double m = sample_mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double sample_skewness(const std::vector<double>& v) {
    const double m = sample_mean(v);
    double m2 = 0.0;
    double m3 = 0.0;
    for (double x : v) {
        const double d = x - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(v.size());
    m3 /= static_cast<double>(v.size());
    return m3 / std::pow(m2, 1.5);
}

} // namespace

TEST_SUITE("propagation") {

TEST_CASE("frequency unit accessors agree") {
    const Frequency f = Frequency::from_ghz(59.6);
    CHECK(f.ghz() == doctest::Approx(59.6).epsilon(1e-15));
    CHECK(f.hz() == doctest::Approx(59.6e9).epsilon(1e-15));
    const Frequency g = Frequency::from_hz(28e9);
    CHECK(g.ghz() == doctest::Approx(28.0).epsilon(1e-15));
}

TEST_CASE("frequency rejects nonpositive and nonfinite values") {
    CHECK_THROWS_AS(Frequency::from_ghz(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Frequency::from_ghz(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Frequency::from_hz(0.0), std::invalid_argument);
    CHECK_THROWS_AS(
        Frequency::from_ghz(std::numeric_limits<double>::quiet_NaN()),
        std::invalid_argument);
}

TEST_CASE("free-space loss at the 1 m reference") {
    CHECK(std::abs(vpl::fspl_db(Frequency::from_ghz(59.6)) - kFspl596GhzDb) <
          1e-9);
    CHECK(std::abs(vpl::fspl_db(Frequency::from_ghz(59.6)) - 67.95) < 0.01);
    CHECK(std::abs(vpl::fspl_db(Frequency::from_ghz(28.0)) - kFspl28GhzDb) <
          1e-9);
}

TEST_CASE("free-space loss is zero where the wavelength matches 4*pi meters") {
    // 20*log10(4*pi*f/c) vanishes at f = c/(4*pi).
    const double f0_hz = vpl::kSpeedOfLightMps / (4.0 * std::acos(-1.0));
    CHECK(std::abs(vpl::fspl_db(Frequency::from_hz(f0_hz))) < 1e-12);
}

TEST_CASE("free-space loss only serves the 1 m anchor") {
    CHECK_THROWS_AS(vpl::fspl_db(Frequency::from_ghz(59.6), 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(vpl::fspl_db(Frequency::from_ghz(59.6), 0.0),
                    std::invalid_argument);
}

TEST_CASE("floating-intercept curve") {
    const ModelParams m = vpl::FiParams{70.0, 2.0, 0.0};
    const Frequency f = Frequency::from_ghz(59.6);
    CHECK(vpl::median_path_loss_db(m, f, 1.0) == 70.0);
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 10.0) - 90.0) < 1e-12);
    // No frequency dependence.
    CHECK(vpl::median_path_loss_db(m, Frequency::from_ghz(2.0), 10.0) ==
          vpl::median_path_loss_db(m, f, 10.0));
}

TEST_CASE("close-in curve is anchored to free-space loss at 1 m") {
    const Frequency f = Frequency::from_ghz(59.6);
    const ModelParams m = vpl::CiParams{2.0, 0.0};
    CHECK(vpl::median_path_loss_db(m, f, 1.0) == vpl::fspl_db(f));
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 10.0) -
                   (vpl::fspl_db(f) + 20.0)) < 1e-12);
}

TEST_CASE("alpha-beta-gamma curve in the standard convention") {
    const ModelParams m = vpl::AbgParams{2.1, 31.7, 2.0, 0.0};
    const Frequency f = Frequency::from_ghz(10.0);
    // 10*2.1*log10(100) + 31.7 + 10*2*log10(10) = 42 + 31.7 + 20
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 100.0) - 93.7) < 1e-12);
}

TEST_CASE("3gpp sidelink urban LOS curve") {
    const ModelParams m = vpl::ThreeGppParams{};
    const Frequency f = Frequency::from_ghz(59.6);
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 10.0) -
                   kThreeGpp596At10mDb) < 1e-9);
    // 38.77 + 16.7*log10(10) + anchor
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 10.0) -
                   (38.77 + 16.7 + kAnchor596GhzDb)) < 1e-9);
    CHECK(vpl::sigma_of(m) == 3.0);
}

TEST_CASE("crossing curve shares the 3gpp frequency anchor") {
    const ModelParams m = vpl::presets::kMovingIn50Kmh;
    const Frequency f = Frequency::from_ghz(59.6);
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 1.0) - kMovingIn50At1mDb) <
          1e-9);
    // eta2 multiplies log10(d) directly: one decade adds eta2 dB.
    CHECK(std::abs(vpl::median_path_loss_db(m, f, 10.0) -
                   (kMovingIn50At1mDb + 10.59)) < 1e-9);
}

TEST_CASE("distances below the 1 m reference are rejected") {
    const Frequency f = Frequency::from_ghz(59.6);
    for (const ModelParams m :
         {ModelParams{vpl::FiParams{70.0, 2.0, 0.0}},
          ModelParams{vpl::presets::kCiUma},
          ModelParams{vpl::presets::kAbgUma},
          ModelParams{vpl::ThreeGppParams{}},
          ModelParams{vpl::presets::kMovingIn50Kmh}}) {
        CHECK_THROWS_AS(vpl::median_path_loss_db(m, f, 0.999),
                        std::invalid_argument);
        CHECK_THROWS_AS(vpl::median_path_loss_db(m, f, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(vpl::median_path_loss_db(m, f, -5.0),
                        std::invalid_argument);
        CHECK_NOTHROW(vpl::median_path_loss_db(m, f, 1.0));
    }
}

TEST_CASE("unchecked evaluation covers the below-reference range") {
    const ModelParams m = vpl::presets::kMovingIn50Kmh;
    const Frequency f = Frequency::from_ghz(59.6);
    const double at_half = vpl::detail::median_path_loss_unchecked_db(m, f, 0.5);
    CHECK(std::isfinite(at_half));
    CHECK(at_half < vpl::detail::median_path_loss_unchecked_db(m, f, 1.0));
    CHECK(vpl::detail::median_path_loss_unchecked_db(m, f, 2.0) ==
          vpl::median_path_loss_db(m, f, 2.0));
}

TEST_CASE("median curves increase with distance") {
    const Frequency f = Frequency::from_ghz(59.6);
    const ModelParams models[] = {
        ModelParams{vpl::FiParams{70.0, 2.0, 0.0}},
        ModelParams{vpl::presets::kCiUma},
        ModelParams{vpl::presets::kAbgUma},
        ModelParams{vpl::ThreeGppParams{}},
        ModelParams{vpl::presets::kMovingIn50Kmh}};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(1.0, 1000.0);
    for (const ModelParams& m : models) {
        for (int i = 0; i < 200; ++i) {
            double d1 = dist(rng);
            double d2 = dist(rng);
            if (d1 == d2) continue;
            if (d1 > d2) std::swap(d1, d2);
            CHECK(vpl::median_path_loss_db(m, f, d1) <
                  vpl::median_path_loss_db(m, f, d2));
        }
    }
}

TEST_CASE("frequency enters 3gpp and crossing curves through the anchor") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> freq(1.0, 100.0);
    std::uniform_real_distribution<double> dist(1.0, 200.0);
    const ModelParams models[] = {ModelParams{vpl::ThreeGppParams{}},
                                  ModelParams{vpl::presets::kMovingAway70Kmh}};
    for (const ModelParams& m : models) {
        for (int i = 0; i < 100; ++i) {
            const double f1 = freq(rng);
            const double f2 = freq(rng);
            const double d = dist(rng);
            const double got =
                vpl::median_path_loss_db(m, Frequency::from_ghz(f2), d) -
                vpl::median_path_loss_db(m, Frequency::from_ghz(f1), d);
            const double want =
                vpl::kFreqSlopeDbPerDecade * (std::log10(f2) - std::log10(f1));
            CHECK(std::abs(got - want) < 1e-9);
        }
    }
}

TEST_CASE("per-decade slope of each family") {
    const Frequency f = Frequency::from_ghz(59.6);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(1.0, 100.0);
    const struct {
        ModelParams model;
        double slope_db;
    } cases[] = {
        {ModelParams{vpl::FiParams{70.0, 2.0, 0.0}}, 20.0},
        {ModelParams{vpl::presets::kCiUma}, 20.0},
        {ModelParams{vpl::presets::kAbgUma}, 21.0},
        {ModelParams{vpl::ThreeGppParams{}}, 16.7},
        {ModelParams{vpl::presets::kMovingIn50Kmh}, 10.59},
    };
    for (const auto& c : cases) {
        for (int i = 0; i < 50; ++i) {
            const double d = dist(rng);
            const double got = vpl::median_path_loss_db(c.model, f, 10.0 * d) -
                               vpl::median_path_loss_db(c.model, f, d);
            CHECK(std::abs(got - c.slope_db) < 1e-9);
        }
    }
}

TEST_CASE("zero sigma draws nothing and returns exactly zero") {
    std::mt19937_64 rng(99);
    const std::mt19937_64 before = rng;
    for (int i = 0; i < 5; ++i) {
        CHECK(vpl::sample_shadowing_db(0.0, rng) == 0.0);
    }
    CHECK(rng == before); // engine state untouched
}

TEST_CASE("shadowing rejects negative or nonfinite sigma") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(vpl::sample_shadowing_db(-1.0, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        vpl::sample_shadowing_db(std::numeric_limits<double>::infinity(), rng),
        std::invalid_argument);
}

TEST_CASE("shadowing draws are reproducible for a given seed") {
    std::mt19937_64 a(12345);
    std::mt19937_64 b(12345);
    for (int i = 0; i < 20; ++i) {
        CHECK(vpl::sample_shadowing_db(6.0, a) ==
              vpl::sample_shadowing_db(6.0, b));
    }
    std::mt19937_64 c(54321);
    bool any_diff = false;
    std::mt19937_64 a2(12345);
    for (int i = 0; i < 20; ++i) {
        if (vpl::sample_shadowing_db(6.0, a2) !=
            vpl::sample_shadowing_db(6.0, c)) {
            any_diff = true;
        }
    }
    CHECK(any_diff);
}

TEST_CASE("shadowing draws match a zero-mean gaussian with the given std") {
    std::mt19937_64 rng(2026);
    const double sigma = 6.0;
    std::vector<double> draws(100000);
    for (double& x : draws) x = vpl::sample_shadowing_db(sigma, rng);
    CHECK(std::abs(sample_mean(draws)) < 0.06);
    CHECK(std::abs(sample_std(draws) - sigma) < 0.12); // within 2%
    CHECK(std::abs(sample_skewness(draws)) < 0.05);
}

TEST_CASE("stochastic evaluation is the median plus one draw") {
    const ModelParams m = vpl::presets::kMovingAway50Kmh;
    const Frequency f = Frequency::from_ghz(59.6);
    std::mt19937_64 a(7);
    std::mt19937_64 b(7);
    for (int i = 0; i < 10; ++i) {
        const double d = 1.0 + i;
        const double got = vpl::path_loss_db(m, f, d, a);
        const double want = vpl::median_path_loss_db(m, f, d) +
                            vpl::sample_shadowing_db(vpl::sigma_of(m), b);
        CHECK(got == want);
    }
}

TEST_CASE("sample mean at a fixed distance converges on the median curve") {
    const ModelParams m = vpl::presets::kMovingAway70Kmh; // sigma 6.13
    const Frequency f = Frequency::from_ghz(59.6);
    std::mt19937_64 rng(31);
    std::vector<double> draws(10000);
    for (double& x : draws) x = vpl::path_loss_db(m, f, 20.0, rng);
    CHECK(std::abs(sample_mean(draws) - vpl::median_path_loss_db(m, f, 20.0)) <
          0.2);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(vpl::validate(ModelParams{vpl::presets::kMovingIn70Kmh}));
    CHECK_THROWS_AS(vpl::validate(ModelParams{vpl::FiParams{70.0, 2.0, -0.1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(vpl::validate(ModelParams{vpl::CiParams{2.0, -1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        vpl::validate(ModelParams{vpl::AbgParams{
            std::numeric_limits<double>::quiet_NaN(), 31.7, 2.0, 3.9}}),
        std::invalid_argument);
    CHECK_THROWS_AS(vpl::validate(ModelParams{vpl::ThreeGppParams{-3.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        vpl::validate(ModelParams{vpl::CrossingParams{
            40.0, std::numeric_limits<double>::infinity(), 6.0}}),
        std::invalid_argument);
}

TEST_CASE("family introspection and sigma plumbing") {
    CHECK(vpl::family_of(ModelParams{vpl::FiParams{}}) ==
          vpl::ModelFamily::fi);
    CHECK(vpl::family_of(ModelParams{vpl::presets::kCiUma}) ==
          vpl::ModelFamily::ci);
    CHECK(vpl::family_of(ModelParams{vpl::presets::kAbgUma}) ==
          vpl::ModelFamily::abg);
    CHECK(vpl::family_of(ModelParams{vpl::ThreeGppParams{}}) ==
          vpl::ModelFamily::three_gpp);
    CHECK(vpl::family_of(ModelParams{vpl::presets::kMovingIn50Kmh}) ==
          vpl::ModelFamily::crossing);

    CHECK(vpl::family_name(vpl::ModelFamily::fi) == "fi");
    CHECK(vpl::family_name(vpl::ModelFamily::ci) == "ci");
    CHECK(vpl::family_name(vpl::ModelFamily::abg) == "abg");
    CHECK(vpl::family_name(vpl::ModelFamily::three_gpp) == "3gpp");
    CHECK(vpl::family_name(vpl::ModelFamily::crossing) == "crossing");

    const ModelParams m = vpl::presets::kMovingIn50Kmh;
    CHECK(vpl::sigma_of(m) == 6.34);
    const ModelParams m2 = vpl::with_sigma(m, 0.0);
    CHECK(vpl::sigma_of(m2) == 0.0);
    CHECK(vpl::family_of(m2) == vpl::ModelFamily::crossing);
    CHECK(vpl::median_path_loss_db(m2, Frequency::from_ghz(59.6), 5.0) ==
          vpl::median_path_loss_db(m, Frequency::from_ghz(59.6), 5.0));
}

TEST_CASE("family declaration order is fi, ci, abg, 3gpp, crossing") {
    REQUIRE(std::size(vpl::kAllFamilies) == 5);
    CHECK(vpl::kAllFamilies[0] == vpl::ModelFamily::fi);
    CHECK(vpl::kAllFamilies[1] == vpl::ModelFamily::ci);
    CHECK(vpl::kAllFamilies[2] == vpl::ModelFamily::abg);
    CHECK(vpl::kAllFamilies[3] == vpl::ModelFamily::three_gpp);
    CHECK(vpl::kAllFamilies[4] == vpl::ModelFamily::crossing);
}

} // TEST_SUITE
