#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/drude.hpp"
#include "casimir/error.hpp"

using namespace casimir;

namespace {

OpticalTable synthetic_drude_table(DrudeParams p, double lo, double hi, int n,
                                   double noise = 0.0, uint64_t seed = 0) {
    OpticalTable t;
    t.material = "synthetic";
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const double w = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
        double e2 = drude_eps2(p, w);
        if (noise > 0.0) e2 *= 1.0 + noise * gauss(rng);
        t.samples.push_back({w, e2});
    }
    return t;
}

}  // namespace

TEST_CASE("exact synthetic data recovers parameters within 0.1%") {
    for (double wp : {5.0, 9.0, 15.0}) {
        for (double g : {0.01, 0.035, 0.1}) {
            auto t = synthetic_drude_table({wp, g}, 0.1, 1.0, 25);
            auto fit = fit_drude(t);
            CHECK(fit.params.omega_p == doctest::Approx(wp).epsilon(1e-3));
            CHECK(fit.params.gamma == doctest::Approx(g).epsilon(1e-3));
            CHECK(fit.rms_log_residual < 1e-8);
        }
    }
}

TEST_CASE("recovery property over random parameter draws") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const double wp = 5.0 + 10.0 * std::uniform_real_distribution<double>(0, 1)(rng);
        const double g =
            0.01 * std::pow(10.0, std::uniform_real_distribution<double>(0, 1)(rng));
        auto t = synthetic_drude_table({wp, g}, 0.1, 1.0, 20 + static_cast<int>(rng() % 20));
        auto fit = fit_drude(t);
        CHECK(fit.params.omega_p == doctest::Approx(wp).epsilon(1e-3));
        CHECK(fit.params.gamma == doctest::Approx(g).epsilon(1e-3));
    }
}

TEST_CASE("1% multiplicative noise keeps parameters within 5%") {
    const DrudeParams truth{9.0, 0.035};
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto t = synthetic_drude_table(truth, 0.1, 1.0, 40, 0.01, seed);
        auto fit = fit_drude(t);
        CHECK(fit.params.omega_p == doctest::Approx(truth.omega_p).epsilon(0.05));
        CHECK(fit.params.gamma == doctest::Approx(truth.gamma).epsilon(0.05));
    }
}

TEST_CASE("window with too few samples") {
    auto t = synthetic_drude_table({9.0, 0.035}, 0.05, 10.0, 12);
    CHECK_THROWS_AS((void)fit_drude(t, {0.4, 0.5}), Error);
    try {
        (void)fit_drude(t, {0.4, 0.5});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_few_samples);
    }
}

TEST_CASE("window validation") {
    auto t = synthetic_drude_table({9.0, 0.035}, 0.1, 1.0, 20);
    CHECK_THROWS_AS((void)fit_drude(t, {0.5, 0.2}), Error);
    CHECK_THROWS_AS((void)fit_drude(t, {0.1, 3.0}), Error);  // above the Drude regime
}

TEST_CASE("shipped Au table fits inside the expected bands") {
    auto t = load_table_file(std::string(CASIMIR_DATA_DIR) + "/au_synthetic.csv", "Au");
    auto fit = fit_drude(t);
    CHECK(fit.params.omega_p > 8.0);
    CHECK(fit.params.omega_p < 10.0);
    CHECK(fit.params.gamma > 0.02);
    CHECK(fit.params.gamma < 0.06);
}

TEST_CASE("shipped Cu table fits to valid free-carrier parameters") {
    auto t = load_table_file(std::string(CASIMIR_DATA_DIR) + "/cu_synthetic.csv", "Cu");
    auto fit = fit_drude(t);
    CHECK(fit.params.valid());
    CHECK(fit.params.omega_p > 8.0);
    CHECK(fit.params.omega_p < 10.5);
    CHECK(fit.params.gamma > 0.01);
    CHECK(fit.params.gamma < 0.06);
}
