#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "casimir/error.hpp"
#include "casimir/optical_table.hpp"

using namespace casimir;

namespace {

OpticalTable parse_str(const std::string& text, FrequencyUnit u, ColumnLayout c) {
    std::istringstream in(text);
    return parse_table(in, u, c);
}

}  // namespace

TEST_CASE("nk_to_eps") {
    CHECK(nk_to_eps(1, 0) == std::pair{1.0, 0.0});
    CHECK(nk_to_eps(0, 1) == std::pair{-1.0, 0.0});
    auto [e1, e2] = nk_to_eps(0.2, 3.0);
    CHECK(e1 == doctest::Approx(-8.96).epsilon(1e-12));
    CHECK(e2 == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("parse omega_eps2 passthrough") {
    auto t = parse_str("omega_eV eps2\n1.0 0.5\n2.0 0.3\n", FrequencyUnit::ev,
                       ColumnLayout::omega_eps2);
    REQUIRE(t.samples.size() == 2);
    CHECK(t.samples[0].omega == 1.0);
    CHECK(t.samples[0].eps2 == 0.5);
    CHECK(t.samples[1].omega == 2.0);
    CHECK(t.samples[1].eps2 == 0.3);
}

TEST_CASE("parse n,k columns") {
    auto t = parse_str("omega_eV n k\n1.0 0.2 3.0\n2.0 0.1 2.0\n", FrequencyUnit::ev,
                       ColumnLayout::omega_n_k);
    CHECK(t.samples[0].eps2 == doctest::Approx(1.2).epsilon(1e-14));
}

TEST_CASE("parse eps1,eps2 columns drops eps1") {
    auto t = parse_str("omega_eV eps1 eps2\n1.0 -8.96 1.2\n2.0 1.0 0.4\n", FrequencyUnit::ev,
                       ColumnLayout::omega_eps1_eps2);
    CHECK(t.samples[0].eps2 == 1.2);
}

TEST_CASE("wavelength unit conversion and reordering") {
    // ascending wavelength = descending omega; parser sorts ascending
    auto t = parse_str("lambda_um eps2\n0.6198 1.0\n1.2396 2.0\n",
                       FrequencyUnit::micrometers_wavelength, ColumnLayout::omega_eps2);
    const double expect = kDefaultConstants.ev_from_lambda_um(0.6198);
    CHECK(expect == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(t.samples[1].omega == doctest::Approx(expect).epsilon(1e-14));
    CHECK(t.samples[0].omega < t.samples[1].omega);
    CHECK(t.samples[1].eps2 == 1.0);  // stayed attached to its row
}

TEST_CASE("rad/s unit conversion") {
    char text[128];
    std::snprintf(text, sizeof(text), "omega_radps eps2\n%.17g 1.0\n3.0e15 2.0\n",
                  kDefaultConstants.ev_to_radps);
    auto t = parse_str(text, FrequencyUnit::radps, ColumnLayout::omega_eps2);
    CHECK(t.samples[0].omega == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("header deduction matches declared parse") {
    std::istringstream in("lambda_um n k\n2.0 1.0 0.5\n1.0 2.0 0.25\n");
    auto t = parse_table_auto(in);
    CHECK(t.samples.size() == 2);
    CHECK(t.samples[0].eps2 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("serialize/parse round trip is exact") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> logw(-3.0, 4.0), loge(-8.0, 8.0);
    for (int trial = 0; trial < 50; ++trial) {
        OpticalTable t;
        t.material = "X";
        t.source = "round-trip trial";
        const int n = 2 + static_cast<int>(rng() % 40);
        double w = std::exp(logw(rng));
        for (int i = 0; i < n; ++i) {
            w *= 1.0 + 1e-3 + std::uniform_real_distribution<double>(0, 1)(rng);
            t.samples.push_back({w, std::exp(loge(rng))});
        }
        std::istringstream in(serialize_table(t));
        auto back = parse_table_auto(in, "X");
        REQUIRE(back.samples.size() == t.samples.size());
        for (size_t i = 0; i < t.samples.size(); ++i) {
            CHECK(back.samples[i].omega == t.samples[i].omega);
            CHECK(back.samples[i].eps2 == t.samples[i].eps2);
        }
        CHECK(back.source == t.source);
    }
}

TEST_CASE("error paths") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::io_error;  // placeholder meaning "did not throw"
    };

    SUBCASE("duplicate omega") {
        CHECK(code_of([] {
                  parse_str("omega_eV eps2\n1.0 0.5\n1.0 0.6\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::non_monotonic);
    }
    SUBCASE("negative eps2 names the line") {
        try {
            parse_str("omega_eV eps2\n1.0 0.5\n2.0 -0.1\n", FrequencyUnit::ev,
                      ColumnLayout::omega_eps2);
            FAIL("expected NegativeValue");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::negative_value);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("nonpositive omega") {
        CHECK(code_of([] {
                  parse_str("omega_eV eps2\n0.0 0.5\n2.0 0.1\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::negative_value);
    }
    SUBCASE("negative n") {
        CHECK(code_of([] {
                  parse_str("omega_eV n k\n1.0 -0.2 3.0\n2.0 0.1 2.0\n", FrequencyUnit::ev,
                            ColumnLayout::omega_n_k);
              }) == ErrorCode::negative_value);
    }
    SUBCASE("malformed number") {
        CHECK(code_of([] {
                  parse_str("omega_eV eps2\n1.0 abc\n2.0 0.1\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::malformed_row);
    }
    SUBCASE("wrong field count") {
        CHECK(code_of([] {
                  parse_str("omega_eV eps2\n1.0 0.5 9.0\n2.0 0.1\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::malformed_row);
    }
    SUBCASE("too few rows") {
        CHECK(code_of([] {
                  parse_str("omega_eV eps2\n1.0 0.5\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::empty_table);
    }
    SUBCASE("header disagrees with declaration") {
        CHECK(code_of([] {
                  parse_str("omega_eV n k\n1.0 0.2 3.0\n2.0 0.1 2.0\n", FrequencyUnit::ev,
                            ColumnLayout::omega_eps2);
              }) == ErrorCode::malformed_row);
    }
}

TEST_CASE("source provenance comment is captured") {
    std::istringstream in("# source: handbook edition 2\nomega_eV eps2\n1 2\n2 1\n");
    auto t = parse_table_auto(in);
    CHECK(t.source == "handbook edition 2");
}

TEST_CASE("constants are self-consistent") {
    const auto& pc = kDefaultConstants;
    CHECK(pc.valid());
    // ev_to_radps = e/hbar to 10 significant digits
    CHECK(pc.ev_to_radps ==
          doctest::Approx(1.602176634e-19 / 1.054571817e-34).epsilon(1e-10));
    CHECK(pc.hc_ev_um() == doctest::Approx(0.19732697).epsilon(1e-7));
}
