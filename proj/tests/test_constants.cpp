#include <doctest.h>

#include <numbers>

#include "vring/constants.hpp"
#include "vring/errors.hpp"

using namespace vring;

TEST_CASE("derive_constants fills the exact scales") {
    const auto unit = derive_constants(1.0, 1.0, 1.0, 1.0);
    CHECK(unit.p0 == 1.0);
    CHECK(unit.E0 == 1.0);
    CHECK(unit.Gamma0 == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(unit.lambda0 == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));

    const auto doubled = derive_constants(2.0, 1.0, 1.0, 1.0);
    CHECK(doubled.p0 == 2.0);
    CHECK(doubled.E0 == 4.0);
    CHECK(doubled.Gamma0 == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-15));

    const auto mixed = derive_constants(1.0, 2.0, 3.0, 1.0);
    CHECK(mixed.p0 == 1.5);
    CHECK(mixed.E0 == 0.75);
}

TEST_CASE("scale identities hold exactly") {
    for (double R0 : {0.5, 1.0, 3.7}) {
        for (double t0 : {0.25, 1.0, 2.0}) {
            const auto c = derive_constants(R0, t0, 1.3, 0.9);
            CHECK(c.p0 * c.t0 / (c.m0 * c.R0) == 1.0);
            CHECK(c.E0 == c.p0 * c.R0 / c.t0);
            CHECK(c.Gamma0 == c.lambda0 * c.R0 * c.R0 / c.t0);
        }
    }
}

TEST_CASE("non-positive inputs are rejected by name") {
    CHECK_THROWS_WITH_AS(derive_constants(0.0, 1.0, 1.0, 1.0),
                         doctest::Contains("R0"), DomainError);
    CHECK_THROWS_WITH_AS(derive_constants(1.0, -2.0, 1.0, 1.0),
                         doctest::Contains("t0"), DomainError);
    CHECK_THROWS_WITH_AS(derive_constants(1.0, 1.0, 0.0, 1.0),
                         doctest::Contains("m0"), DomainError);
    CHECK_THROWS_WITH_AS(derive_constants(1.0, 1.0, 1.0, 0.0),
                         doctest::Contains("hbar"), DomainError);
}
