#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suite.hpp"

TEST_CASE("randomized property suite over 200 seeded networks") {
    crn::test::PropertyOutcome out = crn::test::run_property_suite(200, 20240501);
    CHECK(out.networks == 200);
    for (const auto& f : out.failures) {
        CAPTURE(f);
        CHECK(false);
    }
    CHECK(out.ok());
}
