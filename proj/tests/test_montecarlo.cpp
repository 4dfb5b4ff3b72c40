#include <doctest.h>
TEST_CASE("placeholder montecarlo") { CHECK(true); }
