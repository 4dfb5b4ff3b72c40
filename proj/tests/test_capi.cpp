#include <doctest.h>
TEST_CASE("placeholder capi") { CHECK(true); }
