#include <doctest.h>
TEST_CASE("placeholder config") { CHECK(true); }
