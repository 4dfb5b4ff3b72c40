#include <doctest.h>
TEST_CASE("placeholder bvp") { CHECK(true); }
