#include <doctest.h>
TEST_CASE("placeholder model") { CHECK(true); }
