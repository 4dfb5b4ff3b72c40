#include <doctest.h>
TEST_CASE("placeholder gluing") { CHECK(true); }
