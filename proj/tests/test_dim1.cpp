#include <doctest.h>
TEST_CASE("placeholder dim1") { CHECK(true); }
