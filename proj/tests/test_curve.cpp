#include <doctest.h>
TEST_CASE("placeholder curve") { CHECK(true); }
