#include <doctest.h>

#include <cmath>

#include "trendaudit/rng.hpp"

using namespace trendaudit;

TEST_SUITE_BEGIN("rng");

TEST_CASE("same seed, same stream") {
    Xoshiro256pp a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("substreams are reproducible and distinct") {
    Xoshiro256pp a = Xoshiro256pp::substream(7, 0);
    Xoshiro256pp b = Xoshiro256pp::substream(7, 0);
    Xoshiro256pp c = Xoshiro256pp::substream(7, 1);
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        if (va != c.next_u64()) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("uniform doubles live in [0,1) with mean 1/2") {
    Xoshiro256pp rng(5);
    double acc = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        acc += u;
    }
    CHECK(acc / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normals have the right first two moments") {
    Xoshiro256pp rng(11);
    const int n = 200000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.next_normal();
        s1 += z;
        s2 += z * z;
    }
    const double mean = s1 / n;
    const double var = s2 / n - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("uniform range endpoints") {
    Xoshiro256pp rng(3);
    for (int i = 0; i < 10000; ++i) {
        const double d = rng.next_uniform(0.02, 0.2);
        REQUIRE(d >= 0.02);
        REQUIRE(d < 0.2);
    }
}

TEST_SUITE_END();
