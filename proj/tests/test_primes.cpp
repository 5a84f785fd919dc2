#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "antk/chars.hpp"
#include "antk/primes.hpp"

using namespace antk;
using namespace antk::primes;

namespace {

bool is_prime_td(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> primes_td(int64_t lo, int64_t hi) {
    std::vector<int64_t> v;
    for (int64_t n = std::max<int64_t>(lo, 2); n <= hi; ++n)
        if (is_prime_td(n)) v.push_back(n);
    return v;
}

} // namespace

TEST_CASE("sieve basics") {
    CHECK(sieve_interval(10, 20) == std::vector<int64_t>{11, 13, 17, 19});
    CHECK(sieve_interval(2, 2) == std::vector<int64_t>{2});
    CHECK(sieve_interval(1000000, 1000100).size() == 6); // trial-division oracle below
    CHECK(sieve_interval(1000000, 1000100) == primes_td(1000000, 1000100));
    SieveConfig tiny;
    tiny.cap = 100;
    CHECK_THROWS_AS(sieve_interval(2, 1000, tiny), resource_error);
}

TEST_CASE("sieve equals trial division on 1000 random subintervals") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int64_t> dist(2, 10'000'000 - 1001);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        int64_t lo = dist(rng);
        if (sieve_interval(lo, lo + 1000) != primes_td(lo, lo + 1000)) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("theta_ap small cases") {
    CHECK(theta_ap(10, 3, 1) == doctest::Approx(std::log(7.0)).epsilon(1e-14));
    CHECK(theta_ap(10, 3, 2) == doctest::Approx(std::log(2.0) + std::log(5.0)).epsilon(1e-14));
    CHECK(theta_ap(1.5, 3, 1) == 0.0);
    CHECK_THROWS_AS(theta_ap(100, 6, 3), std::invalid_argument);
}

TEST_CASE("theta_all serial and parallel agree exactly") {
    for (int64_t q : {1, 4, 9, 30}) {
        auto a = theta_all(2'000'000, q);
        auto b = theta_all_serial(2'000'000, q);
        CHECK(a.prime_count == b.prime_count);
        for (int64_t r = 0; r < q; ++r) {
            CHECK(a.by_class[static_cast<std::size_t>(r)] ==
                  doctest::Approx(b.by_class[static_cast<std::size_t>(r)]).epsilon(1e-14));
        }
        CHECK(a.total == doctest::Approx(b.total).epsilon(1e-14));
    }
}

TEST_CASE("partition: classes plus ramified primes give theta(x)") {
    for (int64_t q : {3, 8, 30}) {
        double x = 1'000'000;
        auto t = theta_all(x, q);
        KahanSum sum;
        for (int64_t a = 0; a < q; ++a) {
            if (gcd64(a, q) == 1) sum.add(t.by_class[static_cast<std::size_t>(a)]);
        }
        for (int64_t p : {int64_t{2}, int64_t{3}, int64_t{5}}) {
            if (q % p == 0) sum.add(std::log(static_cast<double>(p)));
        }
        if (q % 7 == 0) sum.add(std::log(7.0));
        double theta_x = theta_all(x, 1).total;
        CHECK(sum.value() == doctest::Approx(theta_x).epsilon(1e-8));
    }
}

TEST_CASE("theta_short_interval") {
    // x=100, h=50, q=4, a=1: {53, 61, 73, 89, 97}
    ThetaQuery query{100.0, 50.0, 4, 1};
    double expect = 0.0;
    for (int64_t p : {53, 61, 73, 89, 97}) expect += std::log(static_cast<double>(p));
    CHECK(theta_short_interval(query) == doctest::Approx(expect).epsilon(1e-14));

    // h = x reduces to theta_ap
    ThetaQuery full{100000.0, 100000.0, 7, 3};
    CHECK(theta_short_interval(full) == doctest::Approx(theta_ap(100000.0, 7, 3)).epsilon(1e-12));

    // empty class window
    ThetaQuery empty{24.0, 1.5, 5, 1};
    CHECK(theta_short_interval(empty) == 0.0);

    // agrees with differenced theta_ap
    for (double h : {1000.0, 25000.0}) {
        ThetaQuery w{200000.0, h, 9, 4};
        double diff = theta_ap(200000.0, 9, 4) - theta_ap(200000.0 - h, 9, 4);
        CHECK(std::abs(theta_short_interval(w) - diff) < 1e-9);
    }
}

TEST_CASE("chebyshev bound across the audited range") {
    for (double x : {1e3, 1e4, 1e5, 1e6, 1e7, 1e8}) {
        CHECK(theta_all(x, 1).total < 1.1 * x);
    }
}

TEST_CASE("digit-prescribed primes") {
    DigitConstraint c;
    c.base = 10;
    c.num_digits = 3;
    c.low_digits = {3};
    c.high_digits = {1};
    auto r = count_prescribed_digits(c);
    CHECK(r.count == 5); // 103, 113, 163, 173, 193
    CHECK(r.predicted == doctest::Approx(10.0 / 4.0));

    DigitConstraint cb;
    cb.base = 2;
    cb.num_digits = 4;
    cb.low_digits = {1};
    cb.high_digits = {1};
    auto rb = count_prescribed_digits(cb);
    CHECK(rb.count == 2); // 11, 13

    DigitConstraint all3;
    all3.base = 10;
    all3.num_digits = 3;
    auto ra = count_prescribed_digits(all3);
    CHECK(ra.count == 143); // pi(1000) - pi(100) = 168 - 25
    CHECK(ra.predicted == doctest::Approx(1000.0 / 4.0));

    DigitConstraint bad = c;
    bad.high_digits = {0};
    CHECK_THROWS_AS(count_prescribed_digits(bad), std::invalid_argument);
    DigitConstraint bad2 = c;
    bad2.low_digits = {4}; // shares a factor with 10
    CHECK_THROWS_AS(count_prescribed_digits(bad2), std::invalid_argument);
    DigitConstraint bad3;
    bad3.base = 10;
    bad3.num_digits = 2;
    bad3.low_digits = {3};
    bad3.high_digits = {1};
    CHECK_THROWS_AS(count_prescribed_digits(bad3), std::invalid_argument);
}

TEST_CASE("prime cache round trip") {
    auto ps = sieve_interval(100, 300);
    std::string path = "antk_test_cache.bin";
    save_prime_cache(path, 100, 300, ps);
    int64_t lo = 0, hi = 0;
    std::vector<int64_t> back;
    CHECK(load_prime_cache(path, lo, hi, back));
    CHECK(lo == 100);
    CHECK(hi == 300);
    CHECK(back == ps);
    // corrupt header rejected
    std::FILE* f = std::fopen(path.c_str(), "r+b");
    std::fputc('X', f);
    std::fclose(f);
    CHECK(!load_prime_cache(path, lo, hi, back));
    std::remove(path.c_str());
}
