#ifndef ANTK_PRIMES_HPP
#define ANTK_PRIMES_HPP

#include <functional>
#include <string>
#include <vector>

#include "antk/common.hpp"

namespace antk::primes {

struct SieveConfig {
    int64_t cap = 10'000'000'000; // largest admissible hi
    int64_t segment = 1 << 20;    // integers per block
};

// theta(x; q, a) query over the interval (x-h, x].
struct ThetaQuery {
    double x = 2.0;
    double h = 2.0;
    int64_t q = 1;
    int64_t a = 0;
};

// Base-ell digit prescription: the A lowest and B highest digits of an
// N-digit number.  low_digits[j] = d_j (units first); high_digits[j] =
// d_{N-B+j} (ascending significance, so high_digits.back() is the leading
// digit).
struct DigitConstraint {
    int64_t base = 10;
    int num_digits = 1;
    std::vector<int> low_digits;
    std::vector<int> high_digits;
};

struct DigitCount {
    int64_t count = 0;
    double log_weighted = 0.0;
    double predicted = 0.0;
};

// Ascending primes in [lo, hi] (exact, segmented Eratosthenes).
std::vector<int64_t> sieve_interval(int64_t lo, int64_t hi, const SieveConfig& cfg = {});

// Streaming visit of all primes in [lo, hi], ascending.
void for_each_prime(int64_t lo, int64_t hi, const SieveConfig& cfg,
                    const std::function<void(int64_t)>& fn);

// theta(x; q, a) for every residue class a mod q at once: slot a holds the
// compensated sum of log p over p <= x, p = a (mod q).  Slot 0 of the
// second member is the unrestricted theta(x).  OpenMP over segments with a
// deterministic merge order.
struct ThetaTable {
    int64_t q = 1;
    double x = 0.0;
    std::vector<double> by_class; // size q, indexed by residue
    double total = 0.0;
    int64_t prime_count = 0;
};

ThetaTable theta_all(double x, int64_t q, const SieveConfig& cfg = {});
ThetaTable theta_all_serial(double x, int64_t q, const SieveConfig& cfg = {});

// Sum of log p over p <= x, p = a (mod q); gcd(a, q) must be 1.
double theta_ap(double x, int64_t q, int64_t a, const SieveConfig& cfg = {});

// Sum over x-h < p <= x, p = a (mod q), sieving only the interval.
double theta_short_interval(const ThetaQuery& query, const SieveConfig& cfg = {});

// Corollary-style digit-prescribed prime count: one progression condition
// (modulus base^A) plus one short interval (top B digits).
DigitCount count_prescribed_digits(const DigitConstraint& c, const SieveConfig& cfg = {});

// Binary segment cache: versioned little-endian prime list.
void save_prime_cache(const std::string& path, int64_t lo, int64_t hi,
                      const std::vector<int64_t>& primes);
bool load_prime_cache(const std::string& path, int64_t& lo, int64_t& hi,
                      std::vector<int64_t>& primes);

} // namespace antk::primes

#endif
