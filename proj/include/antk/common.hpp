#ifndef ANTK_COMMON_HPP
#define ANTK_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace antk {

using std::int64_t;
using std::uint64_t;

// A computation exceeded a configured cap (sieve range, modulus, height, ...).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested too close to a pole.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// An argument-principle contour could not be tracked conclusively.
class contour_error : public std::runtime_error {
public:
    explicit contour_error(const std::string& what) : std::runtime_error(what) {}
};

// An input data set does not cover the requested range.
class stale_input_error : public std::runtime_error {
public:
    explicit stale_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Compensated (Kahan) accumulator.  Order of add() calls is part of the
// contract: callers that need run-to-run determinism must feed values in a
// fixed order.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    // Merge another accumulator (absorbs its compensation first).
    void add(const KahanSum& other) {
        add(other.sum_);
        add(-other.c_);
    }
    double value() const { return sum_; }
    void reset() { sum_ = 0.0; c_ = 0.0; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

inline int64_t gcd64(int64_t a, int64_t b) {
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline int64_t mulmod64(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

inline int64_t powmod64(int64_t base, int64_t exp, int64_t m) {
    int64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// max{0, log u}; the paper's log+ convention, used by every envelope.
inline double log_plus(double u) {
    if (u <= 1.0) return 0.0;
    return std::log(u);
}

} // namespace antk

#endif
