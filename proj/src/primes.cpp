#include "antk/primes.hpp"

#include "antk/chars.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace antk::primes {

namespace {

// wheel mod 30
constexpr int kWheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};
constexpr int kWheelSize = 8;

struct WheelMaps {
    int8_t pos[30];  // residue -> wheel index, -1 if not coprime to 30
    WheelMaps() {
        std::memset(pos, -1, sizeof(pos));
        for (int i = 0; i < kWheelSize; ++i) pos[kWheel[i]] = static_cast<int8_t>(i);
    }
};
const WheelMaps kMaps;

// global wheel index of the smallest wheel number >= n
int64_t wheel_index_ceil(int64_t n) {
    int64_t base = n / 30;
    int r = static_cast<int>(n % 30);
    for (int i = 0; i < kWheelSize; ++i) {
        if (kWheel[i] >= r) return base * 8 + i;
    }
    return (base + 1) * 8;
}

int64_t wheel_value(int64_t idx) { return (idx / 8) * 30 + kWheel[idx % 8]; }

// simple sieve for base primes
std::vector<int64_t> small_primes(int64_t n) {
    std::vector<bool> comp(static_cast<std::size_t>(n + 1), false);
    std::vector<int64_t> ps;
    for (int64_t i = 2; i <= n; ++i) {
        if (!comp[static_cast<std::size_t>(i)]) {
            ps.push_back(i);
            for (int64_t j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
        }
    }
    return ps;
}

// Sieve one block of wheel indices [wi_lo, wi_hi) and call fn for each prime.
void sieve_block(int64_t wi_lo, int64_t wi_hi, const std::vector<int64_t>& base,
                 std::vector<uint8_t>& comp, const std::function<void(int64_t)>& fn) {
    int64_t lo_val = wheel_value(wi_lo);
    int64_t hi_val = wheel_value(wi_hi - 1);
    comp.assign(static_cast<std::size_t>(wi_hi - wi_lo), 0);
    for (int64_t p : base) {
        if (p < 7) continue;
        if (p * p > hi_val) break;
        // iterate multiples p*k with k running over wheel numbers >= max(p, ceil(lo/p))
        int64_t k0 = std::max(p, (lo_val + p - 1) / p);
        int64_t ki = wheel_index_ceil(k0);
        for (;;) {
            int64_t m = p * wheel_value(ki);
            if (m > hi_val) break;
            int64_t wi = (m / 30) * 8 + kMaps.pos[m % 30];
            if (wi >= wi_lo) comp[static_cast<std::size_t>(wi - wi_lo)] = 1;
            ++ki;
        }
    }
    for (int64_t wi = wi_lo; wi < wi_hi; ++wi) {
        if (comp[static_cast<std::size_t>(wi - wi_lo)]) continue;
        int64_t v = wheel_value(wi);
        if (v < 7) continue; // excludes 1
        fn(v);
    }
}

void check_range(int64_t lo, int64_t hi, const SieveConfig& cfg) {
    if (hi < lo) throw std::invalid_argument("sieve: hi < lo");
    if (hi > cfg.cap) throw resource_error("sieve: range exceeds configured cap");
}

// per-class accumulation over one block range, used by both the serial and
// the OpenMP theta kernels
struct ClassSums {
    std::vector<KahanSum> by_class;
    KahanSum total;
    int64_t count = 0;
};

void accumulate_block(int64_t wi_lo, int64_t wi_hi, const std::vector<int64_t>& base,
                      int64_t hi_val_cap, int64_t q, ClassSums& out,
                      std::vector<uint8_t>& scratch) {
    sieve_block(wi_lo, wi_hi, base, scratch, [&](int64_t p) {
        if (p > hi_val_cap) return;
        double lp = std::log(static_cast<double>(p));
        out.by_class[static_cast<std::size_t>(p % q)].add(lp);
        out.total.add(lp);
        out.count++;
    });
}

} // namespace

void for_each_prime(int64_t lo, int64_t hi, const SieveConfig& cfg,
                    const std::function<void(int64_t)>& fn) {
    check_range(lo, hi, cfg);
    if (hi < 2) return;
    lo = std::max<int64_t>(lo, 2);
    for (int64_t p : {int64_t{2}, int64_t{3}, int64_t{5}}) {
        if (p >= lo && p <= hi) fn(p);
    }
    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    auto base = small_primes(root);
    int64_t wi_lo = wheel_index_ceil(lo);
    int64_t wi_end = wheel_index_ceil(hi + 1);
    int64_t block = cfg.segment * 8 / 30 + 8;
    std::vector<uint8_t> scratch;
    for (int64_t b = wi_lo; b < wi_end; b += block) {
        int64_t e = std::min(b + block, wi_end);
        sieve_block(b, e, base, scratch, [&](int64_t p) {
            if (p <= hi) fn(p);
        });
    }
}

std::vector<int64_t> sieve_interval(int64_t lo, int64_t hi, const SieveConfig& cfg) {
    std::vector<int64_t> out;
    for_each_prime(lo, hi, cfg, [&](int64_t p) { out.push_back(p); });
    return out;
}

ThetaTable theta_all_serial(double x, int64_t q, const SieveConfig& cfg) {
    if (q < 1) throw std::invalid_argument("theta_all: q must be positive");
    ThetaTable t;
    t.q = q;
    t.x = x;
    t.by_class.assign(static_cast<std::size_t>(q), 0.0);
    if (x < 2.0) return t;
    int64_t hi = static_cast<int64_t>(std::floor(x));
    check_range(2, hi, cfg);
    ClassSums sums;
    sums.by_class.assign(static_cast<std::size_t>(q), KahanSum{});
    for_each_prime(2, hi, cfg, [&](int64_t p) {
        double lp = std::log(static_cast<double>(p));
        sums.by_class[static_cast<std::size_t>(p % q)].add(lp);
        sums.total.add(lp);
        sums.count++;
    });
    for (int64_t a = 0; a < q; ++a) t.by_class[static_cast<std::size_t>(a)] = sums.by_class[static_cast<std::size_t>(a)].value();
    t.total = sums.total.value();
    t.prime_count = sums.count;
    return t;
}

ThetaTable theta_all(double x, int64_t q, const SieveConfig& cfg) {
    if (q < 1) throw std::invalid_argument("theta_all: q must be positive");
    ThetaTable t;
    t.q = q;
    t.x = x;
    t.by_class.assign(static_cast<std::size_t>(q), 0.0);
    if (x < 2.0) return t;
    int64_t hi = static_cast<int64_t>(std::floor(x));
    check_range(2, hi, cfg);

    // small primes 2, 3, 5 by hand
    ClassSums head;
    head.by_class.assign(static_cast<std::size_t>(q), KahanSum{});
    for (int64_t p : {int64_t{2}, int64_t{3}, int64_t{5}}) {
        if (p <= hi) {
            double lp = std::log(static_cast<double>(p));
            head.by_class[static_cast<std::size_t>(p % q)].add(lp);
            head.total.add(lp);
            head.count++;
        }
    }

    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    auto base = small_primes(root);
    int64_t wi_lo = wheel_index_ceil(7);
    int64_t wi_end = wheel_index_ceil(hi + 1);
    int64_t block = cfg.segment * 8 / 30 + 8;
    int64_t nblocks = (wi_end - wi_lo + block - 1) / block;

    // deterministic reduction: per-block partials combined in block order,
    // processed in bounded batches to keep memory flat
    const int64_t batch = 64;
    ClassSums acc = std::move(head);
    std::vector<ClassSums> partial(static_cast<std::size_t>(std::min(batch, std::max<int64_t>(nblocks, 1))));
    for (int64_t b0 = 0; b0 < nblocks; b0 += batch) {
        int64_t b1 = std::min(b0 + batch, nblocks);
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<uint8_t> scratch;
#pragma omp for schedule(dynamic)
            for (int64_t b = b0; b < b1; ++b) {
                ClassSums local;
                local.by_class.assign(static_cast<std::size_t>(q), KahanSum{});
                int64_t wlo = wi_lo + b * block;
                int64_t whi = std::min(wlo + block, wi_end);
                accumulate_block(wlo, whi, base, hi, q, local, scratch);
                partial[static_cast<std::size_t>(b - b0)] = std::move(local);
            }
        }
#else
        std::vector<uint8_t> scratch;
        for (int64_t b = b0; b < b1; ++b) {
            ClassSums local;
            local.by_class.assign(static_cast<std::size_t>(q), KahanSum{});
            int64_t wlo = wi_lo + b * block;
            int64_t whi = std::min(wlo + block, wi_end);
            accumulate_block(wlo, whi, base, hi, q, local, scratch);
            partial[static_cast<std::size_t>(b - b0)] = std::move(local);
        }
#endif
        for (int64_t b = b0; b < b1; ++b) {
            auto& part = partial[static_cast<std::size_t>(b - b0)];
            for (int64_t a = 0; a < q; ++a)
                acc.by_class[static_cast<std::size_t>(a)].add(part.by_class[static_cast<std::size_t>(a)]);
            acc.total.add(part.total);
            acc.count += part.count;
        }
    }
    for (int64_t a = 0; a < q; ++a) t.by_class[static_cast<std::size_t>(a)] = acc.by_class[static_cast<std::size_t>(a)].value();
    t.total = acc.total.value();
    t.prime_count = acc.count;
    return t;
}

double theta_ap(double x, int64_t q, int64_t a, const SieveConfig& cfg) {
    if (q < 1) throw std::invalid_argument("theta_ap: q must be positive");
    int64_t ar = ((a % q) + q) % q;
    if (gcd64(ar, q) != 1) throw std::invalid_argument("theta_ap: residue not coprime to modulus");
    if (x < 2.0) return 0.0;
    auto t = theta_all(x, q, cfg);
    return t.by_class[static_cast<std::size_t>(ar)];
}

double theta_short_interval(const ThetaQuery& query, const SieveConfig& cfg) {
    if (query.h <= 0.0 || query.h > query.x)
        throw std::invalid_argument("theta_short_interval: need 0 < h <= x");
    int64_t q = query.q;
    int64_t ar = ((query.a % q) + q) % q;
    if (gcd64(ar, q) != 1) throw std::invalid_argument("theta_short_interval: residue not coprime");
    double lo_real = query.x - query.h;
    int64_t lo = static_cast<int64_t>(std::floor(lo_real)) + 1; // p > x-h
    int64_t hi = static_cast<int64_t>(std::floor(query.x));     // p <= x
    if (hi < 2) return 0.0;
    lo = std::max<int64_t>(lo, 2);
    check_range(lo, hi, cfg);
    KahanSum s;
    for_each_prime(lo, hi, cfg, [&](int64_t p) {
        if (p % q == ar) s.add(std::log(static_cast<double>(p)));
    });
    return s.value();
}

DigitCount count_prescribed_digits(const DigitConstraint& c, const SieveConfig& cfg) {
    int64_t ell = c.base;
    int N = c.num_digits;
    int A = static_cast<int>(c.low_digits.size());
    int B = static_cast<int>(c.high_digits.size());
    if (ell < 2) throw std::invalid_argument("digits: base must be >= 2");
    if (N < 1 || A + B >= N) throw std::invalid_argument("digits: need A + B < N");
    for (int d : c.low_digits)
        if (d < 0 || d >= ell) throw std::invalid_argument("digits: digit out of range");
    for (int d : c.high_digits)
        if (d < 0 || d >= ell) throw std::invalid_argument("digits: digit out of range");
    if (B > 0 && c.high_digits.back() == 0)
        throw std::invalid_argument("digits: leading digit must be nonzero");
    if (A > 0 && gcd64(c.low_digits.front(), ell) != 1)
        throw std::invalid_argument("digits: units digit must be coprime to base");

    auto ipow = [](int64_t b, int e) {
        int64_t r = 1;
        for (int i = 0; i < e; ++i) {
            if (r > (int64_t{1} << 62) / b) throw resource_error("digits: base^N overflows");
            r *= b;
        }
        return r;
    };
    int64_t ellN = ipow(ell, N);
    if (ellN > cfg.cap) throw resource_error("digits: base^N exceeds sieve cap");

    // progression: p = L (mod ell^A) from the low digits
    int64_t modA = ipow(ell, A);
    int64_t residue = 0;
    for (int j = A - 1; j >= 0; --j) residue = residue * ell + c.low_digits[static_cast<std::size_t>(j)];
    // interval from the top B digits
    int64_t prefix = 0;
    for (int j = B - 1; j >= 0; --j) prefix = prefix * ell + c.high_digits[static_cast<std::size_t>(j)];
    int64_t span = ipow(ell, N - B);
    int64_t lo = (B > 0) ? prefix * span : ipow(ell, N - 1);
    int64_t hi = (B > 0) ? prefix * span + span - 1 : ellN - 1;
    lo = std::max(lo, ipow(ell, N - 1)); // N-digit numbers only

    DigitCount out;
    KahanSum lw;
    for_each_prime(std::max<int64_t>(lo, 2), hi, cfg, [&](int64_t p) {
        if (A > 0 && p % modA != residue) return;
        out.count++;
        lw.add(std::log(static_cast<double>(p)));
    });
    out.log_weighted = lw.value();
    out.predicted = static_cast<double>(ipow(ell, N - A - B)) /
                    static_cast<double>(chars::euler_phi(ell));
    return out;
}

void save_prime_cache(const std::string& path, int64_t lo, int64_t hi,
                      const std::vector<int64_t>& primes) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("prime cache: cannot open for writing: " + path);
    const char magic[8] = {'A', 'P', 'C', 'A', 'C', 'H', 'E', '1'};
    uint64_t meta[3] = {static_cast<uint64_t>(lo), static_cast<uint64_t>(hi),
                        static_cast<uint64_t>(primes.size())};
    bool ok = std::fwrite(magic, 1, 8, f) == 8 && std::fwrite(meta, 8, 3, f) == 3;
    if (ok && !primes.empty())
        ok = std::fwrite(primes.data(), 8, primes.size(), f) == primes.size();
    std::fclose(f);
    if (!ok) throw std::runtime_error("prime cache: short write: " + path);
}

bool load_prime_cache(const std::string& path, int64_t& lo, int64_t& hi,
                      std::vector<int64_t>& primes) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    char magic[8];
    uint64_t meta[3];
    bool ok = std::fread(magic, 1, 8, f) == 8 &&
              std::memcmp(magic, "APCACHE1", 8) == 0 &&
              std::fread(meta, 8, 3, f) == 3;
    if (ok) {
        lo = static_cast<int64_t>(meta[0]);
        hi = static_cast<int64_t>(meta[1]);
        primes.resize(meta[2]);
        ok = meta[2] == 0 || std::fread(primes.data(), 8, primes.size(), f) == primes.size();
    }
    std::fclose(f);
    return ok;
}

} // namespace antk::primes
