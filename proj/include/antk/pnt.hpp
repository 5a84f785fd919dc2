#ifndef ANTK_PNT_HPP
#define ANTK_PNT_HPP

#include <vector>

#include "antk/primes.hpp"
#include "antk/zeros.hpp"

namespace antk::pnt {

enum class ZfrKind { VK, IWANIEC, DH };

// delta(t) profile: Vinogradov-Korobov, Iwaniec (powerful moduli), or
// Deuring-Heilbronn repulsion.  The paper proves the constants exist but
// gives no values; they are configuration with documented defaults.
struct ZeroFreeRegionProfile {
    ZfrKind kind = ZfrKind::VK;
    double c_vk = 0.05;
    double c_iw = 1.0 / 4e4;
    double c_dh = 0.1;
    int64_t squarefree_part = 0; // d = prod_{p|q} p; 0 means derive from q
    double beta1 = 0.0;          // for the DH kind

    void validate() const {
        if (c_vk <= 0 || c_iw <= 0 || c_dh <= 0)
            throw std::invalid_argument("ZeroFreeRegionProfile: constants must be positive");
        if (kind == ZfrKind::DH && !(beta1 > 0.0 && beta1 < 1.0))
            throw std::invalid_argument("ZeroFreeRegionProfile: DH requires beta1 in (0, 1)");
    }
};

enum class EnvelopeFlavor { VK, POWERFUL, GALLAGHER };

struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct PredictionReport {
    primes::ThetaQuery query;
    double lambda = 1.0;
    Rational theta_exponent{7, 12};
    double actual = 0.0;
    double predicted = 0.0;
    double relative_error = 0.0;
    double envelope = 0.0;
    double implied_constant_ratio = 0.0; // relative_error / envelope, reported not asserted
    double primary_term = 0.0;
    double secondary_term = 0.0;
    bool range_condition_met = false;
    bool exceptional_exists = false;
    double beta1 = 0.0;
};

struct BrunTitchmarshAudit {
    double max_ratio = 0.0;       // max over classes of phi(q) theta / h
    double min_ratio = 0.0;       // min over classes; the Linnik-side ratio, reported only
    double bound_no_exceptional = 0.0; // 1 + delta
    double bound_exceptional = 0.0;    // 2 + delta
    bool pass = false;            // against the 1 + delta branch
    int64_t argmax_class = 0;
};

// lambda(x, q, a, h): closed form of (1/h) int_{x-h}^x (1 - chi1(a) t^{beta1-1}) dt
// when the exceptional zero exists, 1 otherwise.
double lambda(double x, int64_t q, int64_t a, double h, const zeros::ExceptionalZero& exc);

// chi1(a) passed explicitly (+1/-1) for grid sweeps without a character group.
double lambda_closed_form(double x, double h, double beta1, int chi1_at_a);

// Lemma-style strict double bound (1/8) min{1, (1-beta1) log x} < lambda < 2.
bool lambda_bounds_check(double x, double h, double beta1, int chi1_at_a);

Rational theta_constant(bool exceptional_exists, bool remark2_override = false);

// Zero-free-region width delta(t) for the chosen profile; t >= e.
double zfr_delta(double t, int64_t q, const ZeroFreeRegionProfile& profile);

// Error envelope in (0, 1]; the Gallagher flavor multiplies by (1-beta1) log q.
double error_envelope(double x, double h, int64_t q, double C, EnvelopeFlavor flavor,
                      double beta1 = 0.0);

// Truncated explicit formula for theta(x; q, a) from computed zero sets (one
// per character mod q, keyed by group index).
double explicit_formula_theta(double x, double T, int64_t q, int64_t a,
                              const std::vector<zeros::ZeroSet>& zero_sets,
                              const zeros::ExceptionalZero& exc);

// Scan zero sets for every character mod q (via primitive inducing
// characters), for use with explicit_formula_theta.
std::vector<zeros::ZeroSet> zero_sets_for_modulus(int64_t q, double T,
                                                  const lfunc::EvalSettings& st = {});

PredictionReport predict_and_compare(double x, double h, int64_t q, int64_t a, double eps,
                                     const ZeroFreeRegionProfile& profile, double C,
                                     const zeros::ExceptionalZero* injected = nullptr,
                                     const primes::SieveConfig& sieve = {});

BrunTitchmarshAudit brun_titchmarsh_audit(double x, double h, int64_t q, double delta,
                                          const primes::SieveConfig& sieve = {});

} // namespace antk::pnt

#endif
