#include "antk/pnt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace antk::pnt {

namespace {

constexpr double kE = std::numbers::e;

int64_t squarefree_kernel(int64_t q) {
    int64_t d = 1;
    for (int64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            d *= p;
            while (q % p == 0) q /= p;
        }
    }
    if (q > 1) d *= q;
    return d;
}

// x^b - (x-h)^b without cancellation: x^b (1 - (1-h/x)^b)
double power_difference(double x, double h, double b) {
    if (h >= x) return std::pow(x, b) - std::pow(x - h, b);
    return std::pow(x, b) * -std::expm1(b * std::log1p(-h / x));
}

} // namespace

double lambda_closed_form(double x, double h, double beta1, int chi1_at_a) {
    if (!(h >= 4.0 && h <= x)) throw std::domain_error("lambda: need 4 <= h <= x");
    if (!(beta1 > 0.0 && beta1 < 1.0)) throw std::domain_error("lambda: beta1 must lie in (0, 1)");
    if (chi1_at_a != 1 && chi1_at_a != -1)
        throw std::invalid_argument("lambda: chi1(a) must be +1 or -1");
    return 1.0 - chi1_at_a * power_difference(x, h, beta1) / (beta1 * h);
}

double lambda(double x, int64_t q, int64_t a, double h, const zeros::ExceptionalZero& exc) {
    if (!(h >= 4.0 && h <= x)) throw std::domain_error("lambda: need 4 <= h <= x");
    if (gcd64(((a % q) + q) % q, q) != 1) throw std::invalid_argument("lambda: gcd(a, q) != 1");
    if (!exc.exists) return 1.0;
    auto group = chars::character_group(exc.modulus);
    auto chi1 = group.character(static_cast<std::size_t>(exc.chi1_index));
    auto v = chi1.evaluate(a);
    int sign = v.real() > 0 ? 1 : -1;
    return lambda_closed_form(x, h, exc.beta1, sign);
}

bool lambda_bounds_check(double x, double h, double beta1, int chi1_at_a) {
    if (!(x >= 4.0)) throw std::domain_error("lambda_bounds_check: x >= 4 required");
    if (!(h >= std::sqrt(x) && h <= x))
        throw std::domain_error("lambda_bounds_check: sqrt(x) <= h <= x required");
    if (!(beta1 > 0.97 && beta1 < 1.0))
        throw std::domain_error("lambda_bounds_check: beta1 must lie in (0.97, 1)");
    double lam = lambda_closed_form(x, std::max(h, 4.0), beta1, chi1_at_a);
    double lower = 0.125 * std::min(1.0, (1.0 - beta1) * std::log(x));
    return lower < lam && lam < 2.0;
}

Rational theta_constant(bool exceptional_exists, bool remark2_override) {
    if (exceptional_exists && !remark2_override) return {71, 75};
    return {7, 12};
}

double zfr_delta(double t, int64_t q, const ZeroFreeRegionProfile& profile) {
    profile.validate();
    if (t < kE) throw std::domain_error("zfr_delta: t >= e required");
    double lq = std::log(static_cast<double>(q));
    switch (profile.kind) {
        case ZfrKind::VK: {
            double lt = std::log(t);
            double denom = lq + std::cbrt(lt * lt) * std::cbrt(log_plus(lt));
            return profile.c_vk / denom;
        }
        case ZfrKind::IWANIEC: {
            int64_t d = profile.squarefree_part > 0 ? profile.squarefree_part : squarefree_kernel(q);
            double lqt = std::log(static_cast<double>(q) * t);
            double denom = std::log(static_cast<double>(d)) +
                           std::pow(lqt, 0.75) * std::pow(log_plus(lqt), 0.75);
            return profile.c_iw / denom;
        }
        case ZfrKind::DH: {
            double lqt3 = std::log(static_cast<double>(q) * (t + 3.0));
            double num = log_plus(1.0 / ((1.0 - profile.beta1) * lqt3));
            return profile.c_dh * num / lqt3;
        }
    }
    throw std::logic_error("zfr_delta: unknown kind");
}

double error_envelope(double x, double h, int64_t q, double C, EnvelopeFlavor flavor,
                      double beta1) {
    if (!(h >= 4.0 && h <= x)) throw std::domain_error("error_envelope: need 4 <= h <= x");
    if (C <= 0.0) throw std::invalid_argument("error_envelope: C must be positive");
    double lx = std::log(x);
    double llx = std::log(lx); // x >= 4 > e keeps this positive
    double lq = std::log(static_cast<double>(q));
    double lxh = std::log(x / h);
    switch (flavor) {
        case EnvelopeFlavor::VK:
        case EnvelopeFlavor::GALLAGHER: {
            double mid = lxh > 0.0 ? std::cbrt(lxh * lxh) * std::cbrt(log_plus(lxh)) : 0.0;
            double denom = lq + mid + std::pow(lx, 0.4) * std::pow(llx, 0.2);
            double env = std::exp(-C * lx / denom);
            if (flavor == EnvelopeFlavor::GALLAGHER) {
                if (!(beta1 > 0.0 && beta1 < 1.0))
                    throw std::domain_error("error_envelope: Gallagher flavor requires beta1");
                env *= (1.0 - beta1) * lq;
            }
            return env;
        }
        case EnvelopeFlavor::POWERFUL: {
            int64_t d = squarefree_kernel(q);
            double lqxh = std::log(static_cast<double>(q) * x / h);
            double mid = lqxh > 0.0 ? std::pow(lqxh, 0.75) * std::pow(log_plus(lqxh), 0.75) : 0.0;
            double denom = std::log(static_cast<double>(d)) + mid +
                           std::pow(lx, 3.0 / 7.0) * std::pow(llx, 3.0 / 7.0);
            return std::exp(-C * lx / denom);
        }
    }
    throw std::logic_error("error_envelope: unknown flavor");
}

std::vector<zeros::ZeroSet> zero_sets_for_modulus(int64_t q, double T,
                                                  const lfunc::EvalSettings& st) {
    auto group = chars::character_group(q);
    std::vector<zeros::ZeroSet> sets(group.size());
    // zeros with beta > 0 of an induced character equal those of its
    // primitive inducing character; cache scans per conductor-level character
    std::vector<std::pair<int64_t, int>> keys(group.size());
    std::vector<chars::DirichletCharacter> prims;
    prims.reserve(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
        auto prim = chars::conductor_and_primitive(group.character(i)).second;
        keys[i] = {prim.modulus(), prim.index()};
        prims.push_back(std::move(prim));
    }
    std::vector<int> order(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) order[i] = static_cast<int>(i);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < group.size(); ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (keys[j] == keys[i]) { duplicate = true; break; }
        }
        if (!duplicate) sets[i] = zeros::critical_line_zeros(prims[i], T, st);
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (keys[j] == keys[i]) {
                sets[i] = sets[j];
                break;
            }
        }
        sets[i].modulus = q;
        sets[i].char_index = static_cast<int>(i);
    }
    return sets;
}

double explicit_formula_theta(double x, double T, int64_t q, int64_t a,
                              const std::vector<zeros::ZeroSet>& zero_sets,
                              const zeros::ExceptionalZero& exc) {
    if (!(x >= 2.0 && T >= 2.0)) throw std::domain_error("explicit_formula_theta: x, T >= 2");
    auto group = chars::character_group(q);
    if (zero_sets.size() != group.size())
        throw std::invalid_argument("explicit_formula_theta: need one zero set per character");
    double phi = static_cast<double>(chars::euler_phi(q));
    double lx = std::log(x);
    std::complex<double> zsum{0.0, 0.0};
    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& zs = zero_sets[i];
        if (zs.scanned_to < T - 1.0)
            throw stale_input_error("explicit_formula_theta: zero set not complete to height T");
        const auto& chi = group.character(i);
        auto wa = std::conj(chi.evaluate(a));
        if (wa == std::complex<double>(0.0, 0.0)) continue;
        std::complex<double> inner{0.0, 0.0};
        for (const auto& z : zs.records) {
            if (std::abs(z.gamma) > T) continue;
            if (exc.exists && static_cast<int>(i) == exc.chi1_index && q == exc.modulus &&
                z.gamma == 0.0 && z.beta == exc.beta1)
                continue; // the primed sum excludes rho = beta_1
            std::complex<double> rho{z.beta, z.gamma};
            // x^rho / rho = x^beta e^{i gamma log x} / rho
            std::complex<double> xrho = std::pow(x, z.beta) *
                                        std::complex<double>(std::cos(z.gamma * lx), std::sin(z.gamma * lx));
            inner += xrho / rho;
            if (std::abs(z.gamma) < 1.0) inner -= 1.0 / rho;
        }
        zsum += wa * inner;
    }
    double value = x / phi - zsum.real() / phi;
    if (exc.exists) {
        auto group_e = chars::character_group(exc.modulus);
        auto chi1 = group_e.character(static_cast<std::size_t>(exc.chi1_index));
        double chi1_a = chi1.evaluate(a).real();
        value -= chi1_a / phi * std::pow(x, exc.beta1) / exc.beta1;
    }
    return value;
}

PredictionReport predict_and_compare(double x, double h, int64_t q, int64_t a, double eps,
                                     const ZeroFreeRegionProfile& profile, double C,
                                     const zeros::ExceptionalZero* injected,
                                     const primes::SieveConfig& sieve) {
    int64_t ar = ((a % q) + q) % q;
    if (gcd64(ar, q) != 1) throw std::invalid_argument("predict_and_compare: gcd(a, q) != 1");
    PredictionReport rep;
    rep.query = primes::ThetaQuery{x, h, q, ar};

    zeros::ExceptionalZero exc;
    if (injected) {
        if (injected->exists && injected->modulus != q)
            throw std::invalid_argument("predict_and_compare: injected zero has a different modulus");
        exc = *injected;
    } else if (q >= 3) {
        exc = zeros::exceptional_zero_search(q);
    }
    rep.exceptional_exists = exc.exists;
    rep.beta1 = exc.exists ? exc.beta1 : 0.0;
    rep.theta_exponent = theta_constant(exc.exists);

    double phi = static_cast<double>(chars::euler_phi(q));
    rep.primary_term = h / phi;
    if (exc.exists) {
        auto group = chars::character_group(exc.modulus);
        auto chi1 = group.character(static_cast<std::size_t>(exc.chi1_index));
        double chi1_a = chi1.evaluate(ar).real();
        rep.secondary_term = -chi1_a * power_difference(x, h, exc.beta1) / (exc.beta1 * phi);
    } else {
        rep.secondary_term = 0.0;
    }
    rep.predicted = rep.primary_term + rep.secondary_term; // identity by construction
    rep.lambda = rep.predicted * phi / h;

    rep.range_condition_met =
        rep.predicted >= std::pow(x, rep.theta_exponent.value() + eps);

    rep.actual = primes::theta_short_interval(rep.query, sieve);
    rep.relative_error = rep.predicted > 0.0 ? std::abs(1.0 - rep.actual / rep.predicted) : 0.0;

    EnvelopeFlavor flavor = EnvelopeFlavor::VK;
    double beta1 = 0.0;
    if (profile.kind == ZfrKind::IWANIEC) flavor = EnvelopeFlavor::POWERFUL;
    if (profile.kind == ZfrKind::DH) {
        flavor = EnvelopeFlavor::GALLAGHER;
        beta1 = exc.exists ? exc.beta1 : profile.beta1;
    }
    rep.envelope = error_envelope(x, h, q, C, flavor, beta1);
    rep.implied_constant_ratio = rep.envelope > 0.0 ? rep.relative_error / rep.envelope : 0.0;
    return rep;
}

BrunTitchmarshAudit brun_titchmarsh_audit(double x, double h, int64_t q, double delta,
                                          const primes::SieveConfig& sieve) {
    if (delta <= 0.0) throw std::invalid_argument("brun_titchmarsh_audit: delta must be positive");
    BrunTitchmarshAudit audit;
    audit.bound_no_exceptional = 1.0 + delta;
    audit.bound_exceptional = 2.0 + delta;
    double phi = static_cast<double>(chars::euler_phi(q));
    // one sieve pass over the interval, all classes at once
    int64_t lo = static_cast<int64_t>(std::floor(x - h)) + 1;
    int64_t hi = static_cast<int64_t>(std::floor(x));
    std::vector<KahanSum> sums(static_cast<std::size_t>(q));
    primes::for_each_prime(std::max<int64_t>(lo, 2), hi, sieve, [&](int64_t p) {
        sums[static_cast<std::size_t>(p % q)].add(std::log(static_cast<double>(p)));
    });
    audit.min_ratio = 1e300;
    for (int64_t r = 0; r < q; ++r) {
        if (gcd64(r, q) != 1) continue;
        double ratio = phi * sums[static_cast<std::size_t>(r)].value() / h;
        if (ratio > audit.max_ratio) {
            audit.max_ratio = ratio;
            audit.argmax_class = r;
        }
        audit.min_ratio = std::min(audit.min_ratio, ratio);
    }
    audit.pass = audit.max_ratio <= audit.bound_no_exceptional;
    return audit;
}

} // namespace antk::pnt
