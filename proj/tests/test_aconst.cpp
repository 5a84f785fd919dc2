#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "antk/aconst.hpp"

using namespace antk;
using namespace antk::aconst;
using std::complex;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("power sum bound values") {
    CHECK(power_sum_bound(1, 0) == doctest::Approx(1.007 / (4.0 * kE)).epsilon(1e-15));
    CHECK(power_sum_bound(2, 0) == doctest::Approx(1.007 / ((4.0 * kE) * (4.0 * kE))).epsilon(1e-15));
    CHECK(power_sum_bound(3, 6) ==
          doctest::Approx(1.007 * std::pow(3.0 / (36.0 * kE), 3)).epsilon(1e-14));
    CHECK_THROWS_AS(power_sum_bound(0, 0), std::domain_error);
}

TEST_CASE("power sum single point and pair") {
    PowerSumInstance one;
    one.points = {complex<double>(0.3, 0.4)};
    one.M = 0;
    auto r = power_sum_min_k(one);
    CHECK(r.k == 1);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.value >= r.bound);

    PowerSumInstance pair;
    pair.points = {complex<double>(1.0, 0.0), complex<double>(-1.0, 0.0)};
    pair.M = 0;
    auto r2 = power_sum_min_k(pair);
    CHECK(r2.k == 2);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r2.bound == doctest::Approx(1.007 * std::pow(2.0 / (8.0 * kE), 2)).epsilon(1e-12));

    PowerSumInstance empty;
    CHECK_THROWS_AS(power_sum_min_k(empty), std::domain_error);
}

TEST_CASE("power sum bound on random instances") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> uu(-1.0, 1.0);
    std::uniform_int_distribution<int> un(1, 4), um(0, 5);
    double min_ratio = 1e300;
    for (int i = 0; i < 4000; ++i) { // the full 1e4-instance sweep runs in verify
        PowerSumInstance inst;
        int n = un(rng);
        inst.M = um(rng);
        for (int j = 0; j < n; ++j) {
            double re = uu(rng), im = uu(rng);
            complex<double> z{re, im};
            if (std::abs(z) > 1.0) z /= std::abs(z) * 1.0000001;
            inst.points.push_back(z);
        }
        auto r = power_sum_min_k(inst);
        CHECK(r.k >= inst.M + 1);
        CHECK(r.k <= inst.M + n);
        CHECK(r.value >= r.bound);
        if (r.bound > 0.0) min_ratio = std::min(min_ratio, r.value / r.bound);
    }
    CHECK(min_ratio >= 1.0); // Makai sharpness probe: O(1), never below 1
}

TEST_CASE("alpha0 root") {
    double a0 = alpha0_root();
    CHECK(a0 == doctest::Approx(26.354133491747653).epsilon(1e-10));
    double la = std::log(a0);
    double residual = a0 - la * la - (1.0 + std::log(16.0)) * la -
                      (std::log(4.0) + std::log(4.0) * std::log(4.0));
    CHECK(std::abs(residual) < 1e-10);
    // the bracketing function is increasing on [20, 30]
    auto f = [](double a) {
        double l = std::log(a);
        return a - l * l - (1.0 + std::log(16.0)) * l;
    };
    double prev = f(20.0);
    for (double a = 21.0; a <= 30.0; a += 1.0) {
        CHECK(f(a) > prev);
        prev = f(a);
    }
}

TEST_CASE("constant optimization hits the footnote infimum") {
    auto res = optimize_constants();
    CHECK(std::abs(res.objective - 1110.817286401673) / 1110.817286401673 < 1e-6);
    CHECK(std::abs(res.alpha - 26.354133491747653) < 1e-6);
    CHECK(res.B == 0.0);
    CHECK(res.b_boundary_active);
    CHECK(res.contraction_boundary_active);
    CHECK(res.A == doctest::Approx(std::pow(4.0 * kE * res.alpha, 1.0 / res.alpha)).epsilon(1e-12));
    // agreement between the optimizer and the explicit root
    CHECK(std::abs(res.alpha - alpha0_root()) < 1e-6);
    // optimality sanity: infimum does not exceed the paper's feasible point
    CHECK(res.objective <= 1110.817286401682);
}

TEST_CASE("constant chain audit on the paper values") {
    ConstantChain chain; // defaults are the paper's constants
    auto audit = verify_constant_chain(chain);
    CHECK(audit.all_pass);
    CHECK(std::abs(audit.objective - 1110.817286401682) < 1e-6);
    CHECK(audit.contraction < 1.0 - 1e-14);
    CHECK(audit.contraction > 1.0 - 1e-13); // the margin really is ~1.6e-14
    CHECK(audit.final_exponent == doctest::Approx(18.70095).epsilon(1e-6));
    CHECK(audit.slack_75_4 == doctest::Approx(0.049).epsilon(0.02));
    // feasible-point objective sits just above the infimum
    CHECK(audit.objective >= 1110.817286401673);

    // reported gaps stay small but are not asserted to vanish
    for (const auto& c : audit.checks) {
        if (std::string(c.name).rfind("gap:", 0) == 0) {
            CHECK(std::abs(c.lhs - c.rhs) / std::abs(c.rhs) < 1e-6);
        }
    }

    // phi = 1/2 (convexity): no 75/4 claim, checks still pass
    ConstantChain convexity = chain;
    convexity.phi = 0.5;
    auto audit2 = verify_constant_chain(convexity);
    CHECK(audit2.all_pass);
    CHECK(audit2.final_exponent == doctest::Approx(112.20563265056215 * 0.5).epsilon(1e-12));
}

TEST_CASE("A0 and A1 roots") {
    auto [A0, A1] = root_A0_A1();
    CHECK(A0 == doctest::Approx(0.29196781045352565).epsilon(1e-14));
    CHECK(std::abs(A0 * kE - 1.0 / 1.26) < 1e-14);
    CHECK(A1 == doctest::Approx(1.729007640830688e18).epsilon(1e-9));
    // residual of the defining equation, in log space
    double resid = std::log(A1) + 1.0 - A1 * 1e-16 / 4.0 + std::log(1.26);
    CHECK(std::abs(resid) < 1e-9);
}

TEST_CASE("j_k decay checks") {
    auto [A0, A1] = root_A0_A1();
    for (int M : {1, 3, 8}) {
        for (int k : {M, (3 * M) / 2, 2 * M}) {
            auto audit = jk_decay_check(k, 1e-16, A0, A1, M, 0.1);
            CHECK(audit.low_regime_ok);
            CHECK(audit.high_regime_ok);
            CHECK(audit.worst_low_margin >= -1e-12);
            CHECK(audit.worst_high_margin >= -1e-12);
        }
    }
    // j_k(0) boundary values by the defining formula
    CHECK(std::exp(-1e-16 * 0.0) * std::pow(0.0, 0) / 1.0 == 1.0); // k = 0
    // for k >= 1 the u^k factor kills j_k at 0
    CHECK(0.0 * std::exp(-1e-16 * 0.0) == 0.0);
    CHECK_THROWS_AS(jk_decay_check(5, 1e-16, 0.29, 1.7e18, 1, 0.1), std::domain_error);
}
