#include "antk/aconst.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace antk::aconst {

namespace {

constexpr double kE = std::numbers::e;

// log of the objective and of the contraction factor, in long double: the
// paper's margin 1 - contraction ~ 1.6e-14 is not resolvable in double.
long double log_objective_l(long double alpha, long double A, long double B) {
    return A * (std::log(4.0L) + 1.0L + std::log(alpha) + alpha * std::log1p(B));
}

long double log_contraction_l(long double alpha, long double A, long double B) {
    return std::log(4.0L) + 1.0L + std::log(alpha) +
           alpha * (std::log1p(B) - 0.5L * std::log(A * A + B * B));
}

double objective_penalized(const std::array<double, 3>& p) {
    double alpha = p[0], A = p[1], B = p[2];
    if (!(alpha > 1.0) || !(A > 1.0) || B < 0.0) return 1e12;
    long double lc = log_contraction_l(alpha, A, B);
    long double lo = log_objective_l(alpha, A, B);
    if (lc >= 0.0L) return 1e9 + static_cast<double>(lc) * 1e6; // infeasible wall
    return static_cast<double>(std::exp(lo));
}

// plain Nelder-Mead on R^3
struct NmOutcome {
    std::array<double, 3> x;
    double f;
    int iterations;
};

NmOutcome nelder_mead(std::function<double(const std::array<double, 3>&)> f,
                      std::array<double, 3> start, double scale, int max_iter) {
    constexpr int n = 3;
    std::array<std::array<double, 3>, n + 1> simplex;
    std::array<double, n + 1> fv;
    simplex[0] = start;
    for (int i = 1; i <= n; ++i) {
        simplex[i] = start;
        simplex[i][i - 1] += scale;
    }
    for (int i = 0; i <= n; ++i) fv[i] = f(simplex[i]);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        // order
        std::array<int, n + 1> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        std::array<std::array<double, 3>, n + 1> s2;
        std::array<double, n + 1> f2;
        for (int i = 0; i <= n; ++i) {
            s2[i] = simplex[idx[i]];
            f2[i] = fv[idx[i]];
        }
        simplex = s2;
        fv = f2;
        double spread = std::abs(fv[n] - fv[0]);
        double size = 0.0;
        for (int i = 0; i < n; ++i) size = std::max(size, std::abs(simplex[n][i] - simplex[0][i]));
        if (spread < 1e-13 * (1.0 + std::abs(fv[0])) && size < 1e-12) break;

        std::array<double, 3> centroid{0, 0, 0};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 3; ++j) centroid[j] += simplex[i][j] / n;
        auto blend = [&](double c) {
            std::array<double, 3> p;
            for (int j = 0; j < 3; ++j) p[j] = centroid[j] + c * (centroid[j] - simplex[n][j]);
            return p;
        };
        auto xr = blend(1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = blend(2.0);
            double fe = f(xe);
            if (fe < fr) {
                simplex[n] = xe;
                fv[n] = fe;
            } else {
                simplex[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = xr;
            fv[n] = fr;
        } else {
            auto xc = blend(fr < fv[n] ? 0.5 : -0.5);
            double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = xc;
                fv[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < 3; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    return {simplex[best], fv[best], iter};
}

// golden-section minimization; long double so the flat bottom of the
// objective still orders correctly near the minimizer
long double golden_min(std::function<long double(long double)> f, long double lo, long double hi,
                       long double tol) {
    const long double gr = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double c = hi - gr * (hi - lo);
    long double d = lo + gr * (hi - lo);
    long double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5L * (lo + hi);
}

} // namespace

PowerSumResult power_sum_min_k(const PowerSumInstance& inst) {
    if (inst.points.empty()) throw std::domain_error("power_sum_min_k: empty point set");
    if (inst.M < 0) throw std::domain_error("power_sum_min_k: M must be >= 0");
    int N = static_cast<int>(inst.points.size());
    double z1 = 0.0;
    for (const auto& z : inst.points) z1 = std::max(z1, std::abs(z));
    if (z1 == 0.0) throw std::domain_error("power_sum_min_k: all points are zero");

    // running powers z^k, advanced k by k
    std::vector<std::complex<double>> pw(inst.points.size());
    for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = std::pow(inst.points[i], inst.M);

    PowerSumResult best;
    double best_ratio = -1.0;
    double z1k = std::pow(z1, inst.M);
    for (int k = inst.M + 1; k <= inst.M + N; ++k) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = 0; i < pw.size(); ++i) {
            pw[i] *= inst.points[i];
            s += pw[i];
        }
        z1k *= z1;
        double ratio = std::abs(s) / z1k; // the quantity the bound controls
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best.k = k;
            best.value = std::abs(s);
            best.bound = power_sum_bound(N, inst.M) * z1k;
        }
    }
    return best;
}

double power_sum_bound(int N, int M) {
    if (N < 1 || M < 0) throw std::domain_error("power_sum_bound: need N >= 1, M >= 0");
    return 1.007 * std::pow(static_cast<double>(N) / (4.0 * kE * (M + N)), N);
}

OptimizeResult optimize_constants() {
    // multistart Nelder-Mead over (alpha, A, B); starts run in parallel and
    // the winner is picked in start order, so the result is deterministic
    std::vector<std::array<double, 3>> starts;
    for (double a0 : {5.0, 15.0, 26.0, 40.0})
        for (double A0 : {1.05, 1.3, 2.0})
            for (double B0 : {0.0, 0.01}) starts.push_back({a0, A0, B0});
    std::vector<NmOutcome> outcomes(starts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < starts.size(); ++i) {
        outcomes[i] = nelder_mead(objective_penalized, starts[i], 0.5, 4000);
    }
    NmOutcome best{{0, 0, 0}, 1e18, 0};
    int total_iter = 0;
    for (const auto& out : outcomes) {
        total_iter += out.iterations;
        if (out.f < best.f) best = out;
    }

    OptimizeResult res;
    res.nelder_mead_iterations = total_iter;
    double alpha = best.x[0], A = best.x[1], B = std::max(best.x[2], 0.0);
    res.b_boundary_active = B < 1e-4;

    if (res.b_boundary_active) {
        // On the active boundary B = 0, contraction = 1 forces
        // A = (4 e alpha)^{1/alpha}; polish the remaining one-dimensional
        // profile g(alpha) = (4 e alpha)^{(4 e alpha)^{1/alpha}}.
        auto g = [](long double a) {
            long double l4ea = std::log(4.0L) + 1.0L + std::log(a);
            long double Aw = std::exp(l4ea / a);
            return Aw * l4ea; // log objective, same minimizer
        };
        alpha = static_cast<double>(golden_min(g, 20.0L, 30.0L, 1e-13L));
        A = std::exp((std::log(4.0) + 1.0 + std::log(alpha)) / alpha);
        B = 0.0;
        res.b_boundary_active = true;
    }
    res.alpha = alpha;
    res.A = A;
    res.B = B;
    res.objective = static_cast<double>(std::exp(log_objective_l(alpha, A, B)));
    res.contraction = static_cast<double>(std::exp(log_contraction_l(alpha, A, B)));
    res.contraction_boundary_active = res.contraction > 1.0 - 1e-9;
    return res;
}

double alpha0_root() {
    auto f = [](double a) {
        double la = std::log(a);
        return a - la * la - (1.0 + std::log(16.0)) * la - (std::log(4.0) + std::log(4.0) * std::log(4.0));
    };
    double lo = 20.0, hi = 30.0;
    double flo = f(lo);
    if (flo >= 0.0) throw std::logic_error("alpha0_root: bracket invalid at 20");
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

ChainAudit verify_constant_chain(const ConstantChain& chain) {
    if (!(chain.alpha > 1.0 && chain.A > 1.0 && chain.B >= 0.0))
        throw std::invalid_argument("verify_constant_chain: invariants A > 1, B >= 0, alpha > 1");
    ChainAudit audit;
    audit.K = chain.K;
    long double alpha = chain.alpha, A = chain.A, B = chain.B;

    long double lobj = log_objective_l(alpha, A, B);
    long double lcon = log_contraction_l(alpha, A, B);
    audit.objective = static_cast<double>(std::exp(lobj));
    audit.contraction = static_cast<double>(std::exp(lcon));
    audit.one_minus_contraction = static_cast<double>(-std::expm1(lcon));

    const long double xi = 1.0L + 1e-7L;
    audit.exponent_recomputed = static_cast<double>(16.0L * lobj * xi);
    audit.base_recomputed = static_cast<double>(std::exp(lobj / ((alpha - 1.0L) * A)));

    const double paper_objective = 1110.817286401682;
    const double paper_exponent = 112.20563265056215;
    const double paper_base_exponent = 112.20562143;
    const double paper_base = 1.250015191;

    double phi_term = std::max(1.0 / 73.4, chain.phi);
    audit.final_exponent = paper_exponent * phi_term;
    audit.slack_75_4 = 75.0 / 4.0 - audit.final_exponent;

    auto push = [&](const char* name, bool pass, double lhs, double rhs) {
        audit.checks.push_back({name, pass, lhs, rhs, std::abs(lhs - rhs)});
    };

    // asserted identities (tight tolerances on the paper constants)
    push("objective matches 1110.817286401682", std::abs(audit.objective - paper_objective) < 1e-6,
         audit.objective, paper_objective);
    push("contraction < 1 - 1e-14", audit.one_minus_contraction > 1e-14,
         audit.one_minus_contraction, 1e-14);
    push("paper exponent = base exponent * (1 + 1e-7)",
         std::abs(paper_base_exponent * (1.0 + 1e-7) - paper_exponent) < 1e-10,
         paper_base_exponent * (1.0 + 1e-7), paper_exponent);
    // the 75/4 comparison is only claimed at the Petrow-Young phi
    bool phi_is_py = chain.phi > 1.0 / 6.0 + 1e-8 && chain.phi < 1.0 / 6.0 + 1e-6;
    push("final exponent below 75/4 at phi = 1/6 + 1e-7",
         !phi_is_py || (audit.slack_75_4 > 0.049 - 1e-3 && audit.slack_75_4 < 0.049 + 1e-3),
         audit.final_exponent, 75.0 / 4.0);
    // theta mappings of the density exponents (exact in integers)
    push("theta = 1 - 4/75 -> 71/75", 75 - 4 == 71, 1.0 - 4.0 / 75.0, 71.0 / 75.0);
    push("theta = 1 - 5/12 -> 7/12", 12 - 5 == 7, 1.0 - 5.0 / 12.0, 7.0 / 12.0);

    // reported gaps, not asserted: the paper's displayed constants involve a
    // rounded-up base 1.250015191 whose derivation is not spelled out
    push("gap: recomputed 16 ln(obj) xi vs paper exponent", true, audit.exponent_recomputed,
         paper_exponent);
    push("gap: recomputed obj^{1/((alpha-1)A)} vs 1.250015191", true, audit.base_recomputed,
         paper_base);

    audit.all_pass = std::all_of(audit.checks.begin(), audit.checks.end(),
                                 [](const ChainCheck& c) { return c.pass; });
    return audit;
}

std::pair<double, double> root_A0_A1(double B) {
    double A0 = 1.0 / (1.26 * kE);
    // A1 e^{1 - A1 B / 4} = 1/1.26: bisect g(A) = ln A + 1 - A B/4 + ln 1.26
    // on the decreasing branch A > 4/B
    auto g = [&](double lA) {
        double A = std::exp(lA);
        return lA + 1.0 - A * B / 4.0 + std::log(1.26);
    };
    double lo = std::log(4.0 / B), hi = std::log(4.0 / B) + 10.0;
    double flo = g(lo);
    while (g(hi) > 0.0) hi += 5.0;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        double fm = g(mid);
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return {A0, std::exp(0.5 * (lo + hi))};
}

JkDecayAudit jk_decay_check(int k, double B, double A0, double A1, int M, double eta) {
    if (M < 1) throw std::domain_error("jk_decay_check: M >= 1 required");
    if (!(k >= M && k <= 2 * M)) throw std::domain_error("jk_decay_check: k must lie in [M, 2M]");
    if (!(eta > 0.0 && eta < 0.5)) throw std::domain_error("jk_decay_check: eta out of range");
    JkDecayAudit audit;
    double lgk = std::lgamma(static_cast<double>(k) + 1.0);
    double l126 = std::log(1.26);
    // log j_k(eta log n) = -B u + k log u - log k!, with u = eta log n
    auto log_jk = [&](double u) { return -B * u + k * std::log(u) - lgk; };

    // low regime: u in (0, A0 M]; need log j_k <= -B u - k log 1.26
    audit.worst_low_margin = 1e300;
    bool low_ok = true;
    for (int i = 1; i <= 64; ++i) {
        double u = A0 * M * static_cast<double>(i) / 64.0;
        double lhs = log_jk(u);
        double rhs = -B * u - k * l126;
        audit.worst_low_margin = std::min(audit.worst_low_margin, rhs - lhs);
        if (lhs > rhs + 1e-12) low_ok = false;
    }
    audit.low_regime_ok = low_ok;

    // high regime: u in [A1 M, 16 A1 M]; log j_k <= -B u / 2 - k log 1.26
    audit.worst_high_margin = 1e300;
    bool high_ok = true;
    for (int i = 0; i <= 64; ++i) {
        double u = A1 * M * (1.0 + 15.0 * static_cast<double>(i) / 64.0);
        double lhs = log_jk(u);
        double rhs = -B * u / 2.0 - k * l126;
        audit.worst_high_margin = std::min(audit.worst_high_margin, rhs - lhs);
        if (lhs > rhs + 1e-12) high_ok = false;
    }
    audit.high_regime_ok = high_ok;
    return audit;
}

} // namespace antk::aconst
