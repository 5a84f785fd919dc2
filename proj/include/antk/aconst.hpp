#ifndef ANTK_ACONST_HPP
#define ANTK_ACONST_HPP

#include <complex>
#include <vector>

#include "antk/common.hpp"

namespace antk::aconst {

struct PowerSumInstance {
    std::vector<std::complex<double>> points; // |z_1| maximal after normalization
    int M = 0;
};

struct PowerSumResult {
    int k = 0;        // in [M+1, M+N]
    double value = 0.0; // |z_1^k + ... + z_N^k| at that k
    double bound = 0.0; // 1.007 (N/(4e(M+N)))^N |z_1|^k
};

struct OptimizeResult {
    double alpha = 0.0;
    double A = 0.0;
    double B = 0.0;
    double objective = 0.0;   // (4 e alpha (B+1)^alpha)^A
    double contraction = 0.0; // 4 e alpha ((B+1)/sqrt(A^2+B^2))^alpha
    bool b_boundary_active = false;
    bool contraction_boundary_active = false;
    int nelder_mead_iterations = 0;
};

struct ConstantChain {
    double alpha = 26.354133491747653;
    double A = 1.239475274727766;
    double B = 1e-16;
    double phi = 1.0 / 6.0 + 1e-7; // subconvexity exponent
    double K = 0.0;                // free parameter of the N-cap, surfaced only
};

struct ChainCheck {
    const char* name;
    bool pass;
    double lhs;
    double rhs;
    double residual;
};

struct ChainAudit {
    double objective = 0.0;
    double contraction = 0.0;
    double one_minus_contraction = 0.0; // computed in extended precision
    double exponent_recomputed = 0.0; // 16 ln(objective) xi
    double base_recomputed = 0.0;     // objective^{1/((alpha-1) A)}
    double final_exponent = 0.0;      // paper constant times max{1/73.4, phi}
    double slack_75_4 = 0.0;
    double K = 0.0;
    std::vector<ChainCheck> checks;
    bool all_pass = false;
};

struct JkDecayAudit {
    bool low_regime_ok = false;  // n <= N0 = exp(A0 M / eta)
    bool high_regime_ok = false; // n >= N1 = exp(A1 M / eta)
    double worst_low_margin = 0.0;  // min over samples of rhs - lhs in log space
    double worst_high_margin = 0.0;
};

// The k in [M+1, M+N] maximizing the normalized power sum |S_k| / |z_1|^k,
// the quantity the lower bound controls.
PowerSumResult power_sum_min_k(const PowerSumInstance& inst);

double power_sum_bound(int N, int M);

// Minimize (4 e alpha (B+1)^alpha)^A over alpha > 1, A > 1, B >= 0 subject to
// 4 e alpha ((B+1)/sqrt(A^2+B^2))^alpha < 1.  Nelder-Mead multistart with a
// feasibility penalty, then a boundary polish once B = 0 is active.
OptimizeResult optimize_constants();

// Root of a - (ln a)^2 - (1 + ln 16) ln a = ln 4 + (ln 4)^2 on [20, 30].
double alpha0_root();

ChainAudit verify_constant_chain(const ConstantChain& chain);

// A0 = 1/(1.26 e) exactly; A1 solves A1 e^{1 - A1 B / 4} = 1/1.26 (large root).
std::pair<double, double> root_A0_A1(double B = 1e-16);

// j_k(u) = e^{-Bu} u^k / k!; verifies the two decay displays in log space.
JkDecayAudit jk_decay_check(int k, double B, double A0, double A1, int M, double eta);

} // namespace antk::aconst

#endif
