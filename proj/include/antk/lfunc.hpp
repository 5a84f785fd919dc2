#ifndef ANTK_LFUNC_HPP
#define ANTK_LFUNC_HPP

#include <complex>

#include "antk/chars.hpp"
#include "antk/common.hpp"

namespace antk::lfunc {

using Complex = std::complex<double>;

struct EvalSettings {
    int euler_maclaurin_terms = 50;
    int bernoulli_order = 30;
    double target_abs_error = 1e-10;
    double t_cap = 200.0;
    int64_t q_cap = 200;
    bool compensated_sums = true; // error-free-transformation accumulation of the main sum

    void validate() const {
        if (t_cap <= 0 || q_cap <= 0) throw std::invalid_argument("EvalSettings: caps must be positive");
        if (target_abs_error < 1e-14) throw std::invalid_argument("EvalSettings: target below 1e-14");
    }
};

// Complex gamma via the Lanczos rational approximation (double precision set).
Complex gamma_complex(Complex z);

// Euler-Maclaurin Hurwitz zeta(s, a), a in (0, 1], s != 1.
Complex hurwitz_zeta(Complex s, double a, const EvalSettings& st = {});
double hurwitz_zeta_real(double s, double a, const EvalSettings& st = {});

// zeta(s, a) - 1/(s-1): entire in s, usable through s = 1.
Complex hurwitz_zeta_star(Complex s, double a, const EvalSettings& st = {});

// L(s, chi); the trivial character goes through zeta(s) * prod_{p|q} (1 - p^{-s}).
Complex l_value(Complex s, const chars::DirichletCharacter& chi, const EvalSettings& st = {});
double l_value_real(double s, const chars::DirichletCharacter& chi, const EvalSettings& st = {});

// Lambda(s, chi) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), chi primitive.
Complex completed_l(Complex s, const chars::DirichletCharacter& chi, const EvalSettings& st = {});

// epsilon(chi) = tau(chi) / (i^a sqrt(q))
Complex root_number(const chars::DirichletCharacter& chi);

// |Lambda(s, chi) - eps(chi) Lambda(1-s, conj chi)|
double functional_equation_residual(Complex s, const chars::DirichletCharacter& chi,
                                    const EvalSettings& st = {});

// Real-valued rotation of Lambda on the critical line; zeros of Z are the
// on-line zeros of L.  The evaluator caches the root number and conjugate
// data so scans do not recompute Gauss sums.
class HardyEvaluator {
public:
    HardyEvaluator(const chars::DirichletCharacter& chi, const EvalSettings& st = {});
    double operator()(double t) const;
    const chars::DirichletCharacter& character() const { return chi_; }

private:
    chars::DirichletCharacter chi_;
    EvalSettings st_;
    Complex rotation_;
};

double hardy_z(double t, const chars::DirichletCharacter& chi, const EvalSettings& st = {});

// sum_n Lambda(n) chi(n) (log n)^k / k! / n^s  =  (-1)^{k+1}/k! (L'/L)^{(k)}(s, chi),
// for Re s >= 1 + 1e-3 and 0 <= k <= 4.
Complex log_derivative(Complex s, const chars::DirichletCharacter& chi, int k = 0,
                       const EvalSettings& st = {});

} // namespace antk::lfunc

#endif
