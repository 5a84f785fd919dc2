#include "antk/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antk/jet.hpp"

namespace antk::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k}/(2k)! for k = 1..40
constexpr double kB2kFact[41] = {
    0.0,
    0.0833333333333333333,
    -0.00138888888888888889,
    0.0000330687830687830688,
    -8.26719576719576720e-7,
    2.08767569878680990e-8,
    -5.28419013868749318e-10,
    1.33825365306846788e-11,
    -3.38968029632258287e-13,
    8.58606205627784456e-15,
    -2.17486869855806187e-16,
    5.50900282836022952e-18,
    -1.39544646858125233e-19,
    3.53470703962946747e-21,
    -8.95351742703754685e-23,
    2.26795245233768306e-24,
    -5.74479066887220245e-26,
    1.45517247561486490e-27,
    -3.68599494066531018e-29,
    9.33673425709504467e-31,
    -2.36502241570062993e-32,
    5.99067176248213430e-34,
    -1.51745488446829026e-35,
    3.84375812545418823e-37,
    -9.73635307264669104e-39,
    2.46624704420068096e-40,
    -6.24707674182074369e-42,
    1.58240302446449143e-43,
    -4.00827368594893597e-45,
    1.01530758555695563e-46,
    -2.57180415824187175e-48,
    6.51445603523381493e-50,
    -1.65013099068965246e-51,
    4.17983062853947589e-53,
    -1.05876346677029088e-54,
    2.68187919126077067e-56,
    -6.79327935110742121e-58,
    1.72075776166814049e-59,
    -4.35873032934889384e-61,
    1.10407929036846668e-62,
    -2.79666551337813451e-64,
};

// lanczos13m53 rational coefficients (g = 6.024680040776729583740234375)
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};
constexpr double kLanczosDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

Complex lanczos_sum(Complex z) {
    if (std::abs(z) <= 1.0) {
        Complex num = 0.0, den = 0.0;
        for (int i = 12; i >= 0; --i) {
            num = num * z + kLanczosNum[i];
            den = den * z + kLanczosDen[i];
        }
        return num / den;
    }
    Complex w = 1.0 / z; // evaluate in 1/z for large |z|
    Complex num = 0.0, den = 0.0;
    for (int i = 0; i < 13; ++i) {
        num = num * w + kLanczosNum[i];
        den = den * w + kLanczosDen[i];
    }
    return num / den;
}

// ---- scalar abstraction: double, complex, or Jet ----

inline double value_part(double x) { return x; }
inline Complex value_part(Complex x) { return x; }
inline Complex value_part(const Jet& x) { return x.value(); }

inline double power_neg(double base, double s) { return std::pow(base, -s); }
inline Complex power_neg(double base, Complex s) { return std::exp(-s * std::log(base)); }
inline Jet power_neg(double base, const Jet& s) { return jet_exp(s * Complex(-std::log(base), 0.0)); }

inline double reciprocal_of(double x) { return 1.0 / x; }
inline Complex reciprocal_of(Complex x) { return 1.0 / x; }
inline Jet reciprocal_of(const Jet& x) { return reciprocal(x); }

inline double mag(double x) { return std::abs(x); }
inline double mag(Complex x) { return std::abs(x); }
inline double mag(const Jet& x) { return std::abs(x.value()); }

inline double scale(double x, double k) { return x * k; }
inline Complex scale(Complex x, double k) { return x * k; }
inline Jet scale(const Jet& x, double k) { return x * Complex(k, 0.0); }

inline double shift(double x, double k) { return x + k; }
inline Complex shift(Complex x, double k) { return x + k; }
inline Jet shift(const Jet& x, double k) { return x + Complex(k, 0.0); }

inline double exp_of(double x) { return std::exp(x); }
inline Complex exp_of(Complex x) { return std::exp(x); }
inline Jet exp_of(const Jet& x) { return jet_exp(x); }

// (e^u - 1)/u, entire; series branch avoids the small-|u| cancellation
template <typename S>
S expm1_over(const S& u) {
    if constexpr (!std::is_same_v<S, Jet>) {
        if (mag(u) < 0.25) {
            S term = u; // u^k/(k+1)! terms, k from 1
            S acc = shift(scale(u, 0.5), 1.0);
            double fact = 2.0;
            for (int k = 2; k <= 16; ++k) {
                term = term * u;
                fact *= static_cast<double>(k + 1);
                acc = acc + scale(term, 1.0 / fact);
            }
            return acc;
        }
    }
    return (shift(exp_of(u), -1.0)) * reciprocal_of(u);
}

// compensated accumulation for the complex main sum
struct KahanComplex {
    KahanSum re, im;
    void add(Complex x) {
        re.add(x.real());
        im.add(x.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

// subtract_pole: evaluate zeta(s, a) - 1/(s-1), which is entire; the pole
// term cancels exactly across a nontrivial character sum.
template <typename S>
S hurwitz_core(const S& s, double a, const EvalSettings& st, bool subtract_pole = false) {
    st.validate();
    Complex s0 = value_part(s);
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("hurwitz_zeta: a must be in (0, 1]");
    if (!subtract_pole && std::abs(s0 - Complex(1.0, 0.0)) < 1e-8)
        throw pole_error("hurwitz_zeta: s too close to the pole at 1");
    if (std::abs(s0.imag()) > st.t_cap + 15.0) throw resource_error("hurwitz_zeta: |Im s| beyond t_cap");

    int K = std::clamp(st.bernoulli_order, 4, 39);
    int N = std::max(st.euler_maclaurin_terms, static_cast<int>(0.6 * std::abs(s0.imag())) + 8);
    double internal_target = st.target_abs_error * 0.01;

    for (int attempt = 0;; ++attempt) {
        S val{};
        if (st.compensated_sums) {
            if constexpr (std::is_same_v<S, Complex>) {
                KahanComplex acc;
                for (int n = 0; n < N; ++n) acc.add(power_neg(n + a, s));
                val = acc.value();
            } else if constexpr (std::is_same_v<S, double>) {
                KahanSum acc;
                for (int n = 0; n < N; ++n) acc.add(power_neg(n + a, s));
                val = acc.value();
            } else {
                for (int n = 0; n < N; ++n) val = val + power_neg(n + a, s);
            }
        } else {
            for (int n = 0; n < N; ++n) val = val + power_neg(n + a, s);
        }

        double Na = N + a;
        S w = power_neg(Na, s);                          // (N+a)^{-s}
        if (subtract_pole) {
            // (N+a)^{1-s}/(s-1) - 1/(s-1) = -log(N+a) g((1-s) log(N+a))
            double L = std::log(Na);
            S u = scale(shift(scale(s, -1.0), 1.0), L); // (1-s) log(N+a)
            val = val + scale(expm1_over(u), -L);
        } else {
            val = val + scale(w * reciprocal_of(shift(s, -1.0)), Na);
        }
        val = val + scale(w, 0.5);

        S poch = s;                                      // (s)_{2k-1}, k = 1
        double r2 = 1.0 / (Na * Na);
        S wk = scale(w, 1.0 / Na);                       // (N+a)^{-s-2k+1}, k = 1
        for (int k = 1; k <= K; ++k) {
            val = val + scale(poch * wk, kB2kFact[k]);
            poch = poch * shift(s, 2.0 * k - 1.0) * shift(s, 2.0 * k);
            wk = scale(wk, r2);
        }
        // next-term error estimate
        double denom = std::max(s0.real() + 2.0 * K + 1.0, 1.0);
        double est = std::abs(kB2kFact[K + 1]) * mag(poch) * mag(wk) *
                     (1.0 + std::abs(s0 + Complex(2.0 * K + 1.0, 0.0)) / denom);
        if (est <= internal_target || attempt >= 3) {
            if (est > st.target_abs_error)
                throw resource_error("hurwitz_zeta: cannot meet target accuracy within term caps");
            return val;
        }
        N *= 2;
        if (N > 200000) throw resource_error("hurwitz_zeta: term count exploded");
    }
}

std::vector<int64_t> prime_divisors(int64_t q) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            ps.push_back(p);
            while (q % p == 0) q /= p;
        }
    }
    if (q > 1) ps.push_back(q);
    return ps;
}

template <typename S>
S l_value_core(const S& s, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    int64_t q = chi.modulus();
    if (q > st.q_cap + 20) throw resource_error("l_value: modulus beyond q_cap");
    if (chi.is_trivial()) {
        S z = hurwitz_core(s, 1.0, st);
        for (int64_t p : prime_divisors(q)) {
            z = z * shift(scale(power_neg(static_cast<double>(p), s), -1.0), 1.0); // 1 - p^{-s}
        }
        return z;
    }
    // q^{-s} sum_a chi(a) zeta(s, a/q); the character sum kills the Hurwitz
    // pole, so each term is evaluated in the pole-subtracted form and the
    // result is analytic through s = 1
    S acc{};
    for (int64_t a = 1; a <= q; ++a) {
        auto v = chi.evaluate(a);
        if (v == Complex(0.0, 0.0)) continue;
        S h = hurwitz_core(s, static_cast<double>(a) / static_cast<double>(q), st, true);
        if constexpr (std::is_same_v<S, double>) {
            acc = acc + h * v.real();
        } else {
            acc = acc + h * v;
        }
    }
    return acc * power_neg(static_cast<double>(q), s);
}

} // namespace

Complex gamma_complex(Complex z) {
    if (z.real() < 0.5) {
        // reflection
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    }
    Complex zgh = z + (kLanczosG - 0.5);
    return lanczos_sum(z) * std::pow(zgh, z - 0.5) * std::exp(-zgh);
}

Complex hurwitz_zeta(Complex s, double a, const EvalSettings& st) {
    return hurwitz_core<Complex>(s, a, st);
}

double hurwitz_zeta_real(double s, double a, const EvalSettings& st) {
    return hurwitz_core<double>(s, a, st);
}

Complex hurwitz_zeta_star(Complex s, double a, const EvalSettings& st) {
    return hurwitz_core<Complex>(s, a, st, true);
}

Complex l_value(Complex s, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    return l_value_core<Complex>(s, chi, st);
}

double l_value_real(double s, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    if (!chi.is_real()) throw std::invalid_argument("l_value_real: character must be real");
    return l_value_core<double>(s, chi, st);
}

Complex completed_l(Complex s, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    if (!chi.is_primitive())
        throw std::invalid_argument("completed_l: character must be primitive");
    double q = static_cast<double>(chi.modulus());
    double par = static_cast<double>(chi.parity());
    Complex half = (s + par) * 0.5;
    return std::pow(Complex(q / kPi, 0.0), half) * gamma_complex(half) * l_value(s, chi, st);
}

Complex root_number(const chars::DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw std::invalid_argument("root_number: character must be primitive");
    int64_t q = chi.modulus();
    Complex tau = chars::gauss_sum(chi);
    Complex ia = chi.parity() == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    return tau / (ia * std::sqrt(static_cast<double>(q)));
}

double functional_equation_residual(Complex s, const chars::DirichletCharacter& chi,
                                    const EvalSettings& st) {
    Complex lhs = completed_l(s, chi, st);
    auto conj_chi = chi.conjugate();
    Complex rhs = root_number(chi) * completed_l(1.0 - s, conj_chi, st);
    return std::abs(lhs - rhs);
}

HardyEvaluator::HardyEvaluator(const chars::DirichletCharacter& chi, const EvalSettings& st)
    : chi_(chi), st_(st) {
    if (!chi.is_primitive())
        throw std::invalid_argument("hardy_z: character must be primitive");
    Complex eps = root_number(chi);
    rotation_ = 1.0 / std::sqrt(eps); // any square root works; fixed branch for determinism
}

double HardyEvaluator::operator()(double t) const {
    Complex lam = completed_l(Complex(0.5, t), chi_, st_);
    Complex z = rotation_ * lam;
    double tol = 1e-8 * std::max(1.0, std::abs(lam));
    if (std::abs(z.imag()) > tol)
        throw std::runtime_error("hardy_z: rotation failed to produce a real value");
    return z.real();
}

double hardy_z(double t, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    return HardyEvaluator(chi, st)(t);
}

Complex log_derivative(Complex s, const chars::DirichletCharacter& chi, int k,
                       const EvalSettings& st) {
    if (s.real() < 1.0 + 1e-3) throw std::domain_error("log_derivative: need Re s >= 1 + 1e-3");
    if (k < 0 || k > 4) throw std::invalid_argument("log_derivative: order must be in [0, 4]");
    Jet js = Jet::variable(s);
    Jet L = l_value_core<Jet>(js, chi, st);
    Jet ratio = jet_derivative(L) / L; // L'/L as a truncated Taylor series
    double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^{k+1}
    // (-1)^{k+1}/k! (L'/L)^{(k)} = (-1)^{k+1} [e^k](L'/L)
    return sign * ratio.c[static_cast<std::size_t>(k)];
}

} // namespace antk::lfunc
