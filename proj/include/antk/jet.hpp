#ifndef ANTK_JET_HPP
#define ANTK_JET_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace antk {

// Truncated Taylor scalar: value plus derivatives up to order kOrder at a
// point, i.e. arithmetic on c0 + c1 e + ... + cK e^K modulo e^{K+1}.
// Used to differentiate the Euler-Maclaurin evaluation with respect to s.
struct Jet {
    static constexpr std::size_t kOrder = 5; // keeps L'/L derivatives to order 4
    std::array<std::complex<double>, kOrder + 1> c{};

    Jet() = default;
    explicit Jet(std::complex<double> v) { c[0] = v; }
    static Jet variable(std::complex<double> v) {
        Jet j(v);
        j.c[1] = 1.0;
        return j;
    }
    std::complex<double> value() const { return c[0]; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i <= Jet::kOrder; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i <= Jet::kOrder; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline Jet operator-(const Jet& a) {
    Jet r;
    for (std::size_t i = 0; i <= Jet::kOrder; ++i) r.c[i] = -a.c[i];
    return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i <= Jet::kOrder; ++i) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j <= i; ++j) s += a.c[j] * b.c[i - j];
        r.c[i] = s;
    }
    return r;
}

inline Jet operator*(const Jet& a, std::complex<double> k) {
    Jet r;
    for (std::size_t i = 0; i <= Jet::kOrder; ++i) r.c[i] = a.c[i] * k;
    return r;
}

inline Jet operator*(std::complex<double> k, const Jet& a) { return a * k; }

inline Jet operator+(const Jet& a, std::complex<double> k) {
    Jet r = a;
    r.c[0] += k;
    return r;
}

inline Jet operator-(std::complex<double> k, const Jet& a) {
    Jet r = -a;
    r.c[0] += k;
    return r;
}

// 1 / a by power-series inversion (a.c[0] must be nonzero).
inline Jet reciprocal(const Jet& a) {
    Jet r;
    r.c[0] = 1.0 / a.c[0];
    for (std::size_t i = 1; i <= Jet::kOrder; ++i) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 1; j <= i; ++j) s += a.c[j] * r.c[i - j];
        r.c[i] = -s / a.c[0];
    }
    return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

// exp(a): exp of the constant term times the series exp of the nilpotent part.
inline Jet jet_exp(const Jet& a) {
    Jet n = a;
    n.c[0] = 0.0;
    Jet r(std::complex<double>{1.0, 0.0});
    Jet pw(std::complex<double>{1.0, 0.0});
    double fact = 1.0;
    for (std::size_t i = 1; i <= Jet::kOrder; ++i) {
        pw = pw * n;
        fact *= static_cast<double>(i);
        for (std::size_t j = 0; j <= Jet::kOrder; ++j) r.c[j] += pw.c[j] / fact;
    }
    std::complex<double> e0 = std::exp(a.c[0]);
    for (std::size_t j = 0; j <= Jet::kOrder; ++j) r.c[j] *= e0;
    return r;
}

// Derivative as a jet: shifts coefficients down one slot.
inline Jet jet_derivative(const Jet& a) {
    Jet r;
    for (std::size_t i = 0; i < Jet::kOrder; ++i)
        r.c[i] = a.c[i + 1] * static_cast<double>(i + 1);
    return r;
}

} // namespace antk

#endif
