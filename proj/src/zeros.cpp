#include "antk/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace antk::zeros {

using lfunc::Complex;
using lfunc::EvalSettings;

namespace {

constexpr double kScanStep = 0.05;
constexpr double kBisectWidth = 1e-8;
constexpr double kPi = std::numbers::pi;

double bisect_zero(const lfunc::HardyEvaluator& z, double lo, double hi, double flo) {
    while (hi - lo > kBisectWidth) {
        double mid = 0.5 * (lo + hi);
        double fm = z(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// scan [t0, t1] at the given step; refine sign changes, retry suspected
// double sign changes once at half step.  The grid values are computed in
// parallel over disjoint index windows; every other decision works off the
// shared grid, so the output does not depend on the thread count.
void scan_range(const lfunc::HardyEvaluator& z, double t0, double t1, double step,
                bool allow_retry, std::vector<double>& ordinates) {
    int n = static_cast<int>(std::ceil((t1 - t0) / step));
    if (n <= 0) return;
    std::vector<double> vals(static_cast<std::size_t>(n) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n > 256)
#endif
    for (int i = 0; i <= n; ++i) vals[static_cast<std::size_t>(i)] = z(std::min(t0 + i * step, t1));
    for (int i = 0; i < n; ++i) {
        double a = t0 + i * step;
        double b = std::min(a + step, t1);
        double fa = vals[static_cast<std::size_t>(i)];
        double fb = vals[static_cast<std::size_t>(i + 1)];
        if ((fa < 0.0) != (fb < 0.0)) {
            ordinates.push_back(bisect_zero(z, a, b, fa));
        } else if (allow_retry && i > 0 && i + 1 <= n) {
            // a local dip of |Z| without a sign change may hide a close pair
            double fm = vals[static_cast<std::size_t>(i)];
            double fl = vals[static_cast<std::size_t>(i - 1)];
            double fr = vals[static_cast<std::size_t>(i + 1)];
            if (std::abs(fm) < 0.2 * std::min(std::abs(fl), std::abs(fr))) {
                scan_range(z, a, b, step / 4.0, false, ordinates);
            }
        }
    }
}

struct ContourPoint {
    Complex s;
    Complex f;
};

// Entire function whose zeros in the strip are the nontrivial zeros: the
// completed L for primitive nontrivial chi, and s(s-1)/2 times completed
// zeta for the modulus-1 character (kills the poles at 0 and 1).  The
// zeta case goes through the pole-subtracted Hurwitz form so contours may
// pass arbitrarily close to s = 1.
Complex entire_completed(Complex s, const chars::DirichletCharacter& chi, const EvalSettings& st) {
    if (chi.modulus() == 1) {
        Complex zs = (s - 1.0) * lfunc::hurwitz_zeta_star(s, 1.0, st) + 1.0; // (s-1) zeta(s)
        return 0.5 * s * std::pow(Complex(1.0 / kPi, 0.0), 0.5 * s) *
               lfunc::gamma_complex(0.5 * s) * zs;
    }
    return lfunc::completed_l(s, chi, st);
}

} // namespace

ZeroSet critical_line_zeros(const chars::DirichletCharacter& chi, double T,
                            const EvalSettings& st) {
    if (!chi.is_primitive())
        throw std::invalid_argument("critical_line_zeros: character must be primitive");
    if (T > st.t_cap) throw resource_error("critical_line_zeros: T beyond t_cap");
    if (chi.modulus() > st.q_cap) throw resource_error("critical_line_zeros: q beyond q_cap");
    lfunc::HardyEvaluator z(chi, st);
    std::vector<double> ordinates;
    if (chi.is_real()) {
        // zeros come in +/- pairs; Z(0) = 0 would be a central zero (none at
        // desk scale, but guard the scan start anyway)
        scan_range(z, 1e-6, T, kScanStep, true, ordinates);
        std::vector<double> both;
        for (double g : ordinates) {
            both.push_back(-g);
            both.push_back(g);
        }
        ordinates = std::move(both);
    } else {
        scan_range(z, -T, T, kScanStep, true, ordinates);
    }
    std::sort(ordinates.begin(), ordinates.end());
    ZeroSet out;
    out.modulus = chi.modulus();
    out.char_index = chi.index();
    out.scanned_to = T;
    for (double g : ordinates) {
        ZeroRecord r;
        r.gamma = g;
        r.beta = 0.5;
        r.modulus = chi.modulus();
        r.char_index = chi.index();
        r.refinement_width = kBisectWidth;
        out.records.push_back(r);
    }
    return out;
}

RectangleCount rectangle_zero_count(const chars::DirichletCharacter& chi, double sigma, double T,
                                    const EvalSettings& st) {
    if (!chi.is_primitive())
        throw std::invalid_argument("rectangle_zero_count: character must be primitive");
    if (T > st.t_cap) throw resource_error("rectangle_zero_count: T beyond t_cap");
    if (sigma < 0.0 || sigma > 1.0)
        throw std::invalid_argument("rectangle_zero_count: sigma must lie in [0, 1]");

    const double kMaxStepPhase = kPi / 4.0;
    const int kMaxDepth = 48;

    // attempt a few small boundary perturbations of T
    for (double dT : {0.0, 0.005, -0.005, 0.009}) {
        double Tp = T + dT;
        Complex c0{sigma, -Tp}, c1{1.05, -Tp}, c2{1.05, Tp}, c3{sigma, Tp};
        Complex corners[5] = {c0, c1, c2, c3, c0};
        double total = 0.0;
        bool bad = false;
        for (int edge = 0; edge < 4 && !bad; ++edge) {
            Complex a = corners[edge], b = corners[edge + 1];
            struct Node {
                double u;
                Complex f;
            };
            auto eval = [&](double u) {
                Complex s = a + (b - a) * u;
                return entire_completed(s, chi, st);
            };
            // Seed the edge densely enough that no single step can contain a
            // whole winding (phase steps alias modulo 2 pi); then refine
            // adaptively until every step is below pi/4.
            int seeds = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) / 0.2)));
            std::vector<Node> stack; // pending right endpoints, nearest on top
            for (int i = seeds; i >= 1; --i) {
                double u = static_cast<double>(i) / seeds;
                stack.push_back({u, eval(u)});
            }
            Node left{0.0, eval(0.0)};
            while (!stack.empty() && !bad) {
                Node right = stack.back();
                double phase = std::arg(right.f / left.f);
                double width = right.u - left.u;
                if (std::abs(phase) <= kMaxStepPhase) {
                    total += phase;
                    left = right;
                    stack.pop_back();
                    continue;
                }
                if (width < std::ldexp(1.0, -kMaxDepth)) {
                    bad = true;
                    break;
                }
                double mid = 0.5 * (left.u + right.u);
                stack.push_back({mid, eval(mid)});
            }
        }
        if (bad) continue;
        double winding = total / (2.0 * kPi);
        long n = std::lround(winding);
        if (std::abs(winding - static_cast<double>(n)) > 0.05) continue; // inconclusive, perturb
        RectangleCount rc;
        rc.count = static_cast<int>(n);
        rc.applied_perturbation = dT;
        return rc;
    }
    throw contour_error("rectangle_zero_count: phase tracking inconclusive after perturbations");
}

ExceptionalZero exceptional_zero_search(int64_t q, const EvalSettings& st_in) {
    if (q < 3) throw std::invalid_argument("exceptional_zero_search: q must be >= 3");
    EvalSettings st = st_in;
    st.q_cap = std::max<int64_t>(st.q_cap, q);
    auto group = chars::character_group(q);
    ExceptionalZero out;
    out.modulus = q;
    out.search_floor = 1.0 - 1.0 / (50.0 * std::log(static_cast<double>(q)));
    const double step = 1e-4;
    for (const auto& chi : group.characters()) {
        if (chi.is_trivial() || !chi.is_real()) continue;
        double lo = out.search_floor;
        double prev_sigma = lo;
        double prev = lfunc::l_value_real(prev_sigma, chi, st);
        for (double sigma = lo + step; sigma < 1.0 - 1e-9; sigma += step) {
            double cur = lfunc::l_value_real(sigma, chi, st);
            if ((prev < 0.0) != (cur < 0.0)) {
                // refine by bisection to width 1e-12
                double a = prev_sigma, b = sigma, fa = prev;
                while (b - a > 1e-12) {
                    double m = 0.5 * (a + b);
                    double fm = lfunc::l_value_real(m, chi, st);
                    if ((fa < 0.0) != (fm < 0.0)) {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                }
                if (out.exists)
                    throw std::runtime_error("exceptional_zero_search: multiple real zeros found");
                out.exists = true;
                out.beta1 = 0.5 * (a + b);
                out.chi1_index = chi.index();
            }
            prev = cur;
            prev_sigma = sigma;
        }
    }
    return out;
}

ExceptionalZero inject_exceptional_zero(int64_t q, double beta1, int chi1_index, double siegel_b) {
    if (beta1 <= 0.0 || beta1 >= 1.0)
        throw std::invalid_argument("inject_exceptional_zero: beta1 must lie in (0, 1)");
    // Siegel-shape validator: 1 - beta1 >= b q^{-1/2}
    if (q >= 1 && 1.0 - beta1 < siegel_b / std::sqrt(static_cast<double>(q)))
        throw std::invalid_argument("inject_exceptional_zero: beta1 violates the Siegel floor");
    ExceptionalZero e;
    e.exists = true;
    e.beta1 = beta1;
    e.modulus = q;
    e.chi1_index = chi1_index;
    e.search_floor = q >= 3 ? 1.0 - 1.0 / (50.0 * std::log(static_cast<double>(q))) : 0.0;
    e.synthetic = true;
    return e;
}

double nu(double u, double beta1) {
    if (u < 1.0) throw std::domain_error("nu: u must be >= 1");
    return std::min(1.0, (1.0 - beta1) * std::log(u));
}

DensityTable density_stats(int64_t q, double T, const std::vector<double>& sigma_grid, double eps,
                           const std::optional<ExceptionalZero>& exc, const EvalSettings& st) {
    DensityTable table;
    table.q = q;
    table.T = T;
    table.eps = eps;
    auto group = chars::character_group(q);

    // counts are per primitive inducing character (zeros with beta > 0 agree)
    struct Key {
        int64_t f;
        int idx;
        double sigma;
        bool operator<(const Key& o) const {
            return std::tie(f, idx, sigma) < std::tie(o.f, o.idx, o.sigma);
        }
    };
    std::map<Key, int> cache;
    std::vector<chars::DirichletCharacter> prims;
    for (const auto& chi : group.characters()) prims.push_back(chars::conductor_and_primitive(chi).second);

    double qt = static_cast<double>(q) * T;
    for (double sigma : sigma_grid) {
        DensityRow row;
        row.sigma = sigma;
        // the contour hugs the requested abscissa from just below so that
        // zeros lying exactly on Re s = sigma (the critical line case) count
        double sig_eff = sigma - 1e-6;
        int64_t nq = 0;
        std::string note;
        for (const auto& prim : prims) {
            Key key{prim.modulus(), prim.index(), sigma};
            auto it = cache.find(key);
            int c;
            if (it != cache.end()) {
                c = it->second;
            } else {
                try {
                    auto rc = rectangle_zero_count(prim, std::max(0.0, sig_eff), T, st);
                    c = rc.count;
                    if (rc.applied_perturbation != 0.0) note = "perturbed";
                } catch (const contour_error& e) {
                    c = -1;
                    note = e.what();
                }
                cache[key] = c;
            }
            if (c < 0) {
                nq = -1;
                break;
            }
            nq += c;
        }
        row.nq = nq;
        row.note = note;
        // N_q* excludes rho = beta_1.  A synthetic pair was never seen by the
        // contours, so it is added to N_q formally; a genuinely located one is
        // already inside the rectangle count and is removed from N_q*.
        row.nq_star = nq;
        double nu_val = 1.0;
        if (exc && exc->exists) {
            nu_val = nu(std::max(qt, 1.0), exc->beta1);
            if (nq >= 0 && exc->beta1 >= sigma) {
                if (exc->synthetic) {
                    row.nq = nq + 1;
                } else {
                    row.nq_star = nq - 1;
                }
            }
        }
        row.nu = nu_val;
        row.bound_huxley = std::pow(qt, (12.0 / 5.0 + eps) * (1.0 - sigma));
        row.bound_repulsive = nu_val * std::pow(qt, (75.0 / 4.0) * (1.0 - sigma));
        row.ratio = nq > 0 ? static_cast<double>(nq) / row.bound_huxley : 0.0;
        table.rows.push_back(row);
    }
    return table;
}

int zeros_in_disc(const chars::DirichletCharacter& chi, double t, double r,
                  const EvalSettings& st) {
    if (!(r > 0.0 && r <= 0.75)) throw std::invalid_argument("zeros_in_disc: r must lie in (0, 0.75]");
    if (std::abs(t) > st.t_cap) throw resource_error("zeros_in_disc: |t| beyond t_cap");
    double T = std::min(std::abs(t) + r + 1.0, st.t_cap);
    auto zs = critical_line_zeros(chi, T, st);
    int count = 0;
    for (const auto& z : zs.records) {
        double dx = 1.0 - z.beta;
        double dy = t - z.gamma;
        if (dx * dx + dy * dy <= r * r) ++count;
    }
    // off-line audit: the rectangle covering the disc's abscissa range must
    // count exactly the on-line records there, otherwise zeros off the
    // critical line are present and the disc count is unreliable
    if (r >= 0.25) {
        double sig_audit = std::max(0.0, 1.0 - r - 1e-6);
        double t_audit = std::min(std::abs(t) + r + 0.5, st.t_cap);
        auto rc = rectangle_zero_count(chi, sig_audit, t_audit, st);
        int expected = 0;
        for (const auto& z : zs.records)
            if (std::abs(z.gamma) <= t_audit + rc.applied_perturbation && z.beta >= sig_audit)
                ++expected;
        if (rc.count != expected)
            throw contour_error("zeros_in_disc: off-line audit found unaccounted zeros");
    }
    return count;
}

std::string density_table_csv(const DensityTable& table) {
    std::ostringstream os;
    os << "sigma,Nq,Nq_star,bound_huxley,bound_repulsive,nu,ratio\n";
    os.setf(std::ios::fmtflags(0), std::ios::floatfield);
    os.precision(12);
    for (const auto& r : table.rows) {
        os << r.sigma << ',' << r.nq << ',' << r.nq_star << ',' << r.bound_huxley << ','
           << r.bound_repulsive << ',' << r.nu << ',' << r.ratio << '\n';
    }
    return os.str();
}

} // namespace antk::zeros
