#ifndef ANTK_ZEROS_HPP
#define ANTK_ZEROS_HPP

#include <optional>
#include <string>
#include <vector>

#include "antk/chars.hpp"
#include "antk/lfunc.hpp"

namespace antk::zeros {

struct ZeroRecord {
    double gamma = 0.0;           // ordinate
    double beta = 0.5;            // abscissa (1/2 unless located off-line)
    int64_t modulus = 1;          // character id: (modulus, index)
    int char_index = 0;
    double refinement_width = 0.0; // final bisection bracket width
};

// Zeros of one L-function, complete up to |gamma| <= scanned_to.
struct ZeroSet {
    int64_t modulus = 1;
    int char_index = 0;
    double scanned_to = 0.0;
    std::vector<ZeroRecord> records; // ascending in gamma
};

struct ExceptionalZero {
    bool exists = false;
    double beta1 = 0.0;
    int64_t modulus = 0;
    int chi1_index = -1;   // index of the real nontrivial character in its group
    double search_floor = 0.0;
    bool synthetic = false;
};

struct DensityRow {
    double sigma = 0.0;
    int64_t nq = 0;
    int64_t nq_star = 0;
    double bound_huxley = 0.0;    // (qT)^{(12/5+eps)(1-sigma)}
    double bound_repulsive = 0.0; // nu(qT) (qT)^{(75/4)(1-sigma)}
    double nu = 1.0;
    double ratio = 0.0;           // nq / bound_huxley
    std::string note;
};

struct DensityTable {
    int64_t q = 1;
    double T = 0.0;
    double eps = 0.1;
    std::vector<DensityRow> rows;
};

struct RectangleCount {
    int count = 0;
    double applied_perturbation = 0.0; // shift added to T to clear the boundary
};

// All sign changes of the Hardy rotation on [-T, T], bisected to width 1e-8.
// Real characters are scanned on t >= 0 and reflected.
ZeroSet critical_line_zeros(const chars::DirichletCharacter& chi, double T,
                            const lfunc::EvalSettings& st = {});

// N_chi(sigma, T) by the argument principle on [sigma, 1.05] x [-T', T'].
RectangleCount rectangle_zero_count(const chars::DirichletCharacter& chi, double sigma, double T,
                                    const lfunc::EvalSettings& st = {});

// Scan every real nontrivial character mod q for a real zero in
// [1 - 1/(50 log q), 1).
ExceptionalZero exceptional_zero_search(int64_t q, const lfunc::EvalSettings& st = {});

// Synthetic injection for exercising the beta_1-dependent branches; validates
// the Siegel-shape floor 1 - beta1 >= b q^{-1/2}.
ExceptionalZero inject_exceptional_zero(int64_t q, double beta1, int chi1_index,
                                        double siegel_b = 1e-3);

// nu(u) = min{1, (1 - beta1) log u}
double nu(double u, double beta1);

// Zero-density statistics: per sigma, N_q and N_q* with the two bound columns.
DensityTable density_stats(int64_t q, double T, const std::vector<double>& sigma_grid, double eps,
                           const std::optional<ExceptionalZero>& exc = std::nullopt,
                           const lfunc::EvalSettings& st = {});

// n_chi(r; 1 + it): located zeros within distance r of 1 + it, with an
// off-line rectangle audit of the covered strip.
int zeros_in_disc(const chars::DirichletCharacter& chi, double t, double r,
                  const lfunc::EvalSettings& st = {});

std::string density_table_csv(const DensityTable& table);

} // namespace antk::zeros

#endif
