// antk: command-line front end for the prime/zero/constant toolkit.
//
// Subcommands: primes theta|digits, zeros scan|density|exceptional,
// pnt predict|envelope|explicit|bt, aconst optimize|audit|powersum,
// verify [--quick|--full].

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "antk/accept.hpp"
#include "antk/aconst.hpp"
#include "antk/chars.hpp"
#include "antk/lfunc.hpp"
#include "antk/pnt.hpp"
#include "antk/primes.hpp"
#include "antk/zeros.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::ordered_json;
using namespace antk;

namespace {

struct RunConfig {
    std::string format = "json"; // json | csv
    std::string output;          // empty = stdout
    uint64_t seed = 1;
    int threads = 0; // 0 = library default
    double c_vk = 0.05;
    double c_dh = 0.1;
    double c_main = 0.05;
    double b_siegel = 1e-3;
    int64_t q_cap = 200;
    double t_cap = 200.0;
    int64_t sieve_cap = 10'000'000'000;
    int em_terms = 50;
    int bernoulli_order = 30;
    double target_abs_error = 1e-10;
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json j = json::parse(in);
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("c_vk")) cfg.c_vk = j["c_vk"].get<double>();
    if (j.contains("c_dh")) cfg.c_dh = j["c_dh"].get<double>();
    if (j.contains("c_main")) cfg.c_main = j["c_main"].get<double>();
    if (j.contains("b_siegel")) cfg.b_siegel = j["b_siegel"].get<double>();
    if (j.contains("q_cap")) cfg.q_cap = j["q_cap"].get<int64_t>();
    if (j.contains("t_cap")) cfg.t_cap = j["t_cap"].get<double>();
    if (j.contains("sieve_cap")) cfg.sieve_cap = j["sieve_cap"].get<int64_t>();
    if (j.contains("em_terms")) cfg.em_terms = j["em_terms"].get<int>();
    if (j.contains("bernoulli_order")) cfg.bernoulli_order = j["bernoulli_order"].get<int>();
    if (j.contains("target_abs_error")) cfg.target_abs_error = j["target_abs_error"].get<double>();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        out << text;
    }
}

lfunc::EvalSettings eval_settings(const RunConfig& cfg) {
    lfunc::EvalSettings st;
    st.q_cap = cfg.q_cap;
    st.t_cap = cfg.t_cap;
    st.euler_maclaurin_terms = cfg.em_terms;
    st.bernoulli_order = cfg.bernoulli_order;
    st.target_abs_error = cfg.target_abs_error;
    return st;
}

// --format csv: emit the subcommand's main table (the first array of
// objects) with a union-of-keys header, or key,value rows for flat output.
std::string to_csv(const json& j) {
    std::ostringstream os;
    const json* table = nullptr;
    for (const auto& [key, value] : j.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            table = &value;
            break;
        }
    }
    auto cell = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (table) {
        std::vector<std::string> cols;
        for (const auto& row : *table) {
            for (const auto& [key, value] : row.items()) {
                (void)value;
                if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
            }
        }
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << "\n";
        for (const auto& row : *table) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                os << (i ? "," : "");
                if (row.contains(cols[i])) os << cell(row[cols[i]]);
            }
            os << "\n";
        }
        return os.str();
    }
    os << "key,value\n";
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() || value.is_array()) {
            os << key << "," << value.dump() << "\n";
        } else {
            os << key << "," << cell(value) << "\n";
        }
    }
    return os.str();
}

void emit_doc(const RunConfig& cfg, const json& j) {
    emit(cfg, cfg.format == "csv" ? to_csv(j) : j.dump(2) + "\n");
}

primes::SieveConfig sieve_config(const RunConfig& cfg) {
    primes::SieveConfig sc;
    sc.cap = cfg.sieve_cap;
    return sc;
}

json zero_set_json(const zeros::ZeroSet& zs) {
    json j;
    j["modulus"] = zs.modulus;
    j["char_index"] = zs.char_index;
    j["scanned_to"] = zs.scanned_to;
    auto arr = json::array();
    for (const auto& z : zs.records) {
        json e;
        e["gamma"] = z.gamma;
        e["beta"] = z.beta;
        e["refinement_width"] = z.refinement_width;
        arr.push_back(e);
    }
    j["zeros"] = arr;
    return j;
}

json header(const RunConfig& cfg) {
    json j;
    j["schema_version"] = "1";
    j["seed"] = cfg.seed;
    return j;
}

std::string density_csv(const zeros::DensityTable& t) { return zeros::density_table_csv(t); }

json density_json(const zeros::DensityTable& t, const RunConfig& cfg) {
    json j = header(cfg);
    j["q"] = t.q;
    j["T"] = t.T;
    j["eps"] = t.eps;
    auto rows = json::array();
    for (const auto& r : t.rows) {
        json e;
        e["sigma"] = r.sigma;
        e["Nq"] = r.nq;
        e["Nq_star"] = r.nq_star;
        e["bound_huxley"] = r.bound_huxley;
        e["bound_repulsive"] = r.bound_repulsive;
        e["nu"] = r.nu;
        e["ratio"] = r.ratio;
        if (!r.note.empty()) e["note"] = r.note;
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j;
}

json prediction_json(const pnt::PredictionReport& rep) {
    json j;
    j["query"] = {{"x", rep.query.x}, {"h", rep.query.h}, {"q", rep.query.q}, {"a", rep.query.a}};
    j["lambda"] = rep.lambda;
    j["theta_exponent"] = {{"num", rep.theta_exponent.num}, {"den", rep.theta_exponent.den}};
    j["actual"] = rep.actual;
    j["predicted"] = rep.predicted;
    j["relative_error"] = rep.relative_error;
    j["envelope"] = rep.envelope;
    j["implied_constant_ratio"] = rep.implied_constant_ratio;
    j["primary_term"] = rep.primary_term;
    j["secondary_term"] = rep.secondary_term;
    j["range_condition_met"] = rep.range_condition_met;
    j["exceptional_exists"] = rep.exceptional_exists;
    if (rep.exceptional_exists) j["beta1"] = rep.beta1;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic prime-counting toolkit"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // keep --h free for interval lengths

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_option("--format", cfg.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output, "output file (default stdout)");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_option("--threads", cfg.threads, "worker threads (default: available parallelism)");
    app.add_option("--c-vk", cfg.c_vk, "Vinogradov-Korobov zero-free-region constant");
    app.add_option("--c-dh", cfg.c_dh, "Deuring-Heilbronn repulsion constant");
    app.add_option("--c-main", cfg.c_main, "error-envelope constant");
    app.add_option("--b-siegel", cfg.b_siegel, "Siegel-floor constant for synthetic injections");
    app.add_option("--q-cap", cfg.q_cap, "modulus cap for L evaluations");
    app.add_option("--t-cap", cfg.t_cap, "height cap for L evaluations");
    app.add_option("--sieve-cap", cfg.sieve_cap, "largest admissible sieve bound");
    app.add_option("--em-terms", cfg.em_terms, "Euler-Maclaurin initial terms");
    app.add_option("--bernoulli-order", cfg.bernoulli_order, "Euler-Maclaurin correction order");
    app.add_option("--target-abs-error", cfg.target_abs_error, "L evaluation accuracy target");

    auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* sub = parent->add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        sub->fallthrough(); // global options may follow the subcommand
        return sub;
    };

    // primes
    auto* primes_cmd = add_sub(&app, "primes", "sieving and theta sums");
    auto* theta_cmd = add_sub(primes_cmd, "theta", "theta(x; q, a) or all classes");
    double th_x = 1e6, th_h = 0.0;
    int64_t th_q = 1, th_a = -1;
    theta_cmd->add_option("--x", th_x, "upper end of the range")->required();
    theta_cmd->add_option("--q", th_q, "modulus");
    theta_cmd->add_option("--a", th_a, "residue class (omit for all classes)");
    theta_cmd->add_option("--h", th_h, "interval length (omit for p <= x)");

    auto* sieve_cmd = add_sub(primes_cmd, "sieve", "list primes in a range");
    int64_t sv_lo = 2, sv_hi = 100;
    std::string sv_cache_out, sv_cache_in;
    sieve_cmd->add_option("--lo", sv_lo, "lower bound");
    sieve_cmd->add_option("--hi", sv_hi, "upper bound")->required();
    sieve_cmd->add_option("--cache-out", sv_cache_out, "write the binary segment cache here");
    sieve_cmd->add_option("--cache-in", sv_cache_in, "reuse a binary segment cache if it matches");

    auto* digits_cmd = add_sub(primes_cmd, "digits", "digit-prescribed prime counts");
    int64_t dg_base = 10;
    int dg_n = 3;
    std::vector<int> dg_low, dg_high;
    digits_cmd->add_option("--base", dg_base, "base of the expansion");
    digits_cmd->add_option("--ndigits", dg_n, "total digit count")->required();
    digits_cmd->add_option("--low", dg_low, "low digits, units first");
    digits_cmd->add_option("--high", dg_high, "high digits, ascending significance");

    // zeros
    auto* zeros_cmd = add_sub(&app, "zeros", "zero location and statistics");
    auto* scan_cmd = add_sub(zeros_cmd, "scan", "critical-line zero scan");
    int64_t zs_q = 1;
    int zs_index = -1;
    double zs_T = 30.0;
    scan_cmd->add_option("--q", zs_q, "modulus")->required();
    scan_cmd->add_option("--index", zs_index, "character index (omit for all primitive)");
    scan_cmd->add_option("--T", zs_T, "scan height");

    auto* dens_cmd = add_sub(zeros_cmd, "density", "N_q / N_q* tables");
    int64_t zd_q = 3;
    double zd_T = 50.0, zd_eps = 0.1;
    std::vector<double> zd_sigmas{0.5, 0.6, 0.75, 0.9, 1.0};
    dens_cmd->add_option("--q", zd_q, "modulus")->required();
    dens_cmd->add_option("--T", zd_T, "height");
    dens_cmd->add_option("--sigmas", zd_sigmas, "sigma grid");
    dens_cmd->add_option("--eps", zd_eps, "epsilon in the Huxley bound column");

    auto* exc_cmd = add_sub(zeros_cmd, "exceptional", "exceptional-zero search");
    int64_t ze_q = 0, ze_qmax = 0;
    exc_cmd->add_option("--q", ze_q, "single modulus");
    exc_cmd->add_option("--qmax", ze_qmax, "sweep 3..qmax");

    // pnt
    auto* pnt_cmd = add_sub(&app, "pnt", "prediction-side computations");
    auto* pred_cmd = add_sub(pnt_cmd, "predict", "theta prediction vs sieved truth");
    double pp_x = 1e6, pp_h = 0.0, pp_eps = 0.1;
    int64_t pp_q = 3, pp_a = 1;
    std::string pp_profile = "vk", pp_batch;
    pred_cmd->add_option("--x", pp_x, "x");
    pred_cmd->add_option("--h", pp_h, "interval length (default x)");
    pred_cmd->add_option("--q", pp_q, "modulus");
    pred_cmd->add_option("--a", pp_a, "residue");
    pred_cmd->add_option("--eps", pp_eps, "epsilon in the range condition");
    pred_cmd->add_option("--profile", pp_profile, "zero-free-region profile: vk, iwaniec, dh")
        ->check(CLI::IsMember({"vk", "iwaniec", "dh"}));
    pred_cmd->add_option("--batch", pp_batch, "CSV of x,h,q,a rows");

    auto* env_cmd = add_sub(pnt_cmd, "envelope", "error envelope value");
    double pe_x = 1e6, pe_h = 1e5, pe_beta1 = 0.0;
    int64_t pe_q = 101;
    std::string pe_flavor = "vk";
    env_cmd->add_option("--x", pe_x, "x")->required();
    env_cmd->add_option("--h", pe_h, "h")->required();
    env_cmd->add_option("--q", pe_q, "q")->required();
    env_cmd->add_option("--flavor", pe_flavor, "vk, powerful, or gallagher")
        ->check(CLI::IsMember({"vk", "powerful", "gallagher"}));
    env_cmd->add_option("--beta1", pe_beta1, "beta1 for the gallagher flavor");

    auto* expl_cmd = add_sub(pnt_cmd, "explicit", "truncated explicit formula");
    double px_x = 1e5, px_T = 50.0;
    int64_t px_q = 3, px_a = 1;
    expl_cmd->add_option("--x", px_x, "x");
    expl_cmd->add_option("--T", px_T, "zero-sum truncation height");
    expl_cmd->add_option("--q", px_q, "modulus");
    expl_cmd->add_option("--a", px_a, "residue");

    auto* bt_cmd = add_sub(pnt_cmd, "bt", "Brun-Titchmarsh audit");
    double pb_x = 1e6, pb_h = 1e5, pb_delta = 1.0;
    int64_t pb_q = 101;
    bt_cmd->add_option("--x", pb_x, "x");
    bt_cmd->add_option("--h", pb_h, "h");
    bt_cmd->add_option("--q", pb_q, "q");
    bt_cmd->add_option("--delta", pb_delta, "slack in the bound");

    // aconst
    auto* aconst_cmd = add_sub(&app, "aconst", "power-sum constants and audits");
    auto* opt_cmd = add_sub(aconst_cmd, "optimize", "minimize the power-sum objective");
    auto* audit_cmd = add_sub(aconst_cmd, "audit", "verify the constant chain");
    double aa_phi = 1.0 / 6.0 + 1e-7, aa_K = 0.0;
    audit_cmd->add_option("--phi", aa_phi, "subconvexity exponent");
    audit_cmd->add_option("--K", aa_K, "free additive constant, reported only");
    auto* pws_cmd = add_sub(aconst_cmd, "powersum", "random power-sum bound suite");
    int ps_count = 10000;
    pws_cmd->add_option("--count", ps_count, "number of random instances");

    // verify
    auto* verify_cmd = add_sub(&app, "verify", "run the acceptance suite");
    bool vq = false, vf = false;
    verify_cmd->add_flag("--quick", vq, "sub-minute subset");
    verify_cmd->add_flag("--full", vf, "every criterion (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints help/error
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            RunConfig from_file;
            apply_config_file(from_file, config_path);
            // flags override file: reparse over the file values
            cfg = from_file;
            app.clear();
            app.parse(argc, argv);
        }
#ifdef _OPENMP
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
        auto st = eval_settings(cfg);
        auto sc = sieve_config(cfg);

        if (*theta_cmd) {
            json j = header(cfg);
            j["x"] = th_x;
            j["q"] = th_q;
            if (th_h > 0.0) {
                if (th_a < 0) throw CLI::ValidationError("--a", "required with --h");
                primes::ThetaQuery query{th_x, th_h, th_q, th_a};
                j["h"] = th_h;
                j["a"] = th_a;
                j["theta"] = primes::theta_short_interval(query, sc);
            } else if (th_a >= 0) {
                j["a"] = th_a;
                j["theta"] = primes::theta_ap(th_x, th_q, th_a, sc);
            } else {
                auto t = primes::theta_all(th_x, th_q, sc);
                j["theta_total"] = t.total;
                j["prime_count"] = t.prime_count;
                j["by_class"] = t.by_class;
            }
            emit_doc(cfg, j);
        } else if (*sieve_cmd) {
            std::vector<int64_t> ps;
            bool from_cache = false;
            if (!sv_cache_in.empty()) {
                int64_t clo = 0, chi = 0;
                std::vector<int64_t> cached;
                if (primes::load_prime_cache(sv_cache_in, clo, chi, cached) && clo == sv_lo &&
                    chi == sv_hi) {
                    ps = std::move(cached);
                    from_cache = true;
                }
            }
            if (!from_cache) ps = primes::sieve_interval(sv_lo, sv_hi, sc);
            if (!sv_cache_out.empty()) primes::save_prime_cache(sv_cache_out, sv_lo, sv_hi, ps);
            json j = header(cfg);
            j["lo"] = sv_lo;
            j["hi"] = sv_hi;
            j["count"] = ps.size();
            j["from_cache"] = from_cache;
            if (ps.size() <= 10000) j["primes"] = ps;
            emit_doc(cfg, j);
        } else if (*digits_cmd) {
            primes::DigitConstraint c;
            c.base = dg_base;
            c.num_digits = dg_n;
            c.low_digits = dg_low;
            c.high_digits = dg_high;
            auto res = primes::count_prescribed_digits(c, sc);
            json j = header(cfg);
            j["base"] = dg_base;
            j["ndigits"] = dg_n;
            j["low"] = dg_low;
            j["high"] = dg_high;
            j["count"] = res.count;
            j["log_weighted"] = res.log_weighted;
            j["predicted"] = res.predicted;
            j["ratio"] = res.predicted > 0 ? res.count / res.predicted : 0.0;
            emit_doc(cfg, j);
        } else if (*scan_cmd) {
            auto group = chars::character_group(zs_q);
            json j = header(cfg);
            auto arr = json::array();
            for (const auto& chi : group.characters()) {
                if (!chi.is_primitive()) continue;
                if (zs_index >= 0 && chi.index() != zs_index) continue;
                arr.push_back(zero_set_json(zeros::critical_line_zeros(chi, zs_T, st)));
            }
            j["scans"] = arr;
            emit_doc(cfg, j);
        } else if (*dens_cmd) {
            auto table = zeros::density_stats(zd_q, zd_T, zd_sigmas, zd_eps, std::nullopt, st);
            if (cfg.format == "csv") {
                emit(cfg, density_csv(table));
            } else {
                emit(cfg, density_json(table, cfg).dump(2) + "\n");
            }
        } else if (*exc_cmd) {
            json j = header(cfg);
            auto arr = json::array();
            int64_t lo = ze_q > 0 ? ze_q : 3;
            int64_t hi = ze_qmax > 0 ? ze_qmax : ze_q;
            if (hi <= 0) throw CLI::ValidationError("--q", "give --q or --qmax");
            for (int64_t q = lo; q <= hi; ++q) {
                auto e = zeros::exceptional_zero_search(q, st);
                json row;
                row["q"] = q;
                row["exists"] = e.exists;
                row["search_floor"] = e.search_floor;
                if (e.exists) {
                    row["beta1"] = e.beta1;
                    row["chi1_index"] = e.chi1_index;
                }
                arr.push_back(row);
            }
            j["results"] = arr;
            emit_doc(cfg, j);
        } else if (*pred_cmd) {
            pnt::ZeroFreeRegionProfile profile;
            profile.c_vk = cfg.c_vk;
            profile.c_dh = cfg.c_dh;
            if (pp_profile == "iwaniec") profile.kind = pnt::ZfrKind::IWANIEC;
            if (pp_profile == "dh") profile.kind = pnt::ZfrKind::DH;
            json j = header(cfg);
            if (!pp_batch.empty()) {
                std::ifstream in(pp_batch);
                if (!in) throw CLI::ValidationError("--batch", "cannot open " + pp_batch);
                auto arr = json::array();
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
                    std::istringstream ls(line);
                    double x, h;
                    int64_t q, a;
                    char comma;
                    ls >> x >> comma >> h >> comma >> q >> comma >> a;
                    auto rep = pnt::predict_and_compare(x, h, q, a, pp_eps, profile, cfg.c_main,
                                                        nullptr, sc);
                    arr.push_back(prediction_json(rep));
                }
                j["reports"] = arr;
            } else {
                double h = pp_h > 0.0 ? pp_h : pp_x;
                auto rep =
                    pnt::predict_and_compare(pp_x, h, pp_q, pp_a, pp_eps, profile, cfg.c_main,
                                             nullptr, sc);
                j["report"] = prediction_json(rep);
            }
            emit_doc(cfg, j);
        } else if (*env_cmd) {
            pnt::EnvelopeFlavor flavor = pnt::EnvelopeFlavor::VK;
            if (pe_flavor == "powerful") flavor = pnt::EnvelopeFlavor::POWERFUL;
            if (pe_flavor == "gallagher") flavor = pnt::EnvelopeFlavor::GALLAGHER;
            json j = header(cfg);
            j["x"] = pe_x;
            j["h"] = pe_h;
            j["q"] = pe_q;
            j["C"] = cfg.c_main;
            j["flavor"] = pe_flavor;
            j["envelope"] = pnt::error_envelope(pe_x, pe_h, pe_q, cfg.c_main, flavor, pe_beta1);
            emit_doc(cfg, j);
        } else if (*expl_cmd) {
            auto sets = pnt::zero_sets_for_modulus(px_q, px_T + 1.0, st);
            zeros::ExceptionalZero none;
            double pred = pnt::explicit_formula_theta(px_x, px_T, px_q, px_a, sets, none);
            double actual = primes::theta_ap(px_x, px_q, px_a, sc);
            double lx = std::log(px_x);
            json j = header(cfg);
            j["x"] = px_x;
            j["T"] = px_T;
            j["q"] = px_q;
            j["a"] = px_a;
            j["predicted"] = pred;
            j["actual"] = actual;
            j["deviation"] = std::abs(pred - actual);
            j["slack_scale"] = px_x * lx * lx / px_T;
            j["deviation_over_slack"] = std::abs(pred - actual) / (px_x * lx * lx / px_T);
            emit_doc(cfg, j);
        } else if (*bt_cmd) {
            auto audit = pnt::brun_titchmarsh_audit(pb_x, pb_h, pb_q, pb_delta, sc);
            json j = header(cfg);
            j["x"] = pb_x;
            j["h"] = pb_h;
            j["q"] = pb_q;
            j["delta"] = pb_delta;
            j["max_ratio"] = audit.max_ratio;
            j["min_ratio"] = audit.min_ratio;
            j["argmax_class"] = audit.argmax_class;
            j["bound_no_exceptional"] = audit.bound_no_exceptional;
            j["bound_exceptional"] = audit.bound_exceptional;
            j["pass"] = audit.pass;
            emit_doc(cfg, j);
            return audit.pass ? 0 : 1;
        } else if (*opt_cmd) {
            auto res = aconst::optimize_constants();
            json j = header(cfg);
            j["alpha"] = res.alpha;
            j["A"] = res.A;
            j["B"] = res.B;
            j["objective"] = res.objective;
            j["contraction"] = res.contraction;
            j["b_boundary_active"] = res.b_boundary_active;
            j["contraction_boundary_active"] = res.contraction_boundary_active;
            emit_doc(cfg, j);
        } else if (*audit_cmd) {
            aconst::ConstantChain chain;
            chain.phi = aa_phi;
            chain.K = aa_K;
            auto audit = aconst::verify_constant_chain(chain);
            json j = header(cfg);
            j["objective"] = audit.objective;
            j["contraction"] = audit.contraction;
            j["one_minus_contraction"] = audit.one_minus_contraction;
            j["exponent_recomputed"] = audit.exponent_recomputed;
            j["base_recomputed"] = audit.base_recomputed;
            j["final_exponent"] = audit.final_exponent;
            j["slack_75_4"] = audit.slack_75_4;
            j["K"] = audit.K;
            auto checks = json::array();
            for (const auto& c : audit.checks) {
                checks.push_back({{"name", c.name},
                                  {"pass", c.pass},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"residual", c.residual}});
            }
            j["checks"] = checks;
            j["pass"] = audit.all_pass;
            emit_doc(cfg, j);
            return audit.all_pass ? 0 : 1;
        } else if (*pws_cmd) {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> uu(-1.0, 1.0);
            std::uniform_int_distribution<int> un(1, 4), um(0, 5);
            int violations = 0;
            double min_ratio = 1e300;
            for (int i = 0; i < ps_count; ++i) {
                aconst::PowerSumInstance inst;
                int n = un(rng);
                inst.M = um(rng);
                for (int k = 0; k < n; ++k) {
                    std::complex<double> z{uu(rng), uu(rng)};
                    if (std::abs(z) > 1.0) z /= std::abs(z) * 1.0000001;
                    if (std::abs(z) == 0.0) z = 1e-3;
                    inst.points.push_back(z);
                }
                auto res = aconst::power_sum_min_k(inst);
                if (res.value < res.bound) ++violations;
                if (res.bound > 0.0) min_ratio = std::min(min_ratio, res.value / res.bound);
            }
            json j = header(cfg);
            j["instances"] = ps_count;
            j["violations"] = violations;
            j["min_ratio"] = min_ratio;
            emit_doc(cfg, j);
            return violations == 0 ? 0 : 1;
        } else if (*verify_cmd) {
            accept::VerifyOptions vo;
            vo.quick = vq && !vf;
            vo.seed = cfg.seed;
            vo.cli_path = argv[0];
            auto results = accept::run_acceptance(vo);
            bool all = true;
            for (const auto& r : results) {
                std::fprintf(stderr, "%s %2d: %s (%s) [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.id,
                             r.name.c_str(), r.detail.c_str(), r.seconds);
                all = all && r.pass;
            }
            if (cfg.format == "csv") {
                emit_doc(cfg, json::parse(accept::results_json(results, cfg.seed)));
            } else {
                emit(cfg, accept::results_json(results, cfg.seed));
            }
            return all ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
