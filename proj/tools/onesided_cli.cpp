// Experiment driver: characteristics, norms, testing constants, sparse
// trees, CZ decompositions, weak-type experiments, scaling sweeps, and the
// cross-module verification suite.
//
// Exit codes: 0 success, 1 invariant failure, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "onesided/corpus.hpp"
#include "onesided/haar.hpp"
#include "onesided/kernel.hpp"
#include "onesided/maximal.hpp"
#include "onesided/operator_matrix.hpp"
#include "onesided/sparse.hpp"
#include "onesided/testing.hpp"
#include "onesided/weaktype.hpp"
#include "onesided/weight.hpp"

using json = nlohmann::json;
using namespace onesided;

namespace {

struct Config {
    std::string kernel_kind = "hilbert";
    int band = 1;
    double lo = 0.0, hi = 1.0;
    int m = 8;
    std::string weight_kind = "power";
    WeightParams wp{.a = 0.5, .beta = 2.0, .z = 0.5, .base_a = 0.0};
    std::string weight_csv;
    uint64_t seed = 1;
    int r = 4;
    double eps = 1.0;
    double multiplier = 100.0;
    int sweep_count = 12;
    double sweep_max_exponent = 2.1;
    int threads = 1;
    std::string out_dir;
};

Config load_config(const std::string& path) {
    Config c;
    if (path.empty()) return c;
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(is);
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        if (k.contains("kind")) c.kernel_kind = k.at("kind").get<std::string>();
        if (k.contains("band")) c.band = k.at("band").get<int>();
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.contains("lo")) c.lo = g.at("lo").get<double>();
        if (g.contains("hi")) c.hi = g.at("hi").get<double>();
        if (g.contains("m")) c.m = g.at("m").get<int>();
    }
    if (j.contains("weight")) {
        const auto& w = j.at("weight");
        if (w.contains("kind")) c.weight_kind = w.at("kind").get<std::string>();
        if (w.contains("a")) c.wp.a = w.at("a").get<double>();
        if (w.contains("beta")) c.wp.beta = w.at("beta").get<double>();
        if (w.contains("z")) c.wp.z = w.at("z").get<double>();
        if (w.contains("base_a")) c.wp.base_a = w.at("base_a").get<double>();
        if (w.contains("seed")) c.seed = w.at("seed").get<uint64_t>();
        if (w.contains("path")) c.weight_csv = w.at("path").get<std::string>();
    }
    if (j.contains("r")) c.r = j.at("r").get<int>();
    if (j.contains("eps")) c.eps = j.at("eps").get<double>();
    if (j.contains("multiplier")) c.multiplier = j.at("multiplier").get<double>();
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        if (s.contains("count")) c.sweep_count = s.at("count").get<int>();
        if (s.contains("max_exponent")) c.sweep_max_exponent = s.at("max_exponent").get<double>();
    }
    return c;
}

CausalKernel make_kernel(const Config& c) {
    if (c.kernel_kind == "hilbert") return causal_hilbert();
    if (c.kernel_kind == "log_oscillating") return causal_log_oscillating();
    throw std::runtime_error("unknown kernel kind: " + c.kernel_kind);
}

Weight make_weight(const Config& c, const Grid& g) {
    if (c.weight_kind == "csv") return load_csv_file(c.weight_csv);
    WeightKind kind;
    if (c.weight_kind == "power") kind = WeightKind::power;
    else if (c.weight_kind == "exp") kind = WeightKind::exp_monotone;
    else if (c.weight_kind == "cutoff") kind = WeightKind::cutoff;
    else if (c.weight_kind == "random_dyadic") kind = WeightKind::random_dyadic;
    else throw std::runtime_error("unknown weight kind: " + c.weight_kind);
    return family_generate(kind, c.wp, c.seed, g);
}

void emit(const Config& c, const std::string& name, const json& j) {
    std::cout << j.dump(2) << "\n";
    if (!c.out_dir.empty()) {
        std::filesystem::create_directories(c.out_dir);
        std::ofstream os(c.out_dir + "/" + name);
        os << j.dump(2) << "\n";
    }
}

DyadicInterval dyadic_hull(const Weight& w) {
    // largest dyadic interval [0, 2^k) inside the support
    int level = 0;
    while ((2L << level) <= w.support_cells()) ++level;
    return {level, 0};
}

int run_characteristic(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    json j;
    j["ap_up_2"] = ap_up_characteristic(w, 2.0);
    j["ap_classical_2"] = ap_classical(w, 2.0);
    j["joint"] = joint_characteristic(MeasurePair::from_weight(w));
    j["a1_up_local"] = a1_up_local_characteristic(w, w.support());
    emit(c, "characteristic.json", j);
    return 0;
}

int run_norm(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    auto T = discretize(make_kernel(c), g, c.band);
    json j;
    j["norm_L2w"] = weighted_operator_norm(T, w, NormMode::L2w);
    j["norm_bilinear"] = weighted_operator_norm(T, w, NormMode::bilinear_mu_nu);
    emit(c, "norm.json", j);
    return 0;
}

int run_testing(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    auto kernel = make_kernel(c);
    auto T = discretize(kernel, g, c.band);
    auto rep = testing_report(T, w, kernel.C_size, c.seed);
    json j;
    j["K_chi"] = rep.K_chi;
    j["K_sl"] = rep.K_sl;
    j["K_gl"] = rep.K_gl;
    j["K_WB"] = rep.K_WB;
    j["norm_L2w"] = rep.norm_L2w;
    j["weak_norm_T_lower"] = rep.weak_norm_T;
    j["weak_norm_Tprime_lower"] = rep.weak_norm_Tprime;
    j["characteristic"] = rep.characteristic;
    emit(c, "testing.json", j);
    return 0;
}

int run_sparse(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    auto mp = MeasurePair::from_weight(w);
    DyadicInterval I0 = dyadic_hull(w);
    double K = empirical_pivotal_constant(g, I0, mp, c.eps);
    auto tree = build_sparse(g, I0, K, mp, c.eps, c.multiplier);
    json nodes = json::array();
    for (const auto& nd : tree.nodes) {
        nodes.push_back({{"level", nd.iv.level},
                         {"start", nd.iv.start},
                         {"parent", nd.parent},
                         {"generation", nd.generation},
                         {"stopping_value", nd.stopping_value}});
    }
    json j;
    j["K"] = K;
    j["multiplier"] = c.multiplier;
    j["root"] = {{"level", I0.level}, {"start", I0.start}};
    j["nodes"] = nodes;
    emit(c, "sparse.json", j);
    return 0;
}

int run_czdecomp(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    CellSpan I0 = w.support();
    auto fs = function_corpus(g, 1, c.seed);
    const auto& f = fs[0];
    auto mu_f = max_up(f, I0);
    double peak = 0.0;
    for (long i = I0.begin; i < I0.end; ++i)
        peak = std::max(peak, mu_f[static_cast<size_t>(i)]);
    if (peak <= 0.0) {
        std::cerr << "czdecomp: zero test function\n";
        return 2;
    }
    double lambda = peak / 2.0;
    auto cz = cz_split(f, lambda, I0, g);
    json comps = json::array();
    double h_l1 = 0.0, f_l1 = 0.0;
    for (double v : f) f_l1 += std::abs(v);
    for (size_t j = 0; j < cz.omega_intervals.size(); ++j) {
        double hj = 0.0, hj_int = 0.0;
        for (double v : cz.h_parts[j]) {
            hj += std::abs(v);
            hj_int += v;
        }
        h_l1 += hj;
        comps.push_back({{"begin", cz.omega_intervals[j].begin},
                         {"end", cz.omega_intervals[j].end},
                         {"extended_end", cz.extended[j].end},
                         {"avg", cell_average(f, cz.omega_intervals[j])},
                         {"h_l1", hj},
                         {"h_integral", hj_int}});
    }
    json j;
    j["lambda"] = lambda;
    j["intervals"] = comps;
    j["sum_h_l1"] = h_l1;
    j["two_f_l1"] = 2.0 * f_l1;
    emit(c, "czdecomp.json", j);
    return h_l1 <= 2.0 * f_l1 ? 0 : 1;
}

int run_weak(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    Weight w = make_weight(c, g);
    auto T = discretize(make_kernel(c), g, c.band);
    auto fs = function_corpus(g, 10, c.seed);
    auto rep = weak11_experiment(T, w, fs);
    json inst = json::array();
    for (const auto& i : rep.instances)
        inst.push_back({{"lambda", i.lambda},
                        {"weak_value", i.weak_value},
                        {"w_omega_tilde", i.w_omega_tilde},
                        {"w_E1", i.w_E1},
                        {"w_E2", i.w_E2},
                        {"omega_bound_ratio", i.omega_bound_ratio},
                        {"extended_check", i.extended_check}});
    json j;
    j["characteristic_A1_up"] = rep.characteristic;
    j["sup_weak"] = rep.sup_weak;
    j["bound_char_log"] = rep.bound;
    j["instances"] = inst;
    emit(c, "weak.json", j);
    return 0;
}

int run_sweep(const Config& c) {
    Grid g(c.lo, c.hi, c.m);
    auto kernel = make_kernel(c);
    auto weights = power_sweep_corpus(g, c.sweep_count, c.sweep_max_exponent);
    auto rows = a2_theorem_sweep(kernel, weights, c.band, c.seed, c.threads);
    std::string dir = c.out_dir.empty() ? "." : c.out_dir;
    std::filesystem::create_directories(dir);
    write_sweep_csv_file(rows, dir + "/sweep.csv");
    {
        std::ofstream os(dir + "/sweep_char_vs_norm.csv");
        os << "char,norm\n";
        os.precision(12);
        for (const auto& r : rows) os << r.characteristic << "," << r.norm << "\n";
    }
    {
        std::ofstream os(dir + "/sweep_char_vs_sqrtKgl.csv");
        os << "char,sqrt_K_gl\n";
        os.precision(12);
        for (const auto& r : rows)
            os << r.characteristic << "," << std::sqrt(r.K_gl) << "\n";
    }
    json meta;
    meta["kernel"] = kernel.name;
    meta["band"] = c.band;
    meta["r"] = c.r;
    meta["eps"] = c.eps;
    meta["seed"] = c.seed;
    meta["m"] = c.m;
    meta["corpus_hash"] = corpus_hash(weights);
    std::ofstream os(dir + "/sweep_meta.json");
    os << meta.dump(2) << "\n";
    write_sweep_csv(rows, std::cout);
    return 0;
}

int run_verify(const Config& c) {
    Grid g(c.lo, c.hi, std::min(c.m, 7));
    auto kernel = make_kernel(c);
    auto T = discretize(kernel, g, c.band);
    int failures = 0;
    json results = json::array();
    auto check = [&](const std::string& name, bool ok) {
        results.push_back({{"check", name}, {"pass", ok}});
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    auto corpus = standard_corpus(g);
    bool chain_ok = true, weak_ok = true, mass_ok = true, twosided_ok = true;
    int idx = 0;
    for (const auto& [id, w] : corpus) {
        if (idx++ % 10 != 0) continue;  // thinned for speed
        auto mp = MeasurePair::from_weight(w);
        double h = g.cell();
        for (long i = 0; i < mp.support_cells; ++i) {
            double prod = mp.mu[static_cast<size_t>(i)] * mp.nu[static_cast<size_t>(i)];
            if (std::abs(prod - h * h) > 1e-12 * h * h) mass_ok = false;
        }
        auto rep = testing_report(T, w, kernel.C_size, c.seed);
        if (!(rep.K_chi <= rep.K_sl * (1 + 1e-12) && rep.K_sl <= rep.K_gl * (1 + 1e-12)))
            chain_ok = false;
        if (!(rep.weak_norm_T <= rep.norm_L2w * (1 + 1e-9))) weak_ok = false;
        for (double p : {1.5, 2.0, 3.0})
            if (ap_up_characteristic(w, p) >
                std::pow(2.0, p) * ap_classical(w, p) * (1 + 1e-12))
                twosided_ok = false;
    }
    check("mu_nu_cell_identity", mass_ok);
    check("K_chain", chain_ok);
    check("weak_le_strong", weak_ok);
    check("ap_up_le_2p_ap", twosided_ok);

    bool sparse_ok = true;
    for (const auto& [id, w] : sparse_corpus(g)) {
        auto mp = MeasurePair::from_weight(w);
        DyadicInterval I0 = dyadic_hull(w);
        double K = empirical_pivotal_constant(g, I0, mp, c.eps);
        auto tree = build_sparse(g, I0, K, mp, c.eps, c.multiplier);
        for (size_t i = 0; i < tree.nodes.size(); ++i) {
            double child_sum = 0.0;
            for (size_t k = 0; k < tree.nodes.size(); ++k)
                if (tree.nodes[k].parent == static_cast<int>(i))
                    child_sum += mass(mp.mu, span_of(tree.nodes[k].iv));
            if (child_sum > 0.5 * mass(mp.mu, span_of(tree.nodes[i].iv)) * (1 + 1e-12))
                sparse_ok = false;
        }
    }
    check("sparse_child_mass", sparse_ok);

    bool rh_ok = true;
    {
        Weight w = family_generate(WeightKind::random_dyadic, {.beta = 4.0}, 3, g);
        auto fs = function_corpus(g, 4, c.seed);
        for (const auto& f : fs) {
            std::vector<double> hpos = f;
            for (auto& v : hpos) v = std::abs(v) + 0.1;
            auto rub = rubio_de_francia(hpos, w, 8);
            for (size_t i = 0; i < hpos.size(); ++i)
                if (rub.Rh[i] < hpos[i] * (1 - 1e-12)) rh_ok = false;
        }
    }
    check("rubio_Rh_ge_h", rh_ok);

    if (!c.out_dir.empty()) {
        std::filesystem::create_directories(c.out_dir);
        std::ofstream os(c.out_dir + "/verify.json");
        os << results.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-sided weight laboratory"};
    std::string subcommand, config_path, out_dir;
    int threads = 0, m_override = 0;
    uint64_t seed = 0;
    bool have_seed = false;
    app.add_option("subcommand", subcommand,
                   "characteristic|norm|testing|sparse|czdecomp|weak|sweep|verify")
        ->required();
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--threads", threads, "worker threads (sweep)");
    auto* seed_opt = app.add_option("--seed", seed, "random seed override");
    app.add_option("--m", m_override, "grid resolution override (n = 2^m)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    have_seed = seed_opt->count() > 0;

    Config c;
    try {
        c = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    if (!out_dir.empty()) c.out_dir = out_dir;
    else if (const char* env = std::getenv("ONESIDED_OUT")) c.out_dir = env;
    if (threads > 0) c.threads = threads;
    else if (const char* env = std::getenv("ONESIDED_THREADS")) c.threads = std::atoi(env);
    if (m_override > 0) c.m = m_override;
    if (have_seed) c.seed = seed;
    if (c.m < 1 || c.m > 12) {
        std::cerr << "config error: grid.m must be in [1, 12] for dense modes\n";
        return 2;
    }

    try {
        if (subcommand == "characteristic") return run_characteristic(c);
        if (subcommand == "norm") return run_norm(c);
        if (subcommand == "testing") return run_testing(c);
        if (subcommand == "sparse") return run_sparse(c);
        if (subcommand == "czdecomp") return run_czdecomp(c);
        if (subcommand == "weak") return run_weak(c);
        if (subcommand == "sweep") return run_sweep(c);
        if (subcommand == "verify") return run_verify(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "config error: unknown subcommand " << subcommand << "\n";
    return 2;
}
