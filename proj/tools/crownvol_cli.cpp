// crownvol: volumes of crowned-boundary and cusped-disc moduli spaces.
//
//   crownvol volume crown --n 3 --p 1 --method closed
//   crownvol volume disc  --n 5 --method quad
//   crownvol sweep --n 3 --pmin 0.1 --pmax 10 --steps 20 --out sweep.csv
//   crownvol check --suite all
//
// Exit codes: 0 success, 1 check failure, 2 usage, 3 convergence, 4 I/O.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crownvol/checks.hpp"
#include "crownvol/volumes.hpp"

using namespace crownvol;
using nlohmann::json;

namespace {

struct RunRecord {
    std::string command;
    std::map<std::string, std::string> params;
    double estimate = 0.0;
    std::optional<double> std_error;       // MC
    std::optional<double> error_bound;     // quadrature
    std::optional<long long> n_samples;
    std::optional<long long> evaluations;
    std::uint64_t seed = 0;
    std::optional<double> wall_time_ms;    // emitted only with --timing

    json to_json() const {
        json j{{"command", command}, {"estimate", estimate}, {"seed", seed}};
        for (const auto& [k, v] : params) j[k] = v;
        if (std_error) j["stderr"] = *std_error;
        if (error_bound) j["error_bound"] = *error_bound;
        if (n_samples) j["n_samples"] = *n_samples;
        if (evaluations) j["evaluations"] = *evaluations;
        if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
        return j;
    }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_record(const RunRecord& r, bool as_json) {
    if (as_json) {
        std::cout << r.to_json().dump() << "\n";
        return;
    }
    std::ostringstream os;
    os << "command=" << r.command;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << " estimate=" << fmt(r.estimate);
    if (r.std_error) os << " stderr=" << fmt(*r.std_error);
    if (r.error_bound) os << " error_bound=" << fmt(*r.error_bound);
    if (r.n_samples) os << " n_samples=" << *r.n_samples;
    if (r.evaluations) os << " evaluations=" << *r.evaluations;
    os << " seed=" << r.seed;
    if (r.wall_time_ms) os << " wall_time_ms=" << fmt(*r.wall_time_ms);
    std::cout << os.str() << "\n";
}

int worker_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int threads = std::max(1, std::min(4, hw));
    if (const char* cap = std::getenv("MODULI_THREADS")) {
        int c = std::atoi(cap);
        if (c < 1) {
            std::cerr << "MODULI_THREADS must be a positive integer\n";
            std::exit(2);
        }
        threads = std::min(threads, c);
    }
    return threads;
}

// Throws std::runtime_error when the error bound fails the contract.
void require_converged(const QuadratureResult& q, double need_abs) {
    if (!(q.abs_error_bound <= need_abs) || !std::isfinite(q.value))
        throw std::runtime_error("quadrature failed to reach the requested accuracy");
}

double disc_closed(int n) {
    constexpr double pi2 = 9.869604401089358;
    switch (n) {
        case 4: return 1.0;
        case 5: return pi2 / 6.0;
        case 6: return pi2 / 3.0;
        default: throw CLI::ValidationError("--method closed supports disc n in {4,5,6}");
    }
}

struct VolumeArgs {
    int n = 3;
    double p = 1.0;
    long long samples = 0;  // 0: default per n
    std::uint64_t seed = 1;
    std::string method = "auto";
    bool as_json = false;
    bool timing = false;
};

RunRecord run_crown(const VolumeArgs& a) {
    std::string method = a.method;
    if (method == "auto") {
        if (a.samples > 0 && a.n >= 3) method = "mc";  // explicit sample count
        else method = a.n <= 3 ? "closed" : (a.n == 4 ? "quad" : "mc");
    }
    if (method == "closed" && a.n > 3)
        throw CLI::ValidationError("--method closed supports crown n <= 3");
    if (method == "quad" && a.n > 4)
        throw CLI::ValidationError("--method quad supports crown n <= 4");
    if (method == "mc" && a.n < 3)
        throw CLI::ValidationError("--method mc supports crown n >= 3");

    RunRecord r;
    r.command = "volume.crown";
    r.params["n"] = std::to_string(a.n);
    r.params["p"] = fmt(a.p);
    r.params["method"] = method;
    r.seed = a.seed;
    auto t0 = std::chrono::steady_clock::now();
    if (method == "closed") {
        r.estimate = a.n == 1 ? v1_closed() : (a.n == 2 ? v2_closed(a.p) : v3_closed(a.p));
        r.error_bound = 0.0;
    } else if (method == "quad") {
        auto q = a.n == 4 ? v4_reduced_quadrature(a.p) : crown_volume_quadrature(a.n, a.p);
        require_converged(q, 1e-8 + 1e-7 * std::abs(q.value));
        r.estimate = q.value;
        r.error_bound = q.abs_error_bound;
        r.evaluations = q.evaluations;
    } else {
        long long N = a.samples > 0 ? a.samples : default_mc_samples(a.n);
        auto e = crown_volume_mc(a.n, a.p, N, a.seed, Proposal::dirichlet_half,
                                 worker_threads());
        r.estimate = e.estimate;
        r.std_error = e.std_error;
        r.n_samples = e.n_samples;
    }
    if (a.timing)
        r.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return r;
}

RunRecord run_disc(const VolumeArgs& a) {
    std::string method = a.method;
    if (method == "auto") {
        if (a.samples > 0) method = "mc";  // explicit sample count
        else method = a.n == 4 ? "closed" : (a.n <= 6 ? "quad" : "mc");
    }
    if (method == "quad" && (a.n < 4 || a.n > 6))
        throw CLI::ValidationError("--method quad supports disc n in {4,5,6}");
    if (method == "mc" && a.n < 4)
        throw CLI::ValidationError("--method mc supports disc n >= 4");

    RunRecord r;
    r.command = "volume.disc";
    r.params["n"] = std::to_string(a.n);
    r.params["method"] = method;
    r.seed = a.seed;
    auto t0 = std::chrono::steady_clock::now();
    if (method == "closed") {
        r.estimate = disc_closed(a.n);
        r.error_bound = 0.0;
    } else if (method == "quad") {
        auto q = disc_volume_quadrature(a.n);
        require_converged(q, a.n == 6 ? 1e-4 : 1e-8 + 1e-6 * std::abs(q.value));
        r.estimate = q.value;
        r.error_bound = q.abs_error_bound;
        r.evaluations = q.evaluations;
    } else {
        long long N = a.samples > 0 ? a.samples : default_mc_samples(a.n);
        auto e = disc_volume_mc(a.n, N, a.seed, worker_threads());
        r.estimate = e.estimate;
        r.std_error = e.std_error;
        r.n_samples = e.n_samples;
    }
    if (a.timing)
        r.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return r;
}

struct SweepArgs {
    int n = 3;
    double pmin = 0.1, pmax = 10.0;
    int steps = 20;
    std::string out;
    long long samples = 0;
    std::uint64_t seed = 1;
    std::string method = "auto";
    bool as_json = false;
};

int run_sweep(const SweepArgs& s) {
    std::ostringstream body;
    json rows = json::array();
    body << "n,P,estimate,stderr,method,seed,asymptote,smallp_limit\n";
    // small-P limit (n/2^n) q_n, known in closed form for n = 3, 4
    std::optional<double> smallp;
    if (s.n == 3) smallp = 3.0 / 8.0 * q3_closed();
    if (s.n == 4) smallp = 4.0 / 16.0 * q4_closed();

    for (int k = 0; k < s.steps; ++k) {
        double P = s.pmin + (s.pmax - s.pmin) * k / static_cast<double>(s.steps - 1);
        VolumeArgs a;
        a.n = s.n;
        a.p = P;
        a.samples = s.samples;
        a.seed = s.seed;
        a.method = s.method;
        auto r = run_crown(a);
        double se = r.std_error ? *r.std_error : (r.error_bound ? *r.error_bound : 0.0);
        double asym = crown_asymptote_large_P(s.n, P);
        body << s.n << "," << fmt(P) << "," << fmt(r.estimate) << "," << fmt(se) << ","
             << r.params["method"] << "," << s.seed << "," << fmt(asym) << ","
             << (smallp ? fmt(*smallp) : "") << "\n";
        rows.push_back({{"n", s.n},
                        {"P", P},
                        {"estimate", r.estimate},
                        {"stderr", se},
                        {"method", r.params["method"]},
                        {"seed", s.seed},
                        {"asymptote", asym},
                        {"smallp_limit", smallp ? json(*smallp) : json()}});
    }

    std::string payload = s.as_json ? rows.dump(2) + "\n" : body.str();
    if (s.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(s.out);
        if (!f || !(f << payload)) {
            std::cerr << "failed to write " << s.out << "\n";
            return 4;
        }
    }
    return 0;
}

int run_check(const std::string& suite, bool as_json) {
    std::vector<CheckResult> results;
    if (suite == "specfun") results = check_specfun();
    else if (suite == "poisson") results = check_poisson();
    else if (suite == "geometry") results = check_geometry();
    else if (suite == "continuum") results = check_continuum();
    else results = check_all();

    bool all_pass = true;
    json rows = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (as_json) {
            rows.push_back({{"name", r.name},
                            {"residual", r.residual},
                            {"tolerance", r.tolerance},
                            {"pass", r.pass}});
        } else {
            std::printf("[%s] %-55s residual=%-12.3e tol=%.1e\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.residual, r.tolerance);
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moduli-space volumes of crowned boundaries and cusped discs"};
    app.require_subcommand(1);

    VolumeArgs va;
    SweepArgs sa;
    std::string suite = "all";
    bool check_json = false;

    auto* volume = app.add_subcommand("volume", "Compute one volume");
    volume->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd, bool with_p) {
        cmd->add_option("--n", va.n, "Number of bordered cusps")->required();
        if (with_p)
            cmd->add_option("--p", va.p, "Boundary perimeter")
                ->check(CLI::PositiveNumber);
        cmd->add_option("--samples", va.samples, "Monte Carlo sample count");
        cmd->add_option("--seed", va.seed, "RNG seed");
        cmd->add_option("--method", va.method, "mc|quad|closed (default: best available)")
            ->check(CLI::IsMember({"auto", "mc", "quad", "closed"}));
        cmd->add_flag("--json", va.as_json, "Emit the record as JSON");
        cmd->add_flag("--timing", va.timing, "Include wall_time_ms in the record");
    };
    auto* crown = volume->add_subcommand("crown", "Crown volume V_{n,P}");
    add_common(crown, true);
    auto* disc = volume->add_subcommand("disc", "Disc volume V_n");
    add_common(disc, false);

    auto* sweep = app.add_subcommand("sweep", "Crown volume sweep over P (CSV)");
    sweep->add_option("--n", sa.n, "Number of bordered cusps")->required();
    sweep->add_option("--pmin", sa.pmin, "Smallest perimeter")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--pmax", sa.pmax, "Largest perimeter")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--steps", sa.steps, "Number of rows")
        ->required()
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--out", sa.out, "Output CSV path (default: stdout)");
    sweep->add_option("--samples", sa.samples, "Monte Carlo sample count");
    sweep->add_option("--seed", sa.seed, "RNG seed");
    sweep->add_option("--method", sa.method, "mc|quad|closed")
        ->check(CLI::IsMember({"auto", "mc", "quad", "closed"}));
    sweep->add_flag("--json", sa.as_json, "Emit rows as JSON instead of CSV");

    auto* check = app.add_subcommand("check", "Run an identity/convergence suite");
    check->add_option("--suite", suite, "specfun|poisson|geometry|continuum|all")
        ->check(CLI::IsMember({"specfun", "poisson", "geometry", "continuum", "all"}));
    check->add_flag("--json", check_json, "Emit results as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (crown->parsed()) {
            if (va.n < 1) throw CLI::ValidationError("--n must be >= 1");
            print_record(run_crown(va), va.as_json);
            return 0;
        }
        if (disc->parsed()) {
            if (va.n < 4) throw CLI::ValidationError("--n must be >= 4 for the disc");
            print_record(run_disc(va), va.as_json);
            return 0;
        }
        if (sweep->parsed()) {
            if (sa.pmax < sa.pmin) throw CLI::ValidationError("--pmax must be >= --pmin");
            return run_sweep(sa);
        }
        if (check->parsed()) return run_check(suite, check_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 2;
}
