// tdet: determinants, identity suites and spectral scans for rational symbols.
//
// Exit codes: 0 success, 1 singular/numerical failure, 2 invalid input or
// unsupported option, 3 cross-check mismatch.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "toeplitz/day_toeplitz.hpp"
#include "toeplitz/fredholm.hpp"
#include "toeplitz/identities.hpp"
#include "toeplitz/io.hpp"
#include "toeplitz/matrix.hpp"
#include "toeplitz/spectra.hpp"
#include "toeplitz/th_formula.hpp"

using namespace toeplitz;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr double kOracleTolerance = 1e-9;

struct RunConfig {
    std::string symbol;
    long n = 0;
    std::string backend;
    long truncation = 0;
    std::string window = "-1,2,-1.5,1.5";
    int resolution = 200;
    double threshold = 1e-3;
    std::string out;
    std::string perturb;
    std::string kind = "th";
    std::string method;
    bool terms = false;
    bool oracle = false;
    bool compare = false;
    std::uint64_t seed = 7;
    int trials = 50;
    int samples = 4096;
};

class Mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Parameter form of the input together with the constant K such that
// phi = K * (parameter form); zero/pole forms are converted.
struct Loaded {
    RationalSymbol<GaussianRational> symbol;
    GaussianRational factor{1};
};

Loaded load(const RunConfig& cfg) {
    const auto in = load_symbol(cfg.symbol);
    Loaded out;
    if (in.day) {
        const auto conv = day_to_bc(*in.day);
        out.symbol = conv.symbol;
        out.factor = conv.prefactor_base;
    } else {
        out.symbol = *in.bc;
    }
    if (!cfg.perturb.empty()) out.symbol = perturb(out.symbol, parse_scalar(cfg.perturb));
    return out;
}

void require_float_backend(const RunConfig& cfg, const char* command) {
    if (!cfg.backend.empty() && cfg.backend != "float")
        throw ValidationError(std::string("backend '") + cfg.backend + "' is not available for " + command +
                              " (float only)");
}

bool exact_backend(const RunConfig& cfg) {
    if (cfg.backend.empty() || cfg.backend == "exact") return true;
    if (cfg.backend == "float") return false;
    throw ValidationError("unknown backend '" + cfg.backend + "' (exact | float)");
}

template <Scalar T>
void oracle_line(std::ostream& os, const T& value, const T& oracle) {
    const double err = relative_error(value, oracle);
    bool match;
    if constexpr (is_exact_v<T>)
        match = value == oracle;
    else
        match = err <= kOracleTolerance;
    if (match) {
        os << " | oracle: match";
        if constexpr (!is_exact_v<T>) os << " (rel. err " << fmt(err) << ")";
        os << '\n';
        return;
    }
    os << " | oracle: mismatch " << to_string(oracle) << " (rel. err " << fmt(err) << ")\n";
    std::cout << os.rdbuf();
    throw Mismatch("oracle mismatch");
}

template <Scalar T>
int run_det(const RunConfig& cfg, const RationalSymbol<T>& s, const T& factor) {
    const auto r = th_det(s, cfg.n, cfg.terms);
    const T scale = ipow(factor, cfg.n);
    const T value = scale * r.value;
    std::ostringstream os;
    os << to_string(value);
    if (cfg.oracle)
        oracle_line(os, value, scale * det_lu(build_th(s, static_cast<std::size_t>(cfg.n))));
    else
        os << '\n';
    if (cfg.terms) os << terms_json(r) << '\n';
    std::cout << os.str();
    return 0;
}

int cmd_det(const RunConfig& cfg) {
    const auto in = load(cfg);
    if (exact_backend(cfg)) return run_det(cfg, in.symbol, in.factor);
    return run_det(cfg, to_float(in.symbol), from_exact<ComplexFloat>(in.factor));
}

template <Scalar T>
T toeplitz_value(const RunConfig& cfg, const std::string& method, const RationalSymbol<T>& s, const T& factor,
                 const std::optional<DayForm<T>>& day) {
    if (method == "day") {
        if (!day) throw ValidationError("method 'day' needs a zero/pole-form symbol");
        return day_det(*day, cfg.n).value;
    }
    if (method == "bc") return ipow(factor, cfg.n) * bc_toeplitz_det(s, cfg.n);
    if constexpr (!is_exact_v<T>) {
        if (method == "bocg") return ipow(factor, cfg.n) * bocg_det_toeplitz(s, cfg.n, cfg.truncation).value;
    }
    throw ValidationError("method '" + method + "' is not available with this backend");
}

template <Scalar T>
int run_toeplitz(const RunConfig& cfg, const RationalSymbol<T>& s, const T& factor,
                 const std::optional<DayForm<T>>& day) {
    std::vector<std::string> methods;
    if (cfg.method == "all") {
        if (day) methods.push_back("day");
        methods.push_back("bc");
        if constexpr (!is_exact_v<T>) methods.push_back("bocg");
    } else {
        methods.push_back(cfg.method.empty() ? (day ? "day" : "bc") : cfg.method);
    }
    const T oracle = ipow(factor, cfg.n) * det_lu(build_toeplitz(s, static_cast<std::size_t>(cfg.n)));
    for (const auto& m : methods) {
        const T value = toeplitz_value(cfg, m, s, factor, day);
        std::ostringstream os;
        if (methods.size() > 1) os << m << ": ";
        os << to_string(value);
        if (cfg.oracle)
            oracle_line(os, value, oracle);
        else
            os << '\n';
        std::cout << os.str();
    }
    return 0;
}

int cmd_toeplitz(const RunConfig& cfg) {
    const auto in = load_symbol(cfg.symbol);
    const auto loaded = load(cfg);
    if (exact_backend(cfg)) {
        if (cfg.method == "bocg") throw ValidationError("method 'bocg' is float only");
        return run_toeplitz(cfg, loaded.symbol, loaded.factor, in.day);
    }
    std::optional<DayForm<ComplexFloat>> day;
    if (in.day) day = to_float(*in.day);
    return run_toeplitz(cfg, to_float(loaded.symbol), from_exact<ComplexFloat>(loaded.factor), day);
}

int cmd_fredholm(const RunConfig& cfg) {
    require_float_backend(cfg, "fredholm");
    const auto in = load(cfg);
    const auto s = to_float(in.symbol);
    const ComplexFloat scale = ipow(from_exact<ComplexFloat>(in.factor), cfg.n);
    const auto be = be_det(s, cfg.n, cfg.truncation);
    const ComplexFloat value = scale * be.value;
    std::ostringstream os;
    os << to_string(value) << " | M = " << be.truncation;
    if (be.rank_one_value) os << " | rank-one: " << to_string(scale * *be.rank_one_value);
    if (cfg.oracle)
        oracle_line(os, value, scale * th_det(s, cfg.n, false).value);
    else
        os << '\n';
    std::cout << os.str();
    return 0;
}

int cmd_identities(const RunConfig& cfg) {
    if (!cfg.backend.empty()) throw ValidationError("identities run both backends; --backend is not accepted");
    if (cfg.trials < 1) throw ValidationError("--trials must be at least 1");
    const auto reports = run_identity_suites(cfg.seed, cfg.trials);
    std::cout << "seed " << cfg.seed << ", " << cfg.trials << " trials per suite\n";
    bool all = true;
    for (const auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%-44s %4d/%-4d max residual %.3e (tol %.0e)  %s\n", r.name.c_str(),
                      r.passed, r.trials, r.max_residual, r.tolerance, r.ok() ? "PASS" : "FAIL");
        std::cout << line;
        all = all && r.ok();
    }
    return all ? 0 : kExitMismatch;
}

Window parse_window(const std::string& text) {
    Window w;
    double v[4];
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &v[3], &extra) != 4)
        throw ValidationError("--window expects re_min,re_max,im_min,im_max");
    w.re_min = v[0];
    w.re_max = v[1];
    w.im_min = v[2];
    w.im_max = v[3];
    return w;
}

LocusKind parse_kind(const std::string& text) {
    if (text == "toeplitz" || text == "t") return LocusKind::toeplitz;
    if (text == "th") return LocusKind::th;
    throw ValidationError("kind must be toeplitz | th");
}

LaurentSymbol<ComplexFloat> float_laurent(const RunConfig& cfg) {
    const auto in = load_symbol(cfg.symbol);
    if (in.day) return to_laurent(to_float(*in.day));
    auto s = *in.bc;
    if (!cfg.perturb.empty()) s = perturb(s, parse_scalar(cfg.perturb));
    require_valid(s);
    return to_laurent(to_float(s));
}

void emit(const RunConfig& cfg, const std::function<void(std::ostream&)>& writer) {
    if (cfg.out.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw ValidationError("cannot write '" + cfg.out + "'");
    writer(file);
}

std::size_t flagged_count(const LocusScan& scan) {
    std::size_t count = 0;
    for (const auto& c : scan.samples) count += c.flag ? 1 : 0;
    return count;
}

int cmd_locus(const RunConfig& cfg) {
    require_float_backend(cfg, "locus");
    const auto s = float_laurent(cfg);
    const auto kind = parse_kind(cfg.kind);
    const auto window = parse_window(cfg.window);
    const auto scan = locus_scan(s, kind, window, cfg.resolution, cfg.threshold);
    emit(cfg, [&](std::ostream& os) { write_locus_csv(os, scan); });
    std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;
    log << "flagged cells: " << flagged_count(scan) << " of " << scan.samples.size()
        << " | refined crossings: " << scan.refined.size() << '\n';
    const auto curve = image_curve(s, 4096);
    double worst = 0.0;
    for (int iy = 0; iy < scan.resolution; ++iy)
        for (int ix = 0; ix < scan.resolution; ++ix)
            if (scan.samples[static_cast<std::size_t>(iy) * scan.resolution + ix].flag)
                worst = std::max(worst, distance_to_closed_curve(scan.cell_center(ix, iy), curve));
    log << "max flagged-cell distance to image curve: " << fmt(worst) << " (cell diameter "
        << fmt(scan.cell_diameter()) << ")\n";
    if (cfg.compare) {
        const auto other = locus_scan(s, kind == LocusKind::th ? LocusKind::toeplitz : LocusKind::th, window,
                                      cfg.resolution, cfg.threshold);
        std::size_t only_this = 0, only_other = 0;
        for (std::size_t i = 0; i < scan.samples.size(); ++i) {
            only_this += scan.samples[i].flag && !other.samples[i].flag;
            only_other += !scan.samples[i].flag && other.samples[i].flag;
        }
        log << "symmetric difference with the " << (kind == LocusKind::th ? "toeplitz" : "th")
            << " locus: " << only_this + only_other << " cells (" << only_this << " only here, " << only_other
            << " only there)\n";
    }
    return 0;
}

int cmd_eigs(const RunConfig& cfg) {
    require_float_backend(cfg, "eigs");
    const auto in = load(cfg);
    const auto s = to_float(in.symbol);
    if (!(in.factor == GaussianRational(1))) throw UnsupportedError("eigs takes parameter-form symbols");
    const auto kind = parse_kind(cfg.kind);
    std::unique_ptr<LocusScan> scan;
    if (cfg.compare)
        scan = std::make_unique<LocusScan>(
            locus_scan(to_laurent(s), kind, parse_window(cfg.window), cfg.resolution, cfg.threshold));
    const auto cloud = eig_cloud(s, cfg.n, kind, scan.get());
    emit(cfg, [&](std::ostream& os) { write_eigs_csv(os, cloud); });
    std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;
    log << "eigenvalues: " << cloud.values.size() << " | max distance to image curve: " << fmt(cloud.max_dist_curve)
        << " | eigensolver residual: " << fmt(cloud.residual) << '\n';
    log << "phi(1) = " << to_string(ComplexFloat(cloud.phi_at_one))
        << " | nearest eigenvalue distance: " << fmt(cloud.phi_one_distance) << '\n';
    return 0;
}

int cmd_curve(const RunConfig& cfg) {
    require_float_backend(cfg, "curve");
    const auto curve = image_curve(float_laurent(cfg), cfg.samples);
    emit(cfg, [&](std::ostream& os) { write_curve_csv(os, curve); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinants of Toeplitz and Toeplitz-plus-Hankel matrices with rational symbols"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto symbol_opt = [&](CLI::App* sub) {
        sub->add_option("--symbol", cfg.symbol, "symbol JSON file or inline JSON")->required();
    };
    auto n_opt = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1L, 1000000L));
    };
    auto backend_opt = [&](CLI::App* sub) { sub->add_option("--backend", cfg.backend, "exact | float"); };
    auto perturb_opt = [&](CLI::App* sub) {
        sub->add_option("--perturb", cfg.perturb, "add eps*m to the m-th parameter of A, B, D");
    };
    auto scan_opts = [&](CLI::App* sub) {
        sub->add_option("--window", cfg.window, "re_min,re_max,im_min,im_max")->capture_default_str();
        sub->add_option("--res", cfg.resolution, "grid resolution per axis")->capture_default_str();
        sub->add_option("--threshold", cfg.threshold, "relative gap threshold")->capture_default_str();
    };

    auto* det = app.add_subcommand("det", "det(T_n + H_n) by the subset-sum formula");
    symbol_opt(det);
    n_opt(det);
    backend_opt(det);
    perturb_opt(det);
    det->add_flag("--terms", cfg.terms, "print the (S, T) term breakdown as JSON");
    det->add_flag("--oracle", cfg.oracle, "cross-check against the LU determinant of the matrix");

    auto* toe = app.add_subcommand("toeplitz", "det T_n by the zero/pole form, the parameter form, or BOCG");
    symbol_opt(toe);
    n_opt(toe);
    backend_opt(toe);
    perturb_opt(toe);
    toe->add_option("--method", cfg.method, "day | bc | bocg | all");
    toe->add_option("--truncation", cfg.truncation, "BOCG truncation M (0 = adaptive)");
    toe->add_flag("--oracle", cfg.oracle, "cross-check against the LU determinant");

    auto* fred = app.add_subcommand("fredholm", "det(T_n + H_n) through the truncated operator determinant");
    symbol_opt(fred);
    n_opt(fred);
    backend_opt(fred);
    perturb_opt(fred);
    fred->add_option("--truncation", cfg.truncation, "window size M (0 = adaptive)");
    fred->add_flag("--oracle", cfg.oracle, "cross-check against the subset-sum formula");

    auto* ids = app.add_subcommand("identities", "randomized identity suites");
    ids->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    ids->add_option("--trials", cfg.trials, "trials per suite")->capture_default_str();
    backend_opt(ids);

    auto* loc = app.add_subcommand("locus", "modulus-gap locus on a grid of lambda values");
    symbol_opt(loc);
    backend_opt(loc);
    perturb_opt(loc);
    scan_opts(loc);
    loc->add_option("--kind", cfg.kind, "toeplitz | th")->capture_default_str();
    loc->add_option("--out", cfg.out, "CSV output path (stdout if omitted)");
    loc->add_flag("--compare", cfg.compare, "also scan the other kind and count differing cells");

    auto* eig = app.add_subcommand("eigs", "eigenvalues of T_n or T_n + H_n with distance diagnostics");
    symbol_opt(eig);
    n_opt(eig);
    backend_opt(eig);
    perturb_opt(eig);
    scan_opts(eig);
    eig->add_option("--which", cfg.kind, "toeplitz | th")->capture_default_str();
    eig->add_option("--out", cfg.out, "CSV output path (stdout if omitted)");
    eig->add_flag("--locus", cfg.compare, "scan the locus on --window/--res and report distances to it");

    auto* cur = app.add_subcommand("curve", "sampled image of the unit circle");
    symbol_opt(cur);
    backend_opt(cur);
    cur->add_option("--m", cfg.samples, "number of samples")->capture_default_str();
    cur->add_option("--out", cfg.out, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*det) return cmd_det(cfg);
        if (*toe) return cmd_toeplitz(cfg);
        if (*fred) return cmd_fredholm(cfg);
        if (*ids) return cmd_identities(cfg);
        if (*loc) return cmd_locus(cfg);
        if (*eig) return cmd_eigs(cfg);
        if (*cur) return cmd_curve(cfg);
    } catch (const Mismatch&) {
        return kExitMismatch;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
