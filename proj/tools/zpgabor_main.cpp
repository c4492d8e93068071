// zpgabor: constructors, verifiers and searches for Gabor systems over Z_p^d,
// with exact cyclotomic arithmetic and JSON I/O.
//
// Exit codes: 0 = pass, 1 = verdict failed (witness in the JSON),
// 2 = usage error or precondition violation.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zpgabor/fourier.hpp"
#include "zpgabor/gabor.hpp"
#include "zpgabor/json_io.hpp"
#include "zpgabor/pairs.hpp"
#include "zpgabor/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace zpgabor;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void emit_error(const std::string& code, const std::string& message, json context = nullptr) {
    json err = {{"code", code}, {"message", message}};
    if (!context.is_null()) err["context"] = context;
    std::cerr << err.dump(2) << "\n";
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        json_io::write_json_file(out_path, j);
    }
}

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case VerdictStatus::pass: return kExitPass;
        case VerdictStatus::fail: return kExitFail;
        case VerdictStatus::precondition: return kExitError;
    }
    return kExitError;
}

PointSet load_set(const std::string& path) { return json_io::point_set_from_json(json_io::read_json_file(path)); }
Window load_window(const std::string& path) { return json_io::window_from_json(json_io::read_json_file(path)); }

Point parse_point(const GroupParams& g, const std::string& csv) {
    std::vector<std::int64_t> coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stoll(item));
    return make_point(g, coords);
}

std::vector<Rational> parse_alphabet(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    return out;
}

// ---- construct -----------------------------------------------------------------

int run_construct(const std::string& name, std::uint32_t p, const std::string& set_path,
                  const std::string& f_path, const std::string& h_path, const std::string& out,
                  const std::string& b_out, const std::string& a_out) {
    if (name == "gauss") {
        emit(json_io::to_json(make_gauss_window(p)), out);
    } else if (name == "flat") {
        emit(json_io::to_json(make_flat_window(p)), out);
    } else if (name == "qr-row") {
        emit(json_io::to_json(make_qr_row_window(p)), out);
    } else if (name == "indicator") {
        if (set_path.empty()) throw std::invalid_argument("construct indicator requires --set");
        emit(json_io::to_json(indicator_window(load_set(set_path))), out);
    } else if (name == "product") {
        if (f_path.empty() || h_path.empty()) {
            throw std::invalid_argument("construct product requires --f1 and --f2");
        }
        emit(json_io::to_json(make_product_window(load_window(f_path), load_window(h_path))), out);
    } else if (name == "parabola-dual") {
        const ParabolaDual dual = make_parabola_dual_window(p);
        emit(json_io::to_json(dual.window), out);
        if (!b_out.empty()) json_io::write_json_file(b_out, json_io::to_json(dual.b));
        if (!a_out.empty()) json_io::write_json_file(a_out, json_io::to_json(dual.neg_a));
    } else {
        throw std::invalid_argument(
            "unknown constructor '" + name +
            "'; known: indicator, gauss, flat, product, qr-row, parabola-dual");
    }
    return kExitPass;
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string kind;
    std::string window_path, e_path, a_path, b_path, weight_path;
    std::string x_csv;
    std::uint32_t k = 1;
    std::string backend = "exact";
    bool strict_norm = false;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    if (args.backend != "exact" && args.backend != "float") {
        throw std::invalid_argument("--backend must be exact or float");
    }
    if (args.backend == "float" && args.kind != "gabor-basis") {
        throw std::invalid_argument("--backend float is only supported for verify gabor-basis");
    }
    Verdict v;
    if (args.kind == "spectral") {
        v = is_spectral_pair(load_set(args.e_path), load_set(args.b_path));
    } else if (args.kind == "tiling") {
        v = is_tiling_pair(load_set(args.e_path), load_set(args.a_path));
    } else if (args.kind == "packing") {
        v = is_packing(load_set(args.e_path), load_set(args.a_path));
    } else if (args.kind == "gabor-basis") {
        BasisCheckOptions opts;
        opts.normalization_insensitive = !args.strict_norm;
        if (args.backend == "float") {
            const FloatWindow w = json_io::float_window_from_json(json_io::read_json_file(args.window_path));
            v = is_orthonormal_basis(FloatGaborSystem(w, load_set(args.a_path), load_set(args.b_path)), opts);
        } else {
            v = is_orthonormal_basis(
                GaborSystem(load_window(args.window_path), load_set(args.a_path), load_set(args.b_path)),
                opts);
        }
    } else if (args.kind == "weighted-spectrum") {
        v = weighted_spectrum_check(WeightFn(load_window(args.weight_path)), load_set(args.b_path));
    } else if (args.kind == "square-sum") {
        const WeightFn w(load_window(args.weight_path));
        const PointSet b = load_set(args.b_path);
        if (args.x_csv.empty()) {
            v = square_sum_identity_all(w, b);
        } else {
            v = square_sum_identity(w, b, parse_point(w.params(), args.x_csv));
        }
    } else if (args.kind == "plancherel") {
        v = plancherel_check(load_window(args.window_path));
    } else if (args.kind == "thm14") {
        v = indicator_equivalence_check(load_set(args.e_path), load_set(args.a_path), load_set(args.b_path));
    } else if (args.kind == "thm15") {
        v = theorem15_check(load_window(args.window_path), load_set(args.a_path), load_set(args.b_path));
    } else if (args.kind == "thm16") {
        v = theorem16_check(load_window(args.window_path), load_set(args.a_path), load_set(args.b_path));
    } else if (args.kind == "thm17") {
        v = theorem17_check(load_window(args.window_path), args.k);
    } else if (args.kind == "duality") {
        const GaborSystem sys(load_window(args.window_path), load_set(args.a_path), load_set(args.b_path));
        const Verdict primal = is_orthonormal_basis(sys);
        const Verdict dual = is_orthonormal_basis(fourier_dual(sys));
        json cert = {{"primal", primal.passed()}, {"dual", dual.passed()}};
        if (primal.passed() == dual.passed()) {
            v = Verdict::ok(primal.passed() ? "both systems are orthonormal bases"
                                            : "neither system is an orthonormal basis",
                            cert);
        } else {
            v = Verdict::failure("duality violated: primal and dual verdicts differ",
                                 {{"primal", json_io::to_json(primal)}, {"dual", json_io::to_json(dual)}},
                                 cert);
        }
    } else {
        throw std::invalid_argument(
            "unknown verify kind '" + args.kind +
            "'; known: spectral, tiling, packing, gabor-basis, weighted-spectrum, square-sum, "
            "plancherel, thm14, thm15, thm16, thm17, duality");
    }

    emit(json_io::to_json(v), args.out);
    return verdict_exit(v);
}

// ---- search --------------------------------------------------------------------

struct SearchArgs {
    std::string kind;
    std::uint32_t p = 2;
    std::uint32_t d = 2;
    std::string e_path;
    std::string window_path;
    std::string alphabet;
    double budget = -1;       // double so "1e7" parses; floored into the node budget
    double time_budget = -1;  // seconds
    std::string shard = "0/1";
    std::string checkpoint, resume;
    bool no_float_prefilter = false;
    std::string out;

    SearchBudget node_budget() const {
        return SearchBudget{budget < 0 ? -1 : static_cast<std::int64_t>(budget), time_budget};
    }
};

ShardSpec parse_shard(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("--shard must be index/count");
    ShardSpec spec;
    spec.index = static_cast<std::uint32_t>(std::stoul(s.substr(0, slash)));
    spec.count = static_cast<std::uint32_t>(std::stoul(s.substr(slash + 1)));
    return spec;
}

int run_search(const SearchArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    json body;
    int exit_code = kExitPass;

    if (args.kind == "fuglede") {
        const Verdict v = fuglede_compare(GroupParams(args.p, 2));
        body = {{"kind", "fuglede"}, {"p", args.p}, {"verdict", json_io::to_json(v)}};
        exit_code = verdict_exit(v);
    } else if (args.kind == "tiles" || args.kind == "spectral") {
        const GroupParams g(args.p, args.d);
        const EnumerationReport r =
            args.kind == "tiles"
                ? enumerate_tiles(g, args.node_budget(), parse_shard(args.shard))
                : enumerate_spectral(g, args.node_budget(), parse_shard(args.shard));
        body = to_json(r);
        body["p"] = args.p;
        body["d"] = args.d;
    } else if (args.kind == "nonseparable") {
        if (args.window_path.empty()) {
            throw std::invalid_argument("search nonseparable requires --window");
        }
        body = to_json(nonseparable_hunt(load_window(args.window_path), args.node_budget()));
    } else if (args.kind == "find-spectrum" || args.kind == "find-tiling") {
        const PointSet e = load_set(args.e_path);
        const auto found =
            args.kind == "find-spectrum" ? find_spectrum(e) : find_tiling_complement(e);
        if (found) {
            body = {{"kind", args.kind}, {"found", true}, {"set", json_io::to_json(*found)}};
        } else {
            body = {{"kind", args.kind}, {"found", false}};
            exit_code = kExitFail;
        }
    } else if (args.kind == "question1") {
        Question1Config cfg;
        cfg.params = GroupParams(args.p, args.d);
        if (args.alphabet.empty()) throw std::invalid_argument("search question1 requires --alphabet");
        cfg.alphabet = parse_alphabet(args.alphabet);
        cfg.budget = args.node_budget();
        cfg.shard = parse_shard(args.shard);
        cfg.float_prefilter = !args.no_float_prefilter;
        cfg.checkpoint_path = args.checkpoint;
        cfg.resume_path = args.resume;
        const Question1Report r = question1_hunt(cfg);
        body = to_json(r);
        body["job"] = to_json(cfg);
    } else {
        throw std::invalid_argument(
            "unknown search kind '" + args.kind +
            "'; known: fuglede, tiles, spectral, find-spectrum, find-tiling, question1, nonseparable");
    }

    const auto t1 = std::chrono::steady_clock::now();
    body["wall_time_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    emit(body, args.out);
    return exit_code;
}

// ---- report --------------------------------------------------------------------

int run_report(const std::string& in_path) {
    const json j = json_io::read_json_file(in_path);
    if (j.contains("status") && j.contains("passed")) {
        const std::string status = j["status"].get<std::string>();
        std::cout << (j["passed"].get<bool>() ? "PASS" : (status == "fail" ? "FAIL" : "ERROR"))
                  << "  " << j.value("detail", "") << "\n";
        if (j.contains("witness")) std::cout << "witness: " << j["witness"].dump() << "\n";
        if (j.contains("certificate")) std::cout << "certificate: " << j["certificate"].dump() << "\n";
        return kExitPass;
    }
    if (j.contains("kind")) {
        std::cout << "search report: " << j["kind"].get<std::string>() << "\n";
        for (const auto& key : {"found_count", "hit_count", "nodes_visited", "examined", "exhausted"}) {
            if (j.contains(key)) std::cout << "  " << key << ": " << j[key].dump() << "\n";
        }
        if (j.contains("verdict")) {
            std::cout << "  verdict: " << (j["verdict"]["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
        return kExitPass;
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabor systems, spectral pairs and tiling pairs over Z_p^d in exact cyclotomic arithmetic"};
    app.require_subcommand(1);

    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for the parallel kernels (0 = default)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named window and write it as JSON");
    std::string c_name, c_set, c_f, c_h, c_out, c_bout, c_aout;
    std::uint32_t c_p = 5;
    construct->add_option("name", c_name, "indicator | gauss | flat | product | qr-row | parabola-dual")
        ->required();
    construct->add_option("--p", c_p, "prime modulus");
    construct->add_option("--set", c_set, "point-set JSON (indicator)");
    construct->add_option("--f1", c_f, "first factor window JSON (product)");
    construct->add_option("--f2", c_h, "second factor window JSON (product)");
    construct->add_option("--out", c_out, "output path (default: stdout)");
    construct->add_option("--b-out", c_bout, "where to write the spectrum B (parabola-dual)");
    construct->add_option("--a-out", c_aout, "where to write -A (parabola-dual)");

    // verify
    auto* verify = app.add_subcommand("verify", "decide a property and exit 0/1/2");
    VerifyArgs v_args;
    verify->add_option("kind", v_args.kind, "spectral | tiling | packing | gabor-basis | weighted-spectrum | square-sum | plancherel | thm14 | thm15 | thm16 | thm17 | duality")
        ->required();
    verify->add_option("--window", v_args.window_path, "window JSON");
    verify->add_option("--E", v_args.e_path, "set E JSON");
    verify->add_option("--A", v_args.a_path, "translation set JSON");
    verify->add_option("--B", v_args.b_path, "modulation set JSON");
    verify->add_option("--weight", v_args.weight_path, "nonnegative rational window JSON");
    verify->add_option("--x", v_args.x_csv, "point for square-sum, e.g. \"1,2\" (default: all x)");
    verify->add_option("--k", v_args.k, "subspace split for thm17");
    verify->add_option("--backend", v_args.backend, "exact | float (float is non-authoritative)");
    verify->add_flag("--strict-norm", v_args.strict_norm, "require exact unit norm instead of the scale-free check");
    verify->add_option("--out", v_args.out, "write the verdict JSON here instead of stdout");

    // search
    auto* search = app.add_subcommand("search", "enumerations and hunts; reports as JSON");
    SearchArgs s_args;
    search->add_option("kind", s_args.kind,
                       "fuglede | tiles | spectral | find-spectrum | find-tiling | question1 | nonseparable")
        ->required();
    search->add_option("--p", s_args.p, "prime modulus");
    search->add_option("--d", s_args.d, "dimension");
    search->add_option("--E", s_args.e_path, "set E JSON (find-spectrum / find-tiling)");
    search->add_option("--window", s_args.window_path, "window JSON (nonseparable)");
    search->add_option("--alphabet", s_args.alphabet, "comma-separated rationals, e.g. \"0,1,-1,2,-2\"");
    search->add_option("--budget", s_args.budget, "max nodes (default: unlimited)");
    search->add_option("--time-budget", s_args.time_budget, "max wall-clock seconds (default: unlimited)");
    search->add_option("--shard", s_args.shard, "index/count residue split (default 0/1)");
    search->add_option("--checkpoint", s_args.checkpoint, "checkpoint file (question1)");
    search->add_option("--resume", s_args.resume, "resume from checkpoint file (question1)");
    search->add_flag("--no-float-prefilter", s_args.no_float_prefilter, "disable the float screen");
    search->add_option("--out", s_args.out, "write the report JSON here instead of stdout");

    // fourier
    auto* fourier = app.add_subcommand("fourier", "transform a window");
    std::string f_window, f_out;
    bool f_inverse = false;
    fourier->add_option("--window", f_window, "window JSON")->required();
    fourier->add_flag("--inverse", f_inverse, "apply the inverse transform");
    fourier->add_option("--out", f_out, "output path (default: stdout)");

    // report
    auto* report = app.add_subcommand("report", "render a verdict or search report as text");
    std::string r_in;
    report->add_option("--in", r_in, "JSON file to render")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return kExitError;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (construct->parsed()) {
            return run_construct(c_name, c_p, c_set, c_f, c_h, c_out, c_bout, c_aout);
        }
        if (verify->parsed()) return run_verify(v_args);
        if (search->parsed()) return run_search(s_args);
        if (fourier->parsed()) {
            const Window w = load_window(f_window);
            emit(json_io::to_json(f_inverse ? idft(w) : dft(w)), f_out);
            return kExitPass;
        }
        if (report->parsed()) return run_report(r_in);
    } catch (const std::invalid_argument& e) {
        emit_error("precondition", e.what());
        return kExitError;
    } catch (const std::domain_error& e) {
        emit_error("precondition", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        emit_error("error", e.what());
        return kExitError;
    }
    return kExitError;
}
