// Batch front end: evolve | asymptotic | sample | classify. Every file the tool
// emits is accompanied by a <file>.manifest.json recording the command, the
// effective parameters and checksums of the bytes written, with no timestamps,
// so identical invocations produce identical trees.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fermidec/fermidec.hpp"

namespace fs = std::filesystem;
namespace io = fermidec::io;
using nlohmann::json;

namespace {

// Exit codes: 2 bad state file, 3 quadrature failure, 4 unwritable output.
[[noreturn]] void fail(int code, const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    std::exit(code);
}

fermidec::AngMomState load_state(const std::string& path) {
    try {
        double deviation = 0.0;
        fermidec::AngMomState state = io::read_state_json(path, &deviation);
        if (deviation > 1e-6) {
            std::fprintf(stderr, "warning: state norm deviates from 1 by %.3g; renormalized\n",
                         deviation);
        }
        return state;
    } catch (const std::exception& e) {
        fail(2, "state file " + path + ": " + e.what());
    }
}

void write_or_die(const fs::path& path, const std::string& bytes) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(4, "cannot open " + path.string() + " for writing");
    file << bytes;
    file.flush();
    if (!file) fail(4, "write to " + path.string() + " failed");
}

using NamedOutput = std::pair<fs::path, const std::string*>;

void write_manifest(const fs::path& anchor, const std::string& command, const json& parameters,
                    const std::vector<NamedOutput>& outputs) {
    json manifest;
    manifest["command"] = command;
    manifest["version"] = fermidec::kVersion;
    manifest["parameters"] = parameters;
    manifest["outputs"] = json::array();
    for (const auto& [path, bytes] : outputs) {
        manifest["outputs"].push_back(
            {{"path", path.filename().string()}, {"fnv1a64", io::fnv1a64_hex(*bytes)}});
    }
    write_or_die(fs::path(anchor.string() + ".manifest.json"), manifest.dump(2) + "\n");
}

std::optional<double> parse_beta(const std::string& text) {
    if (text == "zero-temperature") return std::nullopt;
    return std::stod(text);
}

std::string beta_check(std::string& text) {
    if (text == "zero-temperature") return {};
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos == text.size() && v > 0.0) return {};
    } catch (...) {
    }
    return "expected a positive real or 'zero-temperature'";
}

struct EvolveOptions {
    std::string state;
    std::string channel = "dephasing";
    std::string beta = "1";
    double j0 = 8.0;
    double omega_c = 1.0;
    double quad_tol = 1e-10;
    bool strict = false;
    double gamma = 1.0;
    double t_min = 0.0;
    double t_max = 30.0;
    int points = 300;
    std::string grid = "linear";
    std::string out;
};

int cmd_evolve(const EvolveOptions& opt) {
    const fermidec::AngMomState state = load_state(opt.state);

    fermidec::TimeGrid grid;
    grid.t_min = opt.t_min;
    grid.t_max = opt.t_max;
    grid.points = opt.points;
    grid.spacing = opt.grid == "log" ? fermidec::TimeGrid::Spacing::Log
                                     : fermidec::TimeGrid::Spacing::Linear;

    std::vector<fermidec::SeriesRow> rows;
    const bool adc = opt.channel == "adc";
    if (adc) {
        rows = fermidec::adc_series(state, grid, fermidec::ADCParams{opt.gamma});
    } else {
        fermidec::BathParams bath;
        bath.j0 = opt.j0;
        bath.omega_c = opt.omega_c;
        bath.beta = parse_beta(opt.beta);
        bath.quad_rel_tol = opt.quad_tol;
        bath.strict_spectral_density = opt.strict;
        rows = fermidec::dephasing_series(fermidec::density_from_pure(state), grid, bath);
    }

    const std::string csv = io::timeseries_csv(rows, adc);
    const fs::path out(opt.out);
    write_or_die(out, csv);

    json params;
    params["state"] = opt.state;
    params["channel"] = opt.channel;
    params["t_min"] = opt.t_min;
    params["t_max"] = opt.t_max;
    params["points"] = opt.points;
    params["grid"] = opt.grid;
    params["out"] = opt.out;
    if (adc) {
        params["gamma"] = opt.gamma;
    } else {
        params["beta"] = opt.beta;
        params["j0"] = opt.j0;
        params["omega_c"] = opt.omega_c;
        params["quad_rel_tol"] = opt.quad_tol;
        params["strict_spectral_density"] = opt.strict;
    }
    write_manifest(out, "evolve", params, {{out, &csv}});
    return 0;
}

int cmd_asymptotic(const std::string& state_path, const std::string& out_path) {
    const fermidec::AngMomState state = load_state(state_path);

    json report;
    report["K_inf"] = fermidec::asymptotic_coherence(state);
    report["Cf_inf"] = fermidec::asymptotic_concurrence(state);
    try {
        report["P"] = fermidec::persistence(state);
    } catch (const fermidec::ZeroInitialEntanglement&) {
        report["P"] = nullptr;
    }
    report["label"] = std::string(to_string(fermidec::classify_subspace(state)));

    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    const fs::path out(out_path);
    write_or_die(out, text);
    json params;
    params["state"] = state_path;
    params["out"] = out_path;
    write_manifest(out, "asymptotic", params, {{out, &text}});
    return 0;
}

struct SampleOptions {
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    bool enforce_order = true;
    std::string out;
};

int cmd_sample(const SampleOptions& opt) {
    fermidec::SamplerConfig config;
    config.n_samples = opt.n;
    config.seed = opt.seed;
    config.enforce_order = opt.enforce_order;

    const std::vector<fermidec::PersistenceRecord> records = fermidec::run_atlas(config);

    std::uint64_t persistent = 0;
    std::uint64_t full = 0;
    double worst_bound = 0.0;
    for (const auto& rec : records) {
        if (rec.p_ratio && *rec.p_ratio > 0.0) ++persistent;
        if (rec.p_ratio && std::abs(*rec.p_ratio - 1.0) <= 1e-9) ++full;
        worst_bound = std::max(worst_bound, 2.0 * (rec.x + rec.y) + rec.z - 1.0);
    }

    json summary;
    summary["n"] = opt.n;
    summary["seed"] = opt.seed;
    summary["enforce_order"] = opt.enforce_order;
    summary["fraction_p_positive"] = static_cast<double>(persistent) / static_cast<double>(opt.n);
    summary["fraction_p_one"] = static_cast<double>(full) / static_cast<double>(opt.n);
    summary["max_tetrahedron_violation"] = std::max(0.0, worst_bound);

    const std::string csv = io::atlas_csv(records);
    const std::string summary_text = summary.dump(2) + "\n";

    const fs::path out(opt.out);
    fs::path summary_path = out;
    summary_path.replace_extension(".summary.json");

    write_or_die(out, csv);
    write_or_die(summary_path, summary_text);
    std::fputs(summary_text.c_str(), stdout);

    json params;
    params["n"] = opt.n;
    params["seed"] = opt.seed;
    params["enforce_order"] = opt.enforce_order;
    params["out"] = opt.out;
    write_manifest(out, "sample", params, {{out, &csv}, {summary_path, &summary_text}});
    return 0;
}

int cmd_classify(const std::string& state_path, double tol) {
    const fermidec::AngMomState state = load_state(state_path);
    const auto label = fermidec::classify_subspace(state, tol);
    std::printf("%s\n", std::string(to_string(label)).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decoherence dynamics of two indistinguishable fermions"};
    app.require_subcommand(1);

    EvolveOptions ev;
    auto* evolve = app.add_subcommand("evolve", "write a time series CSV of Cf, K, SvN, purity");
    evolve->add_option("--state", ev.state, "input state JSON")->required();
    evolve->add_option("--channel", ev.channel, "dephasing or adc")
        ->check(CLI::IsMember({"dephasing", "adc"}));
    evolve->add_option("--beta", ev.beta, "inverse temperature (1/omega_c units) or 'zero-temperature'")
        ->check(CLI::Validator(beta_check, "BETA"));
    evolve->add_option("--j0", ev.j0, "bath coupling");
    evolve->add_option("--omega-c", ev.omega_c, "bath cutoff")->check(CLI::PositiveNumber);
    evolve->add_option("--quad-tol", ev.quad_tol, "quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    evolve->add_flag("--strict-spectral-density", ev.strict,
                     "keep the literal 4*j0 spectral prefactor");
    evolve->add_option("--gamma", ev.gamma, "adc decay rate")->check(CLI::NonNegativeNumber);
    evolve->add_option("--t-min", ev.t_min)->check(CLI::NonNegativeNumber);
    evolve->add_option("--t-max", ev.t_max)->check(CLI::NonNegativeNumber);
    evolve->add_option("--points", ev.points)->check(CLI::PositiveNumber);
    evolve->add_option("--grid", ev.grid)->check(CLI::IsMember({"linear", "log"}));
    evolve->add_option("--out", ev.out, "output CSV path")->required();

    std::string as_state, as_out;
    auto* asymptotic = app.add_subcommand("asymptotic", "surviving coherence and concurrence");
    asymptotic->add_option("--state", as_state, "input state JSON")->required();
    asymptotic->add_option("--out", as_out, "output JSON path (stdout when omitted)");

    SampleOptions sa;
    auto* sample = app.add_subcommand("sample", "Monte Carlo persistence atlas CSV");
    sample->add_option("--n", sa.n, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", sa.seed);
    sample->add_flag("--enforce-order,!--no-enforce-order", sa.enforce_order,
                     "swap alpha3/alpha6 so alpha3 >= alpha6");
    sample->add_option("--out", sa.out, "output CSV path")->required();

    std::string cl_state;
    double cl_tol = 1e-12;
    auto* classify = app.add_subcommand("classify", "print the subspace label");
    classify->add_option("--state", cl_state, "input state JSON")->required();
    classify->add_option("--tol", cl_tol, "support threshold")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (evolve->parsed()) return cmd_evolve(ev);
        if (asymptotic->parsed()) return cmd_asymptotic(as_state, as_out);
        if (sample->parsed()) return cmd_sample(sa);
        if (classify->parsed()) return cmd_classify(cl_state, cl_tol);
    } catch (const fermidec::QuadratureFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
