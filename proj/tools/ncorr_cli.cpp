// Command-line front end of the workbench.  Parses flags and an optional flat
// key = value configuration file, forwards everything through the C API,
// prints the human table to standard output, and writes the structured
// records to the output path (standard output when none is given).

#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ncorr/ncorr.h"

namespace {

int exit_code_for(int status) {
    switch (status) {
        case NCORR_ERR_POLE:
        case NCORR_ERR_TAIL:
        case NCORR_ERR_STRIP:
        case NCORR_ERR_NUMERICAL:
            return 3;
        default:
            return 2;
    }
}

bool apply(ncorr_ctx* ctx, const std::string& key, const std::string& value) {
    if (ncorr_set(ctx, key.c_str(), value.c_str()) != NCORR_OK) {
        std::cerr << "config error: " << ncorr_last_error(ctx) << "\n";
        return false;
    }
    return true;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool load_config_file(ncorr_ctx* ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "config error: cannot open " << path << "\n";
        return false;
    }
    std::string line;
    long ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            std::cerr << "config error: " << path << ":" << ln << ": expected key = value\n";
            return false;
        }
        if (!apply(ctx, trim(t.substr(0, eq)), trim(t.substr(eq + 1)))) return false;
    }
    return true;
}

struct opt_map {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr opt_map kOptions[] = {
    {"--n", "n", "tuple arity (1..3 for most methods)"},
    {"--N", "N", "matrix size"},
    {"--T", "T", "weight dilation"},
    {"--q", "q", "support parameter of Phi; q = 1 is the proven truncation range"},
    {"--phi-width", "phi_width", "per-coordinate bump half-width s (default derived from q)"},
    {"--phi-eps", "phi_eps", "support safety margin eps, requires n s <= 2q - eps"},
    {"--phi-amp", "phi_amp", "Phi amplitude"},
    {"--g-width", "g_width", "weight half-widths, comma list broadcast to n"},
    {"--g-amp", "g_amp", "weight amplitudes, comma list broadcast to n"},
    {"--delta", "delta", "contour line offset"},
    {"--tmax", "tmax", "zero-ordinate height cutoff, 0 = whole dataset"},
    {"--nodes", "nodes", "per-axis node override for the f factor, 0 = automatic"},
    {"--matrices", "matrices", "Monte Carlo sample count"},
    {"--seed", "seed", "sampler seed"},
    {"--zeros", "zeros", "zero-ordinate file for zeta and plotdata"},
    {"--out", "out", "records output path (default: standard output)"},
    {"--tolerance", "tolerance", "pass threshold: sigma units for compare, relative for zeta"},
    {"--force-conjectural", "force_conjectural", "allow support beyond the proven range (0/1)"},
    {"--methods", "methods", "comma subset of mc,determinant,contour,contour_q1,rs_main"},
    {"--parallel", "parallel", "run compare methods concurrently (0/1)"},
    {"--mode", "mode", "n-correlation scale: effective or global"},
    {"--pair-mode", "pair_mode", "pair statistic scale: unfolded or global"},
    {"--fejer-beta", "fejer_beta", "Fejer profile frequency width"},
    {"--umax", "umax", "plotdata histogram window"},
    {"--bins", "bins", "plotdata histogram bins"},
    {"--trials", "trials", "verify-jstar random tuple count"},
    {"--deltas", "deltas", "decay line offsets, comma list (default ladder from --delta)"},
    {"--stratum", "stratum", "decay stratum size"},
    {"--tail-tol", "tail_tol", "contour envelope cut level"},
    {"--cache-dir", "cache_dir", "sample cache root (or NCORR_CACHE_DIR)"},
    {"--sample-cache", "sample_cache", "explicit sample cache file"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("band-limited n-correlation workbench (") + ncorr_version() + ")"};
    std::string command = "compare";
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");
    app.add_option("--command", command,
                   "compare | sample | verify-jstar | decay | zeta | plotdata");

    constexpr std::size_t kCount = sizeof(kOptions) / sizeof(kOptions[0]);
    std::vector<std::string> vals(kCount);
    std::vector<CLI::Option*> handles(kCount);
    for (std::size_t i = 0; i < kCount; ++i)
        handles[i] = app.add_option(kOptions[i].flag, vals[i], kOptions[i].help);

    CLI11_PARSE(app, argc, argv);

    ncorr_ctx* ctx = ncorr_ctx_new();
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return 2;
    }
    if (!config_path.empty() && !load_config_file(ctx, config_path)) {
        ncorr_ctx_free(ctx);
        return 2;
    }
    for (std::size_t i = 0; i < kCount; ++i)
        if (handles[i]->count() > 0 && !apply(ctx, kOptions[i].key, vals[i])) {
            ncorr_ctx_free(ctx);
            return 2;
        }

    char* records = nullptr;
    char* table = nullptr;
    int code = 0;
    int status = ncorr_run(ctx, command.c_str(), &records, &table, &code);
    if (status != NCORR_OK) {
        std::cerr << "error: " << ncorr_last_error(ctx) << "\n";
        ncorr_ctx_free(ctx);
        return exit_code_for(status);
    }

    std::string out_path;
    char* outv = nullptr;
    if (ncorr_get(ctx, "out", &outv) == NCORR_OK) {
        out_path = outv;
        ncorr_string_free(outv);
    }
    bool ok = true;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            ok = false;
        } else {
            f << records;
        }
    } else {
        std::cout << records;
    }
    std::cout << table;
    ncorr_string_free(records);
    ncorr_string_free(table);
    ncorr_ctx_free(ctx);
    return ok ? code : 2;
}
