// Command-line front end: verification sweeps, extensions, DtN outputs and the Sobolev ratio.

#include "fractrace/extension.hpp"
#include "fractrace/inequalities.hpp"
#include "fractrace/suite.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fractrace;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

GammaParams parse_gamma(const std::string& text, int n) {
    try {
        return GammaParams::parse(text, n);
    } catch (const std::exception& e) {
        throw ConfigError("invalid gamma '" + text + "': " + e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file_atomic(out, text);
}

GridField read_input(const std::string& path, double box_length) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
        if (!(box_length > 0)) throw ConfigError("csv input needs --box-length");
        return load_csv(path, box_length);
    }
    return load_grid(path);
}

std::vector<GridField> read_data(const GammaParams& p, const std::vector<std::string>& inputs, double box_length) {
    const std::size_t need = dirichlet_indices(p).size();
    if (inputs.size() != need)
        throw ConfigError("gamma " + p.label() + " needs " + std::to_string(need) + " Dirichlet input files, got " +
                          std::to_string(inputs.size()));
    std::vector<GridField> data;
    for (const auto& path : inputs) data.push_back(read_input(path, box_length));
    return data;
}

void apply_thread_limit() {
#ifdef _OPENMP
    if (const char* env = std::getenv("FRACTRACE_THREADS")) {
        char* end = nullptr;
        long t = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || t < 1) throw ConfigError("FRACTRACE_THREADS must be a positive integer");
        omp_set_num_threads(static_cast<int>(t));
    }
#endif
}

nlohmann::ordered_json summary_base(const std::string& command, const GammaParams& p, const GridField& g) {
    nlohmann::ordered_json s;
    s["schema"] = 1;
    s["command"] = command;
    s["gamma"] = p.label();
    s["n"] = g.n;
    s["shape"] = g.shape;
    s["box_length"] = g.box_length;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher-order fractional Laplacian extensions: verification and tools"};
    app.require_subcommand(1);

    std::string gammas, only, format = "json", out;
    int n = 1;
    auto* verify = app.add_subcommand("verify", "run the identity and numerical suites");
    verify->add_option("--gamma", gammas, "comma-separated gamma values (default sweep when omitted)");
    verify->add_option("--n", n, "boundary dimension")->check(CLI::IsMember({1, 2}));
    verify->add_option("--only", only, "identities or numeric")->check(CLI::IsMember({"identities", "numeric"}));
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out, "report path (stdout when omitted)");

    std::string gamma_one, out_path, index_name;
    std::vector<std::string> inputs;
    std::vector<double> heights;
    double box_length = 0;
    auto* extend = app.add_subcommand("extend", "solve the extension problem and sample it at given heights");
    extend->add_option("--gamma", gamma_one)->required();
    extend->add_option("--in", inputs, "Dirichlet data files in data order")->required()->delimiter(',');
    extend->add_option("--y", heights, "heights y > 0")->required()->delimiter(',');
    extend->add_option("--out", out_path, "output prefix")->required();
    extend->add_option("--box-length", box_length, "box length for csv input");

    auto* dtn = app.add_subcommand("dtn", "Neumann-family boundary output of the extension");
    dtn->add_option("--gamma", gamma_one)->required();
    dtn->add_option("--in", inputs, "Dirichlet data files in data order")->required()->delimiter(',');
    dtn->add_option("--out", out_path, "output grid path")->required();
    dtn->add_option("--index", index_name, "Neumann operator order such as 3/2 (default: the highest)");
    dtn->add_option("--box-length", box_length, "box length for csv input");

    std::string power_text;
    auto* fraclap = app.add_subcommand("fraclap", "FFT fractional Laplacian of a grid");
    fraclap->add_option("--power", power_text)->required();
    fraclap->add_option("--in", inputs)->required()->expected(1);
    fraclap->add_option("--out", out_path)->required();
    fraclap->add_option("--box-length", box_length, "box length for csv input");

    std::string bubble_text = "eps=1";
    double h = 0.25, L = 128.0;
    auto* sharp = app.add_subcommand("sharpness", "sharp Sobolev ratio for a bubble and bump perturbations");
    sharp->add_option("--gamma", gamma_one, "fractional order of the pairing")->required();
    sharp->add_option("--n", n)->check(CLI::IsMember({1, 2}));
    sharp->add_option("--bubble", bubble_text, "eps=<e>[,a=<a>][,xi=<x>:<y>]");
    sharp->add_option("--spacing", h, "grid spacing");
    sharp->add_option("--L", L, "coarse box length; the fine box is twice as long");
    sharp->add_option("--out", out, "report path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        apply_thread_limit();
        if (verify->parsed()) {
            std::vector<Rational> list;
            if (gammas.empty())
                list = default_gamma_sweep();
            else
                for (const auto& g : split(gammas, ',')) list.push_back(parse_gamma(g, n).gamma);
            SuiteOptions opt;
            opt.n = n;
            opt.identities = only != "numeric";
            opt.numeric = only != "identities";
            auto reports = run_suite(list, opt);
            emit(format == "json" ? report_to_json(reports) : report_to_csv(reports), out);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }
        if (extend->parsed()) {
            const GammaParams p = parse_gamma(gamma_one, 1);
            auto data = read_data(p, inputs, box_length);
            ExtensionSolution sol = solve_extension(p, data);
            auto summary = summary_base("extend", p, sol.grid);
            nlohmann::ordered_json files = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < heights.size(); ++i) {
                if (!(heights[i] > 0)) throw ConfigError("heights must be positive");
                const std::string path = out_path + "_y" + std::to_string(i) + ".bin";
                save_grid(sol.evaluate(heights[i]), path);
                files.push_back({{"y", heights[i]}, {"path", path}});
            }
            summary["outputs"] = files;
            summary["warnings"] = sol.warnings;
            write_file_atomic(out_path + "_summary.json", summary.dump(2) + "\n");
            return 0;
        }
        if (dtn->parsed()) {
            const GammaParams p = parse_gamma(gamma_one, 1);
            auto data = read_data(p, inputs, box_length);
            BIndex idx = neumann_indices(p).front();
            if (!index_name.empty()) {
                Rational order = parse_rational(index_name) * 2;
                try {
                    idx = BIndex::from_order(p, order);
                } catch (const std::exception& e) {
                    throw ConfigError(std::string("invalid --index: ") + e.what());
                }
            }
            ExtensionSolution sol = solve_extension(p, data);
            GridField result = dtn_apply(sol, idx);
            save_grid(result, out_path);
            auto summary = summary_base("dtn", p, result);
            summary["operator"] = idx.name(p);
            summary["output"] = out_path;
            summary["warnings"] = sol.warnings;
            write_file_atomic(out_path + ".summary.json", summary.dump(2) + "\n");
            return 0;
        }
        if (fraclap->parsed()) {
            const Rational power = parse_rational(power_text);
            if (power <= 0) throw ConfigError("--power must be positive");
            GridField f = read_input(inputs.front(), box_length);
            save_grid(fractional_laplacian_fft(f, to_double(power)), out_path);
            return 0;
        }
        if (sharp->parsed()) {
            Bubble b;
            b.n = n;
            b.gamma_tilde = to_double(parse_rational(gamma_one));
            for (const auto& kv : split(bubble_text, ',')) {
                auto pos = kv.find('=');
                if (pos == std::string::npos) throw ConfigError("bubble entries are key=value");
                const std::string key = kv.substr(0, pos), val = kv.substr(pos + 1);
                if (key == "eps")
                    b.epsilon = to_double(parse_rational(val));
                else if (key == "a")
                    b.a = to_double(parse_rational(val));
                else if (key == "xi")
                    for (const auto& c : split(val, ':')) b.xi.push_back(to_double(parse_rational(c)));
                else
                    throw ConfigError("unknown bubble key '" + key + "'");
            }
            try {
                b.validate();
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
            auto rep = sharp_sobolev_check(b, default_bumps(n), h, L);
            emit(report_to_json({rep}), out);
            return rep.pass ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const GridError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
