#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "stiefelmw/version.hpp"

namespace {

using namespace stiefelmw;
using namespace stiefelmw::cli;

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Latex;
}

AxisSpec resolve_axis(const CLI::Option* single, int value, const CLI::Option* range,
                      const std::string& range_str, const char* name) {
    if (single->count() && range->count())
        throw std::invalid_argument(std::string("give either --") + name + " or --" + name +
                                    "-range, not both");
    if (single->count()) return {value, value};
    if (range->count()) {
        const auto colon = range_str.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument(std::string("--") + name + "-range expects FROM:TO");
        AxisSpec spec;
        try {
            spec.from = std::stoi(range_str.substr(0, colon));
            spec.to = std::stoi(range_str.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("--") + name + "-range expects FROM:TO");
        }
        if (spec.from > spec.to)
            throw std::invalid_argument(std::string("--") + name + "-range is empty");
        return spec;
    }
    throw std::invalid_argument(std::string("groups needs --") + name + " or --" + name +
                                "-range");
}

int emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_file << " for writing\n";
        return 1;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor-Witt motivic cohomology of Stiefel varieties: closed-form basis,\n"
                 "Thom-Gysin induction and formal motive expansion, with cross-checks."};
    app.name("stiefel-mw");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
    app.set_config("--config", "", "Read option defaults from a key=value file");

    std::string format = "plain";
    auto* format_opt = app.add_option("--format", format, "Output format")
                           ->check(CLI::IsMember({"plain", "json", "csv", "latex"}))
                           ->capture_default_str();
    std::string cone_shift = "derived";
    app.add_option("--cone-shift", cone_shift,
                   "Cone placement in odd hyper-sphere motives; crosscheck also accepts both")
        ->check(CLI::IsMember({"paper", "derived", "both"}))
        ->capture_default_str();
    std::vector<int> cone_square{1, 2};
    app.add_option("--cone-square", cone_square, "Extra twist,shift of the second cone in CxC")
        ->delimiter(',');
    bool no_negative_weight = false;
    app.add_flag("--no-negative-weight-vanishing", no_negative_weight,
                 "Keep motivic entries of negative weight symbolic");
    bool no_mw_subdiagonal = false;
    app.add_flag("--no-mw-subdiagonal-vanishing", no_mw_subdiagonal,
                 "Keep subdiagonal MW entries of negative weight symbolic");
    bool all = false;
    app.add_flag("--all", all, "Keep zero rows (groups) / agreeing pairs (crosscheck)");
    bool braced = false;
    app.add_flag("--braced", braced, "Display degrees in the (p,{q}) convention");
    std::string out_file;
    app.add_option("--out", out_file, "Write output to FILE instead of stdout");

    int n = 0;
    int k = 0;
    const auto add_nk = [&](CLI::App* sub) {
        sub->add_option("n", n, "ambient dimension")->required();
        sub->add_option("k", k, "frame count")->required();
        sub->fallthrough();
    };

    CLI::App* basis = app.add_subcommand("basis", "Closed-form generator table of H(V_k(A^n))");
    add_nk(basis);
    CLI::App* motive = app.add_subcommand("motive", "Formal motive decomposition of V_k(A^n)");
    add_nk(motive);
    CLI::App* groups =
        app.add_subcommand("groups", "Evaluate the cohomology at single bidegrees or ranges");
    add_nk(groups);
    int p_val = 0;
    int q_val = 0;
    std::string p_range;
    std::string q_range;
    auto* p_opt = groups->add_option("--p", p_val, "cohomological degree");
    auto* q_opt = groups->add_option("--q", q_val, "weight");
    auto* p_range_opt = groups->add_option("--p-range", p_range, "inclusive range FROM:TO");
    auto* q_range_opt = groups->add_option("--q-range", q_range, "inclusive range FROM:TO");
    CLI::App* euler =
        app.add_subcommand("euler", "Euler class of the bundle V_{k+1}(A^n) -> V_k(A^n)");
    add_nk(euler);
    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "Compare all three computation paths over a sweep");
    crosscheck->fallthrough();
    int n_max = 16;
    crosscheck->add_option("--n-max", n_max, "sweep every 1 <= k <= n-1, n <= n-max")
        ->capture_default_str();
    int jobs = 0;
    crosscheck->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    CLI::App* report =
        app.add_subcommand("report", "Full machine-readable report for one (n,k); JSON only");
    add_nk(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cone_square.size() != 2)
            throw std::invalid_argument("--cone-square expects two integers s,t");

        const auto with_delta = [&](int delta) {
            Conventions c;
            c.cone_shift_delta = delta;
            c.cone_square_twist = cone_square[0];
            c.cone_square_shift = cone_square[1];
            return c;
        };
        std::vector<ConventionChoice> choices;
        const std::string& mode = cone_shift;
        if (mode == "derived")
            choices = {{"derived", with_delta(-1)}};
        else if (mode == "paper")
            choices = {{"paper", with_delta(0)}};
        else
            choices = {{"derived", with_delta(-1)}, {"paper", with_delta(0)}};

        RenderOptions opt;
        opt.format = parse_format(format);
        opt.conv = choices.front().conv;
        opt.flags.negative_weight_motivic = !no_negative_weight;
        opt.flags.mw_subdiagonal_negative_weight = !no_mw_subdiagonal;
        opt.all = all;
        opt.braced = braced;

        if (!app.got_subcommand(crosscheck) && mode == "both")
            throw std::invalid_argument("--cone-shift both only applies to crosscheck");

        if (app.got_subcommand(basis)) return emit(cmd_basis(StiefelIndex(n, k), opt), out_file);
        if (app.got_subcommand(motive)) return emit(cmd_motive(StiefelIndex(n, k), opt), out_file);
        if (app.got_subcommand(groups)) {
            const AxisSpec p = resolve_axis(p_opt, p_val, p_range_opt, p_range, "p");
            const AxisSpec q = resolve_axis(q_opt, q_val, q_range_opt, q_range, "q");
            return emit(cmd_groups(StiefelIndex(n, k), p, q, opt), out_file);
        }
        if (app.got_subcommand(euler)) return emit(cmd_euler(StiefelIndex(n, k), opt), out_file);
        if (app.got_subcommand(crosscheck)) {
            const CrosscheckReport rep = run_crosscheck(n_max, choices, jobs);
            const int rc = emit(cmd_crosscheck(rep, opt), out_file);
            if (rc != 0) return rc;
            return rep.a_eq_b_all ? 0 : 2;
        }
        if (app.got_subcommand(report)) {
            if (format_opt->count() && format != "json")
                throw std::invalid_argument("report is JSON only");
            opt.format = Format::Json;
            return emit(cmd_report(StiefelIndex(n, k), choices.front().name, opt), out_file);
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
