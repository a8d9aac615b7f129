// Command-line front end for the dyadic half-line toolkit: Walsh function
// evaluation, exact Walsh-Fourier transforms, mask inspection, cascade
// iteration, product-formula windows, and the block-value audit table.

#include "dyadica/dyadic.hpp"
#include "dyadica/io.hpp"
#include "dyadica/refine.hpp"
#include "dyadica/theorem1.hpp"
#include "dyadica/wft.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace dyadica;

constexpr int kExitMalformed = 1;
constexpr int kExitPrecondition = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

StepFunction load_step(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    return parse_step_csv(in);
}

Mask load_mask(const std::string& path, bool normalize) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    auto coeffs = parse_mask_coeffs_json(in);
    if (normalize) coeffs = Mask::normalize(coeffs);
    return Mask(std::move(coeffs));
}

std::string mask_table_csv(const Mask& m) {
    std::string out = "resolution\n" + std::to_string(m.resolution()) + "\n";
    out += "q,re_num,re_den,im_num,im_den\n";
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (std::size_t q = 0; q < m.table().size(); ++q) {
        const ExactScalar& v = m.table()[q];
        out += std::to_string(q) + ',' + numerator(v.re).str() + ',' +
               denominator(v.re).str() + ',' + numerator(v.im).str() + ',' +
               denominator(v.im).str() + '\n';
    }
    return out;
}

// Smallest n with top coefficient index <= 2^n.
int support_bound_exp(const Mask& m) {
    if (m.top_index() <= 1) return 0;
    return static_cast<int>(bit_length(Integer(m.top_index() - 1)));
}

int run(int argc, char** argv) {
    CLI::App app{"exact Walsh-Fourier analysis on the dyadic half-line"};
    app.require_subcommand(1);

    std::string output;
    bool with_float = false;
    bool normalize = false;

    // walsh
    auto* walsh_cmd = app.add_subcommand("walsh", "evaluate w_k(x)");
    std::string walsh_k, walsh_x;
    walsh_cmd->add_option("k", walsh_k, "non-negative integer index")->required();
    walsh_cmd->add_option("x", walsh_x, "dyadic point: p/2^s, binary (10.011b), or integer")
        ->required();

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "Walsh-Fourier transform of a step CSV");
    std::string transform_in;
    transform_cmd->add_option("input", transform_in, "step-function CSV")->required();
    transform_cmd->add_option("--output", output, "output path (default stdout)");
    transform_cmd->add_flag("--float", with_float, "append lossy decimal columns");

    // mask
    auto* mask_cmd = app.add_subcommand("mask", "validate a mask and print its value table");
    std::string mask_in;
    mask_cmd->add_option("input", mask_in, "mask JSON")->required();
    mask_cmd->add_flag("--normalize", normalize, "rescale coefficients to sum 2 first");
    mask_cmd->add_option("--output", output, "output path (default stdout)");

    // cascade
    auto* cascade_cmd = app.add_subcommand("cascade", "emit cascade iterates T^1..T^K f0");
    std::string cascade_mask, cascade_start;
    unsigned cascade_k = 0;
    cascade_cmd->add_option("input", cascade_mask, "mask JSON")->required();
    cascade_cmd->add_option("--k", cascade_k, "number of iterations")->required();
    cascade_cmd->add_option("--start", cascade_start, "start step CSV (default chi_[0,1))");
    cascade_cmd->add_flag("--normalize", normalize, "rescale coefficients to sum 2 first");
    cascade_cmd->add_option("--output", output, "file prefix; writes <prefix>.<k>.csv");
    cascade_cmd->add_flag("--float", with_float, "append lossy decimal columns");

    // phihat
    auto* phihat_cmd = app.add_subcommand("phihat", "mask-product window for the transform of phi");
    std::string phihat_mask;
    int phihat_window_exp = 0;
    phihat_cmd->add_option("input", phihat_mask, "mask JSON")->required();
    phihat_cmd->add_option("--window", phihat_window_exp, "window [0, 2^N)")->required();
    phihat_cmd->add_flag("--normalize", normalize, "rescale coefficients to sum 2 first");
    phihat_cmd->add_option("--output", output, "output path (default stdout)");
    phihat_cmd->add_flag("--float", with_float, "append lossy decimal columns");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "cascade approximation to the refinable function");
    std::string solve_mask, solve_start;
    unsigned solve_k = 0;
    solve_cmd->add_option("input", solve_mask, "mask JSON")->required();
    solve_cmd->add_option("--k", solve_k, "number of iterations")->required();
    solve_cmd->add_option("--start", solve_start, "start step CSV (default chi_[0,1))");
    solve_cmd->add_flag("--normalize", normalize, "rescale coefficients to sum 2 first");
    solve_cmd->add_option("--output", output, "output path (default stdout)");
    solve_cmd->add_flag("--float", with_float, "append lossy decimal columns");

    // theorem1
    auto* th1_cmd = app.add_subcommand("theorem1", "audit of the block values and partial sums");
    unsigned th1_nmax = 8, th1_Nmax = 16;
    std::string th1_format = "json";
    th1_cmd->add_option("--nmax", th1_nmax, "largest block index n");
    th1_cmd->add_option("--Nmax", th1_Nmax, "largest partial-sum index N");
    th1_cmd->add_option("--format", th1_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    th1_cmd->add_option("--output", output, "output path (default stdout)");

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "exact inner product of two step CSVs");
    std::string pair_f, pair_g;
    pair_cmd->add_option("f", pair_f, "step-function CSV")->required();
    pair_cmd->add_option("g", pair_g, "step-function CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitMalformed;
    }

    if (walsh_cmd->parsed()) {
        Integer k(walsh_k);
        if (k < 0) throw std::invalid_argument("walsh: k must be non-negative");
        DyadicRational x = DyadicRational::parse(walsh_x);
        std::cout << walsh(k, x) << '\n';
    } else if (transform_cmd->parsed()) {
        write_output(emit_step_csv(wft(load_step(transform_in)), with_float), output);
    } else if (mask_cmd->parsed()) {
        write_output(mask_table_csv(load_mask(mask_in, normalize)), output);
    } else if (cascade_cmd->parsed()) {
        Mask m = load_mask(cascade_mask, normalize);
        StepFunction f0 = cascade_start.empty() ? StepFunction::unit_indicator()
                                                : load_step(cascade_start);
        auto iterates = cascade(m, f0, cascade_k);
        for (unsigned k = 0; k < iterates.size(); ++k) {
            std::string body = emit_step_csv(iterates[k], with_float);
            if (output.empty()) {
                std::cout << "# iterate " << (k + 1) << '\n' << body;
            } else {
                write_output(body, output + "." + std::to_string(k + 1) + ".csv");
            }
        }
    } else if (phihat_cmd->parsed()) {
        Mask m = load_mask(phihat_mask, normalize);
        write_output(emit_step_csv(phihat_window(m, phihat_window_exp), with_float), output);
    } else if (solve_cmd->parsed()) {
        Mask m = load_mask(solve_mask, normalize);
        StepFunction phi = solve_start.empty()
                               ? solve_refinable(m, solve_k)
                               : solve_refinable(m, load_step(solve_start), solve_k);
        int n = support_bound_exp(m);
        std::string body = emit_step_csv(phi, with_float);
        body += "# support: [0,2^" + std::to_string(n) + "] " +
                (check_support(phi, n) ? "ok" : "violated") + "\n";
        write_output(body, output);
    } else if (th1_cmd->parsed()) {
        Theorem1Report report = theorem1_report(th1_nmax, th1_Nmax);
        write_output(th1_format == "csv" ? emit_theorem1_csv(report)
                                         : emit_theorem1_json(report),
                     output);
    } else if (pair_cmd->parsed()) {
        std::cout << to_string(inner(load_step(pair_f), load_step(pair_g))) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const MaskSumError& e) {
        std::cerr << "error: " << e.what() << " (use --normalize to rescale)\n";
        return kExitPrecondition;
    } catch (const ZeroSumError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
}
