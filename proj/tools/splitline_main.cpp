#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "splitline/deficiency.hpp"
#include "splitline/json_io.hpp"
#include "splitline/rng.hpp"
#include "splitline/scattering.hpp"
#include "splitline/verify.hpp"

// exit contract: 0 success, 2 validation or property failure, 3 parse or
// configuration error; nothing else.

namespace {

using namespace splitline;
namespace io = splitline::jsonio;

std::string read_payload(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw io::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw io::ParseError("cannot write output file: " + path);
    out << text;
}

std::string csv_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string json_validation(const ValidationReport& r) {
    std::ostringstream out;
    out << "{\"det_residual\": " << io::format_double(r.det_residual)
        << ", \"im13_residual\": " << io::format_double(r.im13_residual)
        << ", \"im24_residual\": " << io::format_double(r.im24_residual)
        << ", \"pairwise_im\": [";
    for (size_t i = 0; i < r.pairwise_im.size(); ++i) {
        if (i) out << ", ";
        out << io::format_double(r.pairwise_im[i]);
    }
    out << "], \"tol\": " << io::format_double(r.tol)
        << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
    return out.str();
}

int cmd_decompose(const std::string& input, const std::string& output) {
    const UnitaryU2 u{io::parse_matrix(read_payload(input))};
    const QuaternionDecomposition d = decompose_u2(u);
    const double residual = matrix_distance(d.reconstruct(), u.matrix());
    std::ostringstream out;
    out << "{\"gamma1\": " << io::json_complex(d.gamma1)
        << ", \"gamma2\": " << io::json_complex(d.gamma2)
        << ", \"gamma3\": " << io::json_complex(d.gamma3)
        << ", \"reconstruction_residual\": " << io::format_double(residual) << "}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_u2alpha(const std::string& input, const std::string& output, double lambda,
                double tol) {
    const UnitaryU2 u{io::parse_matrix(read_payload(input))};
    const Classification cls = classify(u, tol);
    if (std::holds_alternative<DiagonalExtension>(cls)) {
        std::cerr << "error: diagonal extension, use u2rho\n";
        return 2;
    }
    const JunctionGeometry geom{lambda};
    const AlphaConversion conv = u_to_alpha(std::get<QuaternionDecomposition>(cls), geom);
    std::ostringstream out;
    out << "{\"lambda\": " << io::format_double(lambda) << ", \"alpha\": ["
        << io::json_complex(conv.alpha.alpha1) << ", " << io::json_complex(conv.alpha.alpha2)
        << ", " << io::json_complex(conv.alpha.alpha3) << ", "
        << io::json_complex(conv.alpha.alpha4) << "], \"ill_conditioned\": "
        << (conv.ill_conditioned ? "true" : "false")
        << ", \"validation\": " << json_validation(validate_class_alpha(conv.alpha, tol))
        << "}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_alpha2u(const std::string& input, const std::string& output, double lambda,
                double tol) {
    const AlphaVector alpha = io::parse_alpha(read_payload(input));
    const JunctionGeometry geom{lambda};
    const UnitaryConversion conv = alpha_to_u(alpha, geom, tol);
    std::ostringstream out;
    out << "{\"lambda\": " << io::format_double(lambda)
        << ", \"gamma1\": " << io::json_complex(conv.decomposition.gamma1)
        << ", \"gamma2\": " << io::json_complex(conv.decomposition.gamma2)
        << ", \"gamma3\": " << io::json_complex(conv.decomposition.gamma3)
        << ", \"u\": " << io::json_matrix(conv.u.matrix())
        << ", \"validation\": " << json_validation(validate_class_alpha(alpha, tol))
        << "}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_u2rho(const std::string& input, const std::string& output, double lambda,
              double tol) {
    const UnitaryU2 u{io::parse_matrix(read_payload(input))};
    const Classification cls = classify(u, tol);
    if (!std::holds_alternative<DiagonalExtension>(cls)) {
        std::cerr << "error: non-diagonal extension, use u2alpha\n";
        return 2;
    }
    const auto& diag = std::get<DiagonalExtension>(cls);
    const RhoPair rho = u_to_rho(diag.gamma_left, diag.gamma_right, JunctionGeometry{lambda});
    std::ostringstream out;
    out << "{\"lambda\": " << io::format_double(lambda) << ", \"rho\": ["
        << io::json_extended(rho.rho_plus) << ", " << io::json_extended(rho.rho_minus)
        << "]}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_rho2u(const std::string& input, const std::string& output, double lambda) {
    const RhoPair rho = io::parse_rho(read_payload(input));
    const UnitaryU2 u = rho_to_u(rho, JunctionGeometry{lambda});
    std::ostringstream out;
    out << "{\"lambda\": " << io::format_double(lambda)
        << ", \"u\": " << io::json_matrix(u.matrix())
        << ", \"gamma_left\": " << io::json_complex(u.u11())
        << ", \"gamma_right\": " << io::json_complex(u.u22()) << "}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_phase(const std::string& input, const std::string& output, double tol) {
    const AlphaVector alpha = io::parse_alpha(read_payload(input));
    const ValidationReport report = validate_class_alpha(alpha, tol);
    if (!report.pass) {
        std::cerr << "error: input fails Class alpha validation\n";
        return 2;
    }
    const PhaseForm f = extract_phase(alpha);
    std::ostringstream out;
    out << "{\"theta\": " << io::format_double(f.theta) << ", \"a\": ["
        << io::format_double(f.a1) << ", " << io::format_double(f.a2) << ", "
        << io::format_double(f.a3) << ", " << io::format_double(f.a4) << "]}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_scatter(const std::string& input, const std::string& output, double lambda,
                double tol, const KGrid& grid, const std::string& side_name) {
    const Extension ext = io::parse_extension(read_payload(input));
    const JunctionGeometry geom{lambda};
    const Side side = (side_name == "right") ? Side::right : Side::left;

    std::ostringstream out;
    out << "k,re_r,im_r,re_t,im_t,flux_residual,arg_t\n";
    double worst_flux = 0.0;
    for (double k : grid.points()) {
        const ScatteringResult res = scatter(ext, geom, k, side);
        worst_flux = std::max(worst_flux, res.flux_residual);
        out << csv_num(k) << ',' << csv_num(res.r.real()) << ',' << csv_num(res.r.imag())
            << ',' << csv_num(res.t.real()) << ',' << csv_num(res.t.imag()) << ','
            << csv_num(res.flux_residual) << ','
            << csv_num(normalize_angle(std::arg(res.t))) << '\n';
    }
    write_output(output, out.str());
    if (worst_flux > tol) {
        std::cerr << "error: flux conservation violated, worst residual "
                  << io::format_double(worst_flux) << "\n";
        return 2;
    }
    return 0;
}

int cmd_bound(const std::string& input, const std::string& output, double lambda) {
    const Extension ext = io::parse_extension(read_payload(input));
    const std::vector<BoundState> states = bound_states(ext, JunctionGeometry{lambda});
    std::ostringstream out;
    out << "{\"lambda\": " << io::format_double(lambda) << ", \"bound_states\": [";
    for (size_t i = 0; i < states.size(); ++i) {
        const BoundState& s = states[i];
        const char* island = s.island == Island::both    ? "both"
                             : s.island == Island::left  ? "left"
                                                         : "right";
        if (i) out << ", ";
        out << "{\"kappa\": " << io::format_double(s.kappa)
            << ", \"energy\": " << io::format_double(s.energy)
            << ", \"c\": " << io::json_complex(s.c) << ", \"island\": \"" << island
            << "\", \"double_root\": " << (s.double_root ? "true" : "false") << "}";
    }
    out << "]}\n";
    write_output(output, out.str());
    return 0;
}

int cmd_verify(const std::string& output, const VerifyOptions& options) {
    const std::vector<SuiteResult> suites = run_verification(options);
    std::ostringstream out;
    out << "{\"seed\": " << options.seed << ", \"samples\": " << options.samples
        << ", \"lambda_max\": " << io::format_double(options.lambda_max) << ", \"suites\": [";
    bool all_pass = true;
    std::string failing;
    for (size_t i = 0; i < suites.size(); ++i) {
        const SuiteResult& s = suites[i];
        if (!s.pass) {
            all_pass = false;
            if (!failing.empty()) failing += ", ";
            failing += s.name;
        }
        if (i) out << ", ";
        out << "{\"name\": \"" << s.name << "\", \"samples\": " << s.samples
            << ", \"max_residual\": " << io::format_double(s.max_residual)
            << ", \"tolerance\": " << io::format_double(s.tolerance)
            << ", \"pass\": " << (s.pass ? "true" : "false") << "}";
    }
    out << "], \"pass\": " << (all_pass ? "true" : "false") << "}\n";
    write_output(output, out.str());
    if (!all_pass) {
        std::cerr << "error: verification failed: " << failing << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-adjoint extensions of the 1D Schrodinger operator on a split line"};
    app.require_subcommand(1);

    std::string input;
    std::string output = "-";
    std::string side = "left";
    double lambda = 0.0;
    double tol = 1e-12;
    KGrid grid;
    VerifyOptions verify_options;

    auto add_payload = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "payload file, - for standard input");
        cmd->add_option("--output", output, "output file, - for standard output");
    };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "junction half-length")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_tol = [&](CLI::App* cmd) {
        return cmd->add_option("--tol", tol, "validation tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* decompose = app.add_subcommand("decompose", "U(2) quaternion decomposition");
    add_payload(decompose);

    CLI::App* u2alpha = app.add_subcommand("u2alpha", "U(2) to transfer boundary condition");
    add_payload(u2alpha);
    add_lambda(u2alpha);
    add_tol(u2alpha);

    CLI::App* alpha2u = app.add_subcommand("alpha2u", "transfer boundary condition to U(2)");
    add_payload(alpha2u);
    add_lambda(alpha2u);
    add_tol(alpha2u);

    CLI::App* u2rho = app.add_subcommand("u2rho", "diagonal U(2) to Robin coefficients");
    add_payload(u2rho);
    add_lambda(u2rho);
    add_tol(u2rho);

    CLI::App* rho2u = app.add_subcommand("rho2u", "Robin coefficients to diagonal U(2)");
    add_payload(rho2u);
    add_lambda(rho2u);

    CLI::App* phase = app.add_subcommand("phase", "phase-extracted form of a transfer condition");
    add_payload(phase);
    add_tol(phase);

    CLI::App* scatter_cmd = app.add_subcommand("scatter", "reflection/transmission sweep (CSV)");
    add_payload(scatter_cmd);
    add_lambda(scatter_cmd);
    add_tol(scatter_cmd);
    scatter_cmd->add_option("--k-min", grid.k_min, "lowest wavenumber")
        ->check(CLI::PositiveNumber);
    scatter_cmd->add_option("--k-max", grid.k_max, "highest wavenumber")
        ->check(CLI::PositiveNumber);
    scatter_cmd->add_option("--k-steps", grid.steps, "grid size")->check(CLI::Range(2, 1 << 24));
    scatter_cmd->add_option("--side", side, "incidence side")
        ->check(CLI::IsMember({"left", "right"}));

    CLI::App* bound = app.add_subcommand("bound", "bound states of an extension");
    add_payload(bound);
    add_lambda(bound);

    CLI::App* verify = app.add_subcommand("verify", "seeded property verification report");
    verify->add_option("--output", output, "output file, - for standard output");
    verify->add_option("--seed", verify_options.seed, "PRNG seed");
    verify->add_option("--samples", verify_options.samples, "draws per suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--lambda-max", verify_options.lambda_max, "junction half-length range")
        ->check(CLI::NonNegativeNumber);
    CLI::Option* verify_tol = add_tol(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(decompose)) return cmd_decompose(input, output);
        if (app.got_subcommand(u2alpha)) return cmd_u2alpha(input, output, lambda, tol);
        if (app.got_subcommand(alpha2u)) return cmd_alpha2u(input, output, lambda, tol);
        if (app.got_subcommand(u2rho)) return cmd_u2rho(input, output, lambda, tol);
        if (app.got_subcommand(rho2u)) return cmd_rho2u(input, output, lambda);
        if (app.got_subcommand(phase)) return cmd_phase(input, output, tol);
        if (app.got_subcommand(scatter_cmd)) {
            if (!(grid.k_min < grid.k_max)) {
                std::cerr << "error: --k-min must be below --k-max\n";
                return 3;
            }
            return cmd_scatter(input, output, lambda, tol, grid, side);
        }
        if (app.got_subcommand(bound)) return cmd_bound(input, output, lambda);
        if (app.got_subcommand(verify)) {
            if (verify_tol->count() > 0) verify_options.tol_override = tol;
            return cmd_verify(output, verify_options);
        }
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
