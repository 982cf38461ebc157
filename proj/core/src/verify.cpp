#include "splitline/verify.hpp"

#include "splitline/deficiency.hpp"
#include "splitline/rng.hpp"
#include "splitline/scattering.hpp"

namespace splitline {

namespace {

double alpha_distance(const AlphaVector& a, const AlphaVector& b) {
    return matrix_distance(a.matrix(), b.matrix());
}

double ext_distance(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_infinite() || b.is_infinite())
        return (a.is_infinite() && b.is_infinite()) ? 0.0 : 1.0;
    return std::abs(a.value() - b.value());
}

struct Sweep {
    Lcg64& g;
    double lambda_max;

    JunctionGeometry geometry() { return JunctionGeometry{g.uniform(0.0, lambda_max)}; }

    Extension extension(int index) {
        // alternate the two families so both see every second draw
        if (index % 2 == 0)
            return u_to_alpha(sample_nondiagonal(g), geometry()).alpha;
        return RhoPair{sample_rho_component(g), sample_rho_component(g)};
    }
};

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    if (options.samples < 1) throw std::invalid_argument("verify: samples must be positive");
    if (!(options.lambda_max >= 0.0) || !std::isfinite(options.lambda_max))
        throw std::invalid_argument("verify: lambda_max must be finite and nonnegative");
    if (options.tol_override && !(*options.tol_override > 0.0))
        throw std::invalid_argument("verify: tolerance must be positive");

    Lcg64 g(options.seed);
    Sweep sweep{g, options.lambda_max};
    std::vector<SuiteResult> suites;

    auto run = [&](const std::string& name, int samples, double tol, auto&& residual) {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) worst = std::max(worst, residual(i));
        const double bound = options.tol_override.value_or(tol);
        suites.push_back({name, samples, worst, bound, worst <= bound});
    };

    run("decomposition_roundtrip", options.samples, 1e-12, [&](int) {
        const UnitaryU2 u = sample_unitary(g);
        return matrix_distance(decompose_u2(u).reconstruct(), u.matrix());
    });

    run("alpha_roundtrip", options.samples, 1e-10, [&](int) {
        const JunctionGeometry geom = sweep.geometry();
        const AlphaVector a = u_to_alpha(sample_nondiagonal(g), geom).alpha;
        const UnitaryConversion back = alpha_to_u(a, geom);
        return alpha_distance(u_to_alpha(back.decomposition, geom).alpha, a);
    });

    run("matrix_roundtrip", options.samples, 1e-10, [&](int) {
        const JunctionGeometry geom = sweep.geometry();
        const QuaternionDecomposition d = sample_nondiagonal(g);
        const AlphaVector a = u_to_alpha(d, geom).alpha;
        return matrix_distance(alpha_to_u(a, geom).u.matrix(), d.reconstruct());
    });

    run("rho_roundtrip", options.samples, 1e-10, [&](int) {
        const JunctionGeometry geom = sweep.geometry();
        const RhoPair rho{sample_rho_component(g), sample_rho_component(g)};
        const UnitaryU2 u = rho_to_u(rho, geom);
        const RhoPair back = u_to_rho(u.u11(), u.u22(), geom);
        const double drho =
            std::max(ext_distance(back.rho_plus, rho.rho_plus),
                     ext_distance(back.rho_minus, rho.rho_minus));
        return std::max(drho, matrix_distance(rho_to_u(back, geom).matrix(), u.matrix()));
    });

    run("oracle_agreement", options.samples, 1e-9, [&](int) {
        const JunctionGeometry geom = sweep.geometry();
        const QuaternionDecomposition d = sample_nondiagonal(g);
        return matrix_distance(oracle_boundary_matrix(d, geom),
                               u_to_alpha(d, geom).alpha.matrix());
    });

    run("domain_sample_bc", options.samples, 1e-9, [&](int) {
        const JunctionGeometry geom = sweep.geometry();
        const QuaternionDecomposition d = sample_nondiagonal(g);
        const Complex cl{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const Complex cr{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const BoundaryData bd = domain_sample(UnitaryU2{d.reconstruct()}, geom, cl, cr);
        const auto res = apply_bc_alpha(u_to_alpha(d, geom).alpha, bd);
        return std::max(std::abs(res[0]), std::abs(res[1]));
    });

    const int sweep_samples = std::max(1, options.samples / 10);
    const std::vector<double> ks = KGrid{}.points();

    run("flux_conservation", sweep_samples, 1e-12, [&](int i) {
        const JunctionGeometry geom = sweep.geometry();
        const Extension ext = sweep.extension(i);
        double worst = 0.0;
        for (double k : ks) {
            worst = std::max(worst, scatter(ext, geom, k, Side::left).flux_residual);
            worst = std::max(worst, scatter(ext, geom, k, Side::right).flux_residual);
        }
        return worst;
    });

    run("smatrix_unitarity", sweep_samples, 1e-12, [&](int i) {
        const JunctionGeometry geom = sweep.geometry();
        const Extension ext = sweep.extension(i);
        double worst = 0.0;
        for (double k : ks) {
            const C2Matrix s = smatrix(ext, geom, k);
            worst = std::max(worst,
                             matrix_distance(s.adjoint() * s, C2Matrix::identity()));
        }
        return worst;
    });

    return suites;
}

}  // namespace splitline
