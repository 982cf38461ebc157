#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splitline {

struct SuiteResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 1000;
    double lambda_max = 3.0;
    // replaces every per-suite tolerance when set
    std::optional<double> tol_override;
};

// Runs the eight property suites on one seeded stream, in a fixed order:
// decomposition_roundtrip, alpha_roundtrip, matrix_roundtrip, rho_roundtrip,
// oracle_agreement, domain_sample_bc, flux_conservation, smatrix_unitarity.
// The two scattering sweeps use samples/10 extensions over the default k-grid.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace splitline
