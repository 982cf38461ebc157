#pragma once

#include <vector>

#include "splitline/extensions.hpp"

namespace splitline {

// A self-adjoint extension in boundary-condition form: transfer type (alpha)
// or decoupled Robin/Dirichlet type (rho).
using Extension = std::variant<AlphaVector, RhoPair>;

enum class Side { left, right };

// Conventions: incidence amplitude 1, time factor e^{-iEt}, E = k^2, hbar = 2m = 1;
// the junction interior carries no dynamics.
struct ScatteringResult {
    double k = 0.0;
    Side side = Side::left;
    Complex r, t;
    double flux_residual = 0.0;  // | |r|^2 + |t|^2 - 1 |
};

ScatteringResult scatter(const Extension& ext, const JunctionGeometry& geom, double k,
                         Side side);

// S = [[r_left, t_right], [t_left, r_right]]; unitary for every valid extension.
C2Matrix smatrix(const Extension& ext, const JunctionGeometry& geom, double k);

// arg t in [0, 2*pi); scaling alpha by e^{i phi} shifts it by exactly phi.
double transmission_phase(const AlphaVector& alpha, const JunctionGeometry& geom, double k,
                          double tol = 1e-12);
double transmission_phase(const Extension& ext, const JunctionGeometry& geom, double k,
                          double tol = 1e-12);

enum class Island { both, left, right };

// Discrete spectrum point: psi = e^{kappa(x+L)} on the left island and
// c e^{-kappa(x-L)} on the right (two-sided states normalize the left
// amplitude to 1; single-island rho states carry amplitude 1 on their island).
struct BoundState {
    double kappa = 0.0;
    double energy = 0.0;  // -kappa^2
    Complex c;
    Island island = Island::both;
    bool double_root = false;
};

// Closed-form bound-state search; sorted by decreasing kappa.
std::vector<BoundState> bound_states(const Extension& ext, const JunctionGeometry& geom);

// Log-spaced wavenumber grid including both endpoints.
struct KGrid {
    double k_min = 1e-2;
    double k_max = 1e2;
    int steps = 256;

    std::vector<double> points() const;
};

}  // namespace splitline
