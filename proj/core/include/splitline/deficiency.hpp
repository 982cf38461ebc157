#pragma once

#include "splitline/extensions.hpp"

namespace splitline {

enum class DeficiencyTag { l_plus, l_minus, r_plus, r_minus };

// Normalized deficiency basis element.  L tags live on (-inf, -lambda],
// R tags on [+lambda, +inf); each satisfies -f'' = +i f (plus tags) or
// -f'' = -i f (minus tags) on its island.
struct DeficiencyFunction {
    DeficiencyTag tag;
    JunctionGeometry geom;

    double normalization() const;      // N = 2^{1/4} e^{lambda/sqrt2}
    Complex derivative_factor() const; // f' = factor * f on the island
};

// Values at |x| = lambda are the one-sided limits of the supported island;
// the opposite island evaluates to 0; the gap (-lambda, lambda) is an error.
Complex eval_deficiency(const DeficiencyFunction& f, double x);

// R_plus(+lambda); the single boundary value all four basis functions reduce to
// via conjugation.
Complex r_plus_boundary_value(const JunctionGeometry& geom);

// Closed form N^2 e^{-sqrt2 lambda} / sqrt2 of the squared L2 norm (equals 1).
double deficiency_norm_closed(const DeficiencyFunction& f);

// Composite Simpson cross-check of the same norm; the truncated tail is
// below 1e-24 for the default window.
double deficiency_norm_quadrature(const DeficiencyFunction& f, double tail = 40.0,
                                  int panels = 16384);

struct BoundaryMatrixPair {
    C2Matrix a_plus, a_minus;
};

// Boundary-value matrices of the domain representation
// psi = c_L L+ + c_R R+ + (coefficients through U) L- / R- :
// (psi(+L), psi'(+L))^T = A+ (c_L, c_R)^T and (psi(-L), psi'(-L))^T = A- (c_L, c_R)^T.
// det A- = i sqrt2 |R+(+L)|^2 gamma3 gamma2, nonzero iff gamma2 != 0.
BoundaryMatrixPair boundary_matrices(const QuaternionDecomposition& d,
                                     const JunctionGeometry& geom);

// A+ A-^{-1}: the transfer matrix built from boundary values alone.
// Independent cross-check of u_to_alpha.
C2Matrix oracle_boundary_matrix(const QuaternionDecomposition& d,
                                const JunctionGeometry& geom);

// Boundary traces of psi = c_L L+ + c_R R+ + c_L UL+ + c_R UR+ where
// UL+ = u11 L- + u12 R- and UR+ = u21 L- + u22 R-, assembled from
// eval_deficiency and the derivative factors only.
BoundaryData domain_sample(const UnitaryU2& u, const JunctionGeometry& geom,
                           Complex c_left, Complex c_right);

}  // namespace splitline
