#pragma once

#include <array>
#include <variant>

#include "splitline/algebra.hpp"

namespace splitline {

// Half-length of the excised junction segment [-lambda, +lambda].
struct JunctionGeometry {
    double lambda = 0.0;

    JunctionGeometry() = default;
    explicit JunctionGeometry(double l) : lambda(l) {
        if (!std::isfinite(l) || l < 0.0)
            throw std::invalid_argument("junction half-length must be finite and nonnegative");
    }
};

bool is_unitary(const C2Matrix& m, double tol);

// 2x2 unitary within tol of U+U = I; parameterizes the self-adjoint extensions.
class UnitaryU2 {
public:
    static constexpr double tol_unitary = 1e-12;

    explicit UnitaryU2(const C2Matrix& m, double tol = tol_unitary) : m_(m) {
        if (!is_unitary(m, tol))
            throw std::invalid_argument("matrix is not unitary within tolerance");
    }

    const C2Matrix& matrix() const { return m_; }
    Complex u11() const { return m_.m11; }
    Complex u12() const { return m_.m12; }
    Complex u21() const { return m_.m21; }
    Complex u22() const { return m_.m22; }

private:
    C2Matrix m_;
};

// U(1)*SH factorization: U = gamma3 * [[gamma1, -gamma2*], [gamma2, gamma1*]]
// with |gamma1|^2 + |gamma2|^2 = 1 and |gamma3| = 1.  The triple is unique only
// up to an overall sign; equality of decompositions is checked on reconstruct().
struct QuaternionDecomposition {
    Complex gamma1, gamma2, gamma3;

    C2Matrix reconstruct() const {
        return gamma3 * C2Matrix{gamma1, -std::conj(gamma2), gamma2, std::conj(gamma1)};
    }
};

// Diagonal U = diag(gamma_left, gamma_right): the decoupled extension family.
struct DiagonalExtension {
    Complex gamma_left, gamma_right;
};

using Classification = std::variant<DiagonalExtension, QuaternionDecomposition>;

// Transfer boundary matrix B = [[alpha1, alpha2], [alpha3, alpha4]] linking
// (psi, psi') across the junction.  Class membership: alpha1 alpha4* - alpha2 alpha3* = 1,
// alpha1 alpha3* and alpha2 alpha4* real.  alpha2 carries length units, alpha3 inverse length.
struct AlphaVector {
    Complex alpha1, alpha2, alpha3, alpha4;

    C2Matrix matrix() const { return {alpha1, alpha2, alpha3, alpha4}; }
};

struct AlphaConversion {
    AlphaVector alpha;
    // set when |gamma2| < 1e-6: the transfer form scales as 1/gamma2 and
    // absolute residuals degrade quadratically in that scale
    bool ill_conditioned = false;
};

// Phase-extracted form B = e^{i theta} [[a1, a2], [a3, a4]] with real a_k and
// a1 a4 - a2 a3 = 1; theta in [0, 2*pi).
struct PhaseForm {
    double theta = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;

    C2Matrix matrix() const {
        return std::polar(1.0, theta) * C2Matrix{Complex{a1}, Complex{a2}, Complex{a3}, Complex{a4}};
    }
};

// Finite real or a distinct infinity marker; never an IEEE infinity in arithmetic.
class ExtendedReal {
public:
    ExtendedReal() = default;
    ExtendedReal(double v) : value_(v) {
        if (!std::isfinite(v))
            throw std::invalid_argument("extended real: use infinity() for the infinite value");
    }

    static ExtendedReal infinity() {
        ExtendedReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }

    double value() const {
        if (infinite_) throw std::logic_error("extended real: infinite marker has no value");
        return value_;
    }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

// Robin/Dirichlet data: rho psi = psi' on each island, Dirichlet when infinite.
struct RhoPair {
    ExtendedReal rho_plus, rho_minus;
};

// Boundary traces (psi(+L), psi'(+L), psi(-L), psi'(-L)).
struct BoundaryData {
    Complex psi_plus, dpsi_plus, psi_minus, dpsi_minus;
};

struct ValidationReport {
    double det_residual = 0.0;
    double im13_residual = 0.0;
    double im24_residual = 0.0;
    // |Im(alpha_j alpha_k*)| for (j,k) = (1,2),(1,3),(1,4),(2,3),(2,4),(3,4);
    // these vanish automatically whenever the three primary residuals do
    std::array<double, 6> pairwise_im{};
    double tol = 0.0;
    bool pass = false;
};

QuaternionDecomposition decompose_u2(const UnitaryU2& u);

inline constexpr double diagonal_tol = 1e-12;

Classification classify(const UnitaryU2& u, double tol = diagonal_tol);

// The Dirichlet phase gamma = -e^{i sqrt2 lambda} is detected within this
// complex distance.
inline constexpr double dirichlet_phase_tol = 1e-10;

RhoPair u_to_rho(Complex gamma_left, Complex gamma_right, const JunctionGeometry& geom,
                 double tol = 1e-12);

UnitaryU2 rho_to_u(const RhoPair& rho, const JunctionGeometry& geom);

AlphaConversion u_to_alpha(const QuaternionDecomposition& d, const JunctionGeometry& geom);

struct UnitaryConversion {
    QuaternionDecomposition decomposition;
    UnitaryU2 u;
};

// tol is applied to the class residuals relative to the squared entry scale
// of alpha (the residuals are quadratic in the entries).
UnitaryConversion alpha_to_u(const AlphaVector& alpha, const JunctionGeometry& geom,
                             double tol = 1e-12);

ValidationReport validate_class_alpha(const AlphaVector& alpha, double tol);

PhaseForm extract_phase(const AlphaVector& alpha);

// (psi(+L), psi'(+L))^T - B (psi(-L), psi'(-L))^T; zero iff bd satisfies the condition.
std::array<Complex, 2> apply_bc_alpha(const AlphaVector& alpha, const BoundaryData& bd);

// (left, right) island residuals: rho psi - psi', or psi alone on a Dirichlet island.
std::array<Complex, 2> apply_bc_rho(const RhoPair& rho, const BoundaryData& bd);

// psi'(+L)* phi(+L) - psi(+L)* phi'(+L) - psi'(-L)* phi(-L) + psi(-L)* phi'(-L);
// vanishes identically on pairs drawn from the same self-adjoint domain.
Complex boundary_form(const BoundaryData& psi, const BoundaryData& phi);

}  // namespace splitline
