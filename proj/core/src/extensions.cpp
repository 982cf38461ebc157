#include "splitline/extensions.hpp"

namespace splitline {

namespace {

using ComplexL = std::complex<long double>;

constexpr long double pi_l = 3.141592653589793238462643383279502884L;
constexpr long double sqrt2_l = 1.414213562373095048801688724209698079L;

ComplexL unit_phase(long double a) { return {std::cos(a), std::sin(a)}; }

Complex narrow(const ComplexL& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// gamma = -e^{i sqrt2 lambda}: the phase whose Robin coefficient is infinite.
Complex dirichlet_phase(const JunctionGeometry& geom) {
    const double s = sqrt2 * geom.lambda;
    return {-std::cos(s), -std::sin(s)};
}

}  // namespace

bool is_unitary(const C2Matrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tolerance must be positive");
    return matrix_distance(m.adjoint() * m, C2Matrix::identity()) <= tol;
}

QuaternionDecomposition decompose_u2(const UnitaryU2& u) {
    const C2Matrix& m = u.matrix();
    if (m.m21 != Complex{}) {
        const double t2 = std::arg(m.m12);
        const double t3 = std::arg(m.m21);
        const Complex g3 = std::polar(1.0, 0.5 * (t2 + t3 + pi));
        return {std::conj(g3) * m.m11, std::conj(g3) * m.m21, g3};
    }
    // u21 = 0 forces |u11| = |u22| = 1 and u12 = 0 up to the unitarity tolerance
    const double t1 = std::arg(m.m11);
    const double t4 = std::arg(m.m22);
    const Complex g3 = std::polar(1.0, 0.5 * (t1 + t4));
    return {std::conj(g3) * m.m11, Complex{}, g3};
}

Classification classify(const UnitaryU2& u, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tolerance must be positive");
    const C2Matrix& m = u.matrix();
    if (std::abs(m.m12) <= tol && std::abs(m.m21) <= tol)
        return DiagonalExtension{m.m11, m.m22};
    return decompose_u2(u);
}

RhoPair u_to_rho(Complex gamma_left, Complex gamma_right, const JunctionGeometry& geom,
                 double tol) {
    if (std::abs(std::abs(gamma_left) - 1.0) > tol ||
        std::abs(std::abs(gamma_right) - 1.0) > tol)
        throw std::invalid_argument("u_to_rho: boundary phases must be unimodular");

    const Complex dir = dirichlet_phase(geom);
    const double half_s = geom.lambda / sqrt2;

    RhoPair rho;
    if (std::abs(gamma_left - dir) <= dirichlet_phase_tol) {
        rho.rho_minus = ExtendedReal::infinity();
    } else {
        const double theta_l = normalize_angle(std::arg(gamma_left));
        rho.rho_minus = -(1.0 / sqrt2) * (std::tan(0.5 * theta_l - half_s) - 1.0);
    }
    if (std::abs(gamma_right - dir) <= dirichlet_phase_tol) {
        rho.rho_plus = ExtendedReal::infinity();
    } else {
        const double theta_r = normalize_angle(std::arg(gamma_right));
        rho.rho_plus = (1.0 / sqrt2) * (std::tan(0.5 * theta_r - half_s) - 1.0);
    }
    return rho;
}

UnitaryU2 rho_to_u(const RhoPair& rho, const JunctionGeometry& geom) {
    const double s = sqrt2 * geom.lambda;
    const Complex gl = rho.rho_minus.is_infinite()
                           ? dirichlet_phase(geom)
                           : std::polar(1.0, 2.0 * std::atan(-sqrt2 * rho.rho_minus.value() + 1.0) + s);
    const Complex gr = rho.rho_plus.is_infinite()
                           ? dirichlet_phase(geom)
                           : std::polar(1.0, 2.0 * std::atan(sqrt2 * rho.rho_plus.value() + 1.0) + s);
    return UnitaryU2{{gl, Complex{}, Complex{}, gr}};
}

AlphaConversion u_to_alpha(const QuaternionDecomposition& d, const JunctionGeometry& geom) {
    if (d.gamma2 == Complex{})
        throw std::domain_error("u_to_alpha: diagonal extension (gamma2 = 0) has no transfer form");

    // Accumulated in extended precision: the components scale as 1/gamma2 and
    // the Class invariants are checked on products of them.
    const ComplexL g1{d.gamma1};
    const ComplexL g3{d.gamma3};
    const long double s = sqrt2_l * static_cast<long double>(geom.lambda);
    const long double q = pi_l / 4.0L;
    const ComplexL w = ComplexL{0.0L, sqrt2_l} / ComplexL{d.gamma2};

    const long double re_g1 = g1.real();
    const long double r1 = (unit_phase(q) * g1).real() + (unit_phase(q - s) * g3).real();
    const long double r2 = re_g1 + (unit_phase(-s) * g3).real();
    const long double r3 = re_g1 + (unit_phase(2.0L * q - s) * g3).real();
    const long double r4 = (unit_phase(-q) * g1).real() + (unit_phase(q - s) * g3).real();

    AlphaConversion out;
    out.alpha = {narrow(w * r1), narrow(-w * r2), narrow(-w * r3), narrow(w * r4)};
    out.ill_conditioned = std::abs(d.gamma2) < 1e-6;
    return out;
}

UnitaryConversion alpha_to_u(const AlphaVector& alpha, const JunctionGeometry& geom,
                             double tol) {
    // the class residuals are products of entries, so the admission gate has
    // to scale quadratically with them or large-entry inputs produced by
    // u_to_alpha itself would be rejected at their own storage floor
    const double scale = std::max(1.0, max_abs_entry(alpha.matrix()));
    const ValidationReport report = validate_class_alpha(alpha, tol * scale * scale);
    if (!report.pass)
        throw std::invalid_argument("alpha_to_u: input fails Class alpha validation");

    const PhaseForm form = extract_phase(alpha);
    const Complex eip = std::polar(1.0, pi / 4.0);
    const Complex x = eip * alpha.alpha1 + alpha.alpha2 + alpha.alpha3 + std::conj(eip) * alpha.alpha4;
    const Complex y = std::conj(eip) * alpha.alpha1 - Complex{0.0, 1.0} * alpha.alpha2 +
                      alpha.alpha3 + std::conj(eip) * alpha.alpha4;
    const double gamma0 = 1.0 / std::sqrt(std::norm(x) + 2.0);
    const Complex down = std::polar(1.0, -form.theta);

    const Complex g1 = gamma0 * down * x;
    const Complex g2 = Complex{0.0, -sqrt2} * gamma0 * down;
    Complex g3 = -gamma0 * std::polar(1.0, sqrt2 * geom.lambda - form.theta) * y;

    // |gamma3| = 1 holds identically on Class alpha; renormalizing keeps the
    // assembled matrix unitary for inputs that only met a loose tolerance.
    const double m3 = std::abs(g3);
    if (m3 == 0.0)
        throw std::invalid_argument("alpha_to_u: degenerate input, phase factor vanished");
    g3 /= m3;

    QuaternionDecomposition d{g1, g2, g3};
    return {d, UnitaryU2{d.reconstruct()}};
}

ValidationReport validate_class_alpha(const AlphaVector& alpha, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("validate_class_alpha: tolerance must be positive");

    const Complex p12 = alpha.alpha1 * std::conj(alpha.alpha2);
    const Complex p13 = alpha.alpha1 * std::conj(alpha.alpha3);
    const Complex p14 = alpha.alpha1 * std::conj(alpha.alpha4);
    const Complex p23 = alpha.alpha2 * std::conj(alpha.alpha3);
    const Complex p24 = alpha.alpha2 * std::conj(alpha.alpha4);
    const Complex p34 = alpha.alpha3 * std::conj(alpha.alpha4);

    ValidationReport r;
    r.det_residual = std::abs(p14 - p23 - Complex{1.0});
    r.im13_residual = std::abs(p13.imag());
    r.im24_residual = std::abs(p24.imag());
    r.pairwise_im = {std::abs(p12.imag()), r.im13_residual, std::abs(p14.imag()),
                     std::abs(p23.imag()), r.im24_residual, std::abs(p34.imag())};
    r.tol = tol;
    r.pass = r.det_residual <= tol && r.im13_residual <= tol && r.im24_residual <= tol;
    return r;
}

PhaseForm extract_phase(const AlphaVector& alpha) {
    const Complex pivot = (alpha.alpha1 != Complex{}) ? alpha.alpha1 : alpha.alpha2;
    if (pivot == Complex{})
        throw std::invalid_argument("extract_phase: alpha1 = alpha2 = 0 cannot occur in Class alpha");

    const double mod = std::abs(pivot);
    const Complex cp = std::conj(pivot);

    PhaseForm f;
    f.theta = normalize_angle(std::arg(pivot));
    f.a1 = (alpha.alpha1 * cp).real() / mod;
    f.a2 = (alpha.alpha2 * cp).real() / mod;
    f.a3 = (alpha.alpha3 * cp).real() / mod;
    f.a4 = (alpha.alpha4 * cp).real() / mod;
    return f;
}

std::array<Complex, 2> apply_bc_alpha(const AlphaVector& alpha, const BoundaryData& bd) {
    return {bd.psi_plus - (alpha.alpha1 * bd.psi_minus + alpha.alpha2 * bd.dpsi_minus),
            bd.dpsi_plus - (alpha.alpha3 * bd.psi_minus + alpha.alpha4 * bd.dpsi_minus)};
}

std::array<Complex, 2> apply_bc_rho(const RhoPair& rho, const BoundaryData& bd) {
    const Complex left = rho.rho_minus.is_infinite()
                             ? bd.psi_minus
                             : rho.rho_minus.value() * bd.psi_minus - bd.dpsi_minus;
    const Complex right = rho.rho_plus.is_infinite()
                              ? bd.psi_plus
                              : rho.rho_plus.value() * bd.psi_plus - bd.dpsi_plus;
    return {left, right};
}

Complex boundary_form(const BoundaryData& psi, const BoundaryData& phi) {
    return std::conj(psi.dpsi_plus) * phi.psi_plus - std::conj(psi.psi_plus) * phi.dpsi_plus -
           std::conj(psi.dpsi_minus) * phi.psi_minus + std::conj(psi.psi_minus) * phi.dpsi_minus;
}

}  // namespace splitline
