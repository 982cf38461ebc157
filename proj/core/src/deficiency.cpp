#include "splitline/deficiency.hpp"

namespace splitline {

namespace {

bool is_left(DeficiencyTag tag) {
    return tag == DeficiencyTag::l_plus || tag == DeficiencyTag::l_minus;
}

}  // namespace

double DeficiencyFunction::normalization() const {
    return std::pow(2.0, 0.25) * std::exp(geom.lambda / sqrt2);
}

Complex DeficiencyFunction::derivative_factor() const {
    switch (tag) {
        case DeficiencyTag::l_plus: return std::conj(eta);
        case DeficiencyTag::l_minus: return eta;
        case DeficiencyTag::r_plus: return -std::conj(eta);
        default: return -eta;
    }
}

Complex eval_deficiency(const DeficiencyFunction& f, double x) {
    const double l = f.geom.lambda;
    const double n = f.normalization();
    // exponents: L+ (1-i)x/sqrt2, L- (1+i)x/sqrt2, R+ (-1+i)x/sqrt2, R- (-1-i)x/sqrt2
    if (is_left(f.tag)) {
        if (x <= -l) {
            const double u = x / sqrt2;
            const double im = (f.tag == DeficiencyTag::l_plus) ? -u : u;
            return n * std::exp(u) * std::polar(1.0, im);
        }
        if (x >= l) return Complex{};
    } else {
        if (x >= l) {
            const double u = x / sqrt2;
            const double im = (f.tag == DeficiencyTag::r_plus) ? u : -u;
            return n * std::exp(-u) * std::polar(1.0, im);
        }
        if (x <= -l) return Complex{};
    }
    throw std::domain_error("eval_deficiency: x lies inside the junction segment");
}

Complex r_plus_boundary_value(const JunctionGeometry& geom) {
    return eval_deficiency({DeficiencyTag::r_plus, geom}, geom.lambda);
}

double deficiency_norm_closed(const DeficiencyFunction& f) {
    const double n = f.normalization();
    return n * n * std::exp(-sqrt2 * f.geom.lambda) / sqrt2;
}

double deficiency_norm_quadrature(const DeficiencyFunction& f, double tail, int panels) {
    if (tail <= 0.0 || panels < 1)
        throw std::invalid_argument("deficiency_norm_quadrature: bad window");
    // integrate |f|^2 over [boundary - tail, boundary] or mirrored on the right
    const double l = f.geom.lambda;
    const double a = is_left(f.tag) ? -l - tail : l;
    const double b = a + tail;
    const double h = (b - a) / (2.0 * panels);
    auto density = [&f](double x) { return std::norm(eval_deficiency(f, x)); };
    double sum = density(a) + density(b);
    for (int i = 1; i < 2 * panels; ++i) sum += density(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

BoundaryMatrixPair boundary_matrices(const QuaternionDecomposition& d,
                                     const JunctionGeometry& geom) {
    const Complex rp = r_plus_boundary_value(geom);
    const Complex rpc = std::conj(rp);
    const Complex e = eta;
    const Complex ec = std::conj(eta);
    const Complex g31c = d.gamma3 * std::conj(d.gamma1);
    const Complex g32c = d.gamma3 * std::conj(d.gamma2);
    const Complex g31 = d.gamma3 * d.gamma1;
    const Complex g32 = d.gamma3 * d.gamma2;

    const C2Matrix a_plus{-g32c * rpc, rp + g31c * rpc,
                          e * g32c * rpc, -(ec * rp + e * g31c * rpc)};
    // the derivative row carries the e^{+-i pi/4} factors of the minus-basis
    // exponents; dropping them breaks det A- = i sqrt2 |R+|^2 gamma3 gamma2
    const C2Matrix a_minus{rp + g31 * rpc, g32 * rpc,
                           ec * rp + e * g31 * rpc, e * g32 * rpc};
    return {a_plus, a_minus};
}

C2Matrix oracle_boundary_matrix(const QuaternionDecomposition& d,
                                const JunctionGeometry& geom) {
    const BoundaryMatrixPair pair = boundary_matrices(d, geom);
    if (std::abs(pair.a_minus.det()) == 0.0)
        throw std::domain_error("oracle_boundary_matrix: singular A- (diagonal extension)");
    return pair.a_plus * inverse(pair.a_minus);
}

BoundaryData domain_sample(const UnitaryU2& u, const JunctionGeometry& geom,
                           Complex c_left, Complex c_right) {
    const DeficiencyFunction lp{DeficiencyTag::l_plus, geom};
    const DeficiencyFunction lm{DeficiencyTag::l_minus, geom};
    const DeficiencyFunction rp{DeficiencyTag::r_plus, geom};
    const DeficiencyFunction rm{DeficiencyTag::r_minus, geom};

    const Complex dl = c_left * u.u11() + c_right * u.u21();  // L- coefficient
    const Complex dr = c_left * u.u12() + c_right * u.u22();  // R- coefficient

    const Complex lp_val = eval_deficiency(lp, -geom.lambda);
    const Complex lm_val = eval_deficiency(lm, -geom.lambda);
    const Complex rp_val = eval_deficiency(rp, geom.lambda);
    const Complex rm_val = eval_deficiency(rm, geom.lambda);

    BoundaryData bd;
    bd.psi_minus = c_left * lp_val + dl * lm_val;
    bd.dpsi_minus = c_left * lp.derivative_factor() * lp_val + dl * lm.derivative_factor() * lm_val;
    bd.psi_plus = c_right * rp_val + dr * rm_val;
    bd.dpsi_plus = c_right * rp.derivative_factor() * rp_val + dr * rm.derivative_factor() * rm_val;
    return bd;
}

}  // namespace splitline
