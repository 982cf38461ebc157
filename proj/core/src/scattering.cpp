#include "splitline/scattering.hpp"

#include <algorithm>

namespace splitline {

namespace {

void check_k(double k) {
    if (!std::isfinite(k) || k <= 0.0)
        throw std::invalid_argument("scatter: wavenumber must be finite and positive");
}

ScatteringResult finish(double k, Side side, Complex r, Complex t) {
    return {k, side, r, t, std::abs(std::norm(r) + std::norm(t) - 1.0)};
}

// Plane-wave ansatz against the transfer condition
// (psi(+L), psi'(+L))^T = B (psi(-L), psi'(-L))^T, solved for (t, r) by Cramer.
ScatteringResult scatter_alpha(const AlphaVector& a, const JunctionGeometry& geom, double k,
                               Side side) {
    const Complex ik{0.0, k};
    const Complex ep = std::polar(1.0, k * geom.lambda);   // e^{+ik lambda}
    const Complex em = std::conj(ep);
    const Complex v1 = a.alpha1 - ik * a.alpha2;
    const Complex v2 = a.alpha3 - ik * a.alpha4;

    Complex m11, m12, m21, m22, b1, b2;
    if (side == Side::left) {
        // psi = e^{ikx} + r e^{-ikx} on the left, t e^{ikx} on the right
        m11 = ep;
        m12 = -v1 * ep;
        m21 = ik * ep;
        m22 = -v2 * ep;
        b1 = (a.alpha1 + ik * a.alpha2) * em;
        b2 = (a.alpha3 + ik * a.alpha4) * em;
    } else {
        // psi = e^{-ikx} + r e^{ikx} on the right, t e^{-ikx} on the left
        m11 = v1 * ep;
        m12 = -ep;
        m21 = v2 * ep;
        m22 = -ik * ep;
        b1 = em;
        b2 = -ik * em;
    }

    const Complex det = m11 * m22 - m12 * m21;
    // |det| = |a3 - ik(a1+a4) - k^2 a2| > 0 on Class alpha for every k > 0
    if (std::abs(det) == 0.0)
        throw std::domain_error("scatter: singular transfer system");
    const Complex t = (b1 * m22 - b2 * m12) / det;
    const Complex r = (m11 * b2 - m21 * b1) / det;
    return finish(k, side, r, t);
}

// Decoupled islands: no transmission, one Robin/Dirichlet reflection each.
ScatteringResult scatter_rho(const RhoPair& rho, const JunctionGeometry& geom, double k,
                             Side side) {
    const Complex ik{0.0, k};
    const Complex em2 = std::polar(1.0, -2.0 * k * geom.lambda);
    Complex r;
    if (side == Side::left) {
        r = rho.rho_minus.is_infinite()
                ? -em2
                : em2 * (ik - rho.rho_minus.value()) / (ik + rho.rho_minus.value());
    } else {
        r = rho.rho_plus.is_infinite()
                ? -em2
                : -em2 * (rho.rho_plus.value() + ik) / (rho.rho_plus.value() - ik);
    }
    return finish(k, side, r, Complex{});
}

std::vector<BoundState> bound_alpha(const AlphaVector& alpha, const JunctionGeometry&) {
    const PhaseForm f = extract_phase(alpha);
    const Complex up = std::polar(1.0, f.theta);
    const double b = f.a1 + f.a4;

    std::vector<BoundState> states;
    auto admit = [&](double kappa, bool double_root) {
        if (kappa > 0.0)
            states.push_back({kappa, -kappa * kappa, up * (f.a1 + f.a2 * kappa),
                              Island::both, double_root});
    };

    // decay rates solve a2 k^2 + (a1+a4) k + a3 = 0
    if (f.a2 == 0.0) {
        if (b != 0.0) admit(-f.a3 / b, false);
        // a2 = 0 with a1+a4 = 0 contradicts a1 a4 = 1; nothing to report
    } else {
        const double disc = b * b - 4.0 * f.a2 * f.a3;
        // disc = (a1-a4)^2 + 4 >= 4 on Class alpha, so distinct real roots;
        // the degenerate branches guard malformed input only
        if (disc == 0.0) {
            admit(-b / (2.0 * f.a2), true);
        } else if (disc > 0.0) {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (b + std::copysign(sq, b));
            admit(q / f.a2, false);
            admit(f.a3 / q, false);
        }
    }
    std::sort(states.begin(), states.end(),
              [](const BoundState& x, const BoundState& y) { return x.kappa > y.kappa; });
    return states;
}

std::vector<BoundState> bound_rho(const RhoPair& rho, const JunctionGeometry&) {
    std::vector<BoundState> states;
    // left island: psi = e^{kappa(x+L)} needs rho_minus = kappa > 0
    if (!rho.rho_minus.is_infinite() && rho.rho_minus.value() > 0.0) {
        const double kappa = rho.rho_minus.value();
        states.push_back({kappa, -kappa * kappa, Complex{}, Island::left, false});
    }
    // right island: psi = e^{-kappa(x-L)} needs rho_plus = -kappa < 0
    if (!rho.rho_plus.is_infinite() && rho.rho_plus.value() < 0.0) {
        const double kappa = -rho.rho_plus.value();
        states.push_back({kappa, -kappa * kappa, Complex{1.0}, Island::right, false});
    }
    std::sort(states.begin(), states.end(),
              [](const BoundState& x, const BoundState& y) { return x.kappa > y.kappa; });
    return states;
}

}  // namespace

ScatteringResult scatter(const Extension& ext, const JunctionGeometry& geom, double k,
                         Side side) {
    check_k(k);
    if (const auto* alpha = std::get_if<AlphaVector>(&ext))
        return scatter_alpha(*alpha, geom, k, side);
    return scatter_rho(std::get<RhoPair>(ext), geom, k, side);
}

C2Matrix smatrix(const Extension& ext, const JunctionGeometry& geom, double k) {
    const ScatteringResult left = scatter(ext, geom, k, Side::left);
    const ScatteringResult right = scatter(ext, geom, k, Side::right);
    return {left.r, right.t, left.t, right.r};
}

double transmission_phase(const AlphaVector& alpha, const JunctionGeometry& geom, double k,
                          double tol) {
    const ScatteringResult res = scatter(Extension{alpha}, geom, k, Side::left);
    if (std::abs(res.t) <= tol)
        throw std::domain_error("transmission_phase: transmission amplitude vanishes");
    return normalize_angle(std::arg(res.t));
}

double transmission_phase(const Extension& ext, const JunctionGeometry& geom, double k,
                          double tol) {
    if (const auto* alpha = std::get_if<AlphaVector>(&ext))
        return transmission_phase(*alpha, geom, k, tol);
    throw std::domain_error("transmission_phase: decoupled extension has no transmission");
}

std::vector<BoundState> bound_states(const Extension& ext, const JunctionGeometry& geom) {
    if (const auto* alpha = std::get_if<AlphaVector>(&ext)) return bound_alpha(*alpha, geom);
    return bound_rho(std::get<RhoPair>(ext), geom);
}

std::vector<double> KGrid::points() const {
    if (!(k_min > 0.0) || !(k_min < k_max) || steps < 2)
        throw std::invalid_argument("k grid needs 0 < k_min < k_max and at least 2 steps");
    std::vector<double> ks(steps);
    const double ratio = k_max / k_min;
    for (int i = 0; i < steps; ++i)
        ks[i] = k_min * std::pow(ratio, static_cast<double>(i) / (steps - 1));
    return ks;
}

}  // namespace splitline
