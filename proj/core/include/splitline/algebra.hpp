#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace splitline {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double sqrt2 = 1.41421356237309504880;

// eta = e^{i pi/4}; the derivative factors of the deficiency exponentials
// are eta^*, eta, -eta^*, -eta.
inline const Complex eta{sqrt2 / 2.0, sqrt2 / 2.0};

// Maps any angle into [0, 2*pi).
inline double normalize_angle(double a) {
    const double two_pi = 2.0 * pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r;
}

struct C2Matrix {
    Complex m11{}, m12{}, m21{}, m22{};

    static C2Matrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    C2Matrix adjoint() const {
        return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
    }

    Complex det() const { return m11 * m22 - m12 * m21; }

    C2Matrix operator*(const C2Matrix& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }

    std::array<Complex, 2> apply(const std::array<Complex, 2>& v) const {
        return {m11 * v[0] + m12 * v[1], m21 * v[0] + m22 * v[1]};
    }
};

inline C2Matrix operator*(Complex s, const C2Matrix& m) {
    return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
}

inline C2Matrix operator-(const C2Matrix& a, const C2Matrix& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

inline double max_abs_entry(const C2Matrix& m) {
    return std::max(std::max(std::abs(m.m11), std::abs(m.m12)),
                    std::max(std::abs(m.m21), std::abs(m.m22)));
}

// Max entrywise distance; the comparison metric for all matrix-level contracts.
inline double matrix_distance(const C2Matrix& a, const C2Matrix& b) {
    return max_abs_entry(a - b);
}

inline C2Matrix inverse(const C2Matrix& m) {
    const Complex d = m.det();
    if (std::abs(d) == 0.0) throw std::domain_error("inverse: singular 2x2 matrix");
    return {m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d};
}

}  // namespace splitline
