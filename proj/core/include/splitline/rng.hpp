#pragma once

#include <cstdint>

#include "splitline/extensions.hpp"

namespace splitline {

// 64-bit linear congruential generator, chosen so that every alternate
// implementation can replicate the verification streams documented in the
// README:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   double draw = (state >> 11) * 2^-53, in [0, 1)
// The seed is the initial state; the first draw advances before output.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_;
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

private:
    std::uint64_t state_;
};

// Uniform-angle unitary sampling through the decomposition itself.
// Draw order: mixing angle b in [0, pi/2], then the phases of gamma1, gamma2,
// gamma3, each in [0, 2*pi).
inline QuaternionDecomposition sample_decomposition(Lcg64& g) {
    const double b = g.uniform(0.0, 0.5 * pi);
    const double t1 = g.uniform(0.0, 2.0 * pi);
    const double t2 = g.uniform(0.0, 2.0 * pi);
    const double t3 = g.uniform(0.0, 2.0 * pi);
    return {std::polar(std::cos(b), t1), std::polar(std::sin(b), t2), std::polar(1.0, t3)};
}

inline UnitaryU2 sample_unitary(Lcg64& g) {
    return UnitaryU2{sample_decomposition(g).reconstruct()};
}

// Redraws the full angle block until |gamma2| clears the cutoff.
inline QuaternionDecomposition sample_nondiagonal(Lcg64& g, double min_gamma2 = 0.01) {
    for (;;) {
        QuaternionDecomposition d = sample_decomposition(g);
        if (std::abs(d.gamma2) > min_gamma2) return d;
    }
}

// Cauchy-distributed Robin coefficient, redrawn while |rho| exceeds the cap
// (the tangent map covers the whole extended line; the cap keeps the
// rho -> theta -> rho roundtrip conditioning bounded).
inline ExtendedReal sample_rho_component(Lcg64& g, double cap = 100.0) {
    for (;;) {
        const double r = std::tan(pi * (g.next_double() - 0.5));
        if (std::abs(r) <= cap) return ExtendedReal{r};
    }
}

}  // namespace splitline
