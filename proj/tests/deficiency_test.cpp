#include <doctest.h>

#include "splitline/deficiency.hpp"
#include "splitline/rng.hpp"

using namespace splitline;

namespace {

const Complex i_unit{0.0, 1.0};

DeficiencyFunction make(DeficiencyTag tag, double lambda) {
    return {tag, JunctionGeometry{lambda}};
}

}  // namespace

TEST_CASE("normalization constant") {
    CHECK(make(DeficiencyTag::l_plus, 0.0).normalization() ==
          doctest::Approx(std::pow(2.0, 0.25)));
    CHECK(make(DeficiencyTag::r_minus, 1.0).normalization() ==
          doctest::Approx(std::pow(2.0, 0.25) * std::exp(1.0 / sqrt2)));
}

TEST_CASE("eval supports only the owning island") {
    const DeficiencyFunction lp = make(DeficiencyTag::l_plus, 0.8);
    CHECK(std::abs(eval_deficiency(lp, 2.0)) == 0.0);
    CHECK_THROWS_AS(eval_deficiency(lp, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_deficiency(lp, 0.79), std::domain_error);
    CHECK_NOTHROW(eval_deficiency(lp, -0.8));

    // lambda = 0: both one-sided limits exist at the single junction point
    CHECK_NOTHROW(eval_deficiency(make(DeficiencyTag::l_minus, 0.0), 0.0));
    CHECK_NOTHROW(eval_deficiency(make(DeficiencyTag::r_plus, 0.0), 0.0));
}

TEST_CASE("eval matches the exponential closed forms") {
    const double lambda = 0.6;
    const double n = make(DeficiencyTag::l_plus, lambda).normalization();
    const double x = -1.9;
    const Complex lp = eval_deficiency(make(DeficiencyTag::l_plus, lambda), x);
    const Complex lm = eval_deficiency(make(DeficiencyTag::l_minus, lambda), x);
    CHECK(std::abs(lp - n * std::exp(x / sqrt2) * std::polar(1.0, -x / sqrt2)) < 1e-14);
    CHECK(std::abs(lm - std::conj(lp)) < 1e-14);

    const double y = 2.4;
    const Complex rp = eval_deficiency(make(DeficiencyTag::r_plus, lambda), y);
    const Complex rm = eval_deficiency(make(DeficiencyTag::r_minus, lambda), y);
    CHECK(std::abs(rp - n * std::exp(-y / sqrt2) * std::polar(1.0, y / sqrt2)) < 1e-14);
    CHECK(std::abs(rm - std::conj(rp)) < 1e-14);
}

TEST_CASE("boundary value identities") {
    for (double lambda : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        const JunctionGeometry geom{lambda};
        const Complex rp = r_plus_boundary_value(geom);
        CHECK(std::abs(rp - eval_deficiency(make(DeficiencyTag::r_plus, lambda), lambda)) ==
              0.0);
        CHECK(std::abs(eval_deficiency(make(DeficiencyTag::l_plus, lambda), -lambda) - rp) <
              1e-13);
        CHECK(std::abs(eval_deficiency(make(DeficiencyTag::l_minus, lambda), -lambda) -
                       std::conj(rp)) < 1e-13);
        CHECK(std::abs(eval_deficiency(make(DeficiencyTag::r_minus, lambda), lambda) -
                       std::conj(rp)) < 1e-13);
        // conjugation is a pure junction-phase rotation
        CHECK(std::abs(std::conj(rp) - rp * std::polar(1.0, -sqrt2 * lambda)) < 1e-13);
    }
}

TEST_CASE("derivative factors against finite differences") {
    const double h = 1e-6;
    for (double lambda : {0.0, 1.2}) {
        for (DeficiencyTag tag : {DeficiencyTag::l_plus, DeficiencyTag::l_minus,
                                  DeficiencyTag::r_plus, DeficiencyTag::r_minus}) {
            const DeficiencyFunction f = make(tag, lambda);
            const bool left =
                tag == DeficiencyTag::l_plus || tag == DeficiencyTag::l_minus;
            const double x = left ? -lambda - 1.0 : lambda + 1.0;
            const Complex fd =
                (eval_deficiency(f, x + h) - eval_deficiency(f, x - h)) / (2.0 * h);
            CHECK(std::abs(fd - f.derivative_factor() * eval_deficiency(f, x)) < 1e-9);
        }
    }
}

TEST_CASE("eigenvalue relation by second differences") {
    // -f'' = +i f on plus tags, -i f on minus tags; central second difference
    for (DeficiencyTag tag : {DeficiencyTag::l_plus, DeficiencyTag::l_minus,
                              DeficiencyTag::r_plus, DeficiencyTag::r_minus}) {
        const DeficiencyFunction f = make(tag, 0.9);
        const bool left = tag == DeficiencyTag::l_plus || tag == DeficiencyTag::l_minus;
        const double x = left ? -2.1 : 2.1;
        const bool plus = tag == DeficiencyTag::l_plus || tag == DeficiencyTag::r_plus;
        const Complex ev = plus ? i_unit : -i_unit;
        const double h = 1e-3;
        const Complex second = (eval_deficiency(f, x + h) - 2.0 * eval_deficiency(f, x) +
                                eval_deficiency(f, x - h)) /
                               (h * h);
        CHECK(std::abs(-second - ev * eval_deficiency(f, x)) < 1e-6);
    }
}

TEST_CASE("norms: closed form is 1 and quadrature agrees") {
    for (double lambda : {0.0, 1.0, 2.5}) {
        for (DeficiencyTag tag : {DeficiencyTag::l_plus, DeficiencyTag::l_minus,
                                  DeficiencyTag::r_plus, DeficiencyTag::r_minus}) {
            const DeficiencyFunction f = make(tag, lambda);
            CHECK(std::abs(deficiency_norm_closed(f) - 1.0) < 1e-13);
            CHECK(std::abs(deficiency_norm_quadrature(f) - deficiency_norm_closed(f)) <
                  1e-10);
        }
    }
    CHECK_THROWS_AS(
        deficiency_norm_quadrature(make(DeficiencyTag::l_plus, 1.0), -1.0, 16),
        std::invalid_argument);
}

TEST_CASE("boundary matrices: frozen swap-type junction") {
    const JunctionGeometry geom{0.0};
    const double n = std::pow(2.0, 0.25);
    const BoundaryMatrixPair pair = boundary_matrices({0.0, 1.0, 1.0}, geom);

    CHECK(matrix_distance(pair.a_plus, C2Matrix{-n, n, eta * n, -std::conj(eta) * n}) <
          1e-14);
    CHECK(matrix_distance(pair.a_minus, C2Matrix{n, n, std::conj(eta) * n, eta * n}) <
          1e-14);
    CHECK(std::abs(pair.a_minus.det() - i_unit * sqrt2 * n * n) < 1e-14);
}

TEST_CASE("det of the minus matrix has the closed form") {
    Lcg64 g(67);
    for (int i = 0; i < 200; ++i) {
        const JunctionGeometry geom{g.uniform(0.0, 3.0)};
        const QuaternionDecomposition d = sample_decomposition(g);
        const Complex rp = r_plus_boundary_value(geom);
        const Complex expected = i_unit * sqrt2 * std::norm(rp) * d.gamma3 * d.gamma2;
        const Complex det = boundary_matrices(d, geom).a_minus.det();
        CHECK(std::abs(det - expected) < 1e-11 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("oracle matrix: frozen junctions") {
    const JunctionGeometry geom{0.0};
    const C2Matrix swap_type = oracle_boundary_matrix({0.0, 1.0, 1.0}, geom);
    CHECK(matrix_distance(swap_type,
                          C2Matrix{i_unit, -i_unit * sqrt2, 0.0, i_unit}) < 1e-14);

    const C2Matrix free_junction = oracle_boundary_matrix(
        {1.0 / sqrt2, -i_unit / sqrt2, -std::polar(1.0, -pi / 4.0)}, geom);
    CHECK(matrix_distance(free_junction, C2Matrix::identity()) < 1e-14);

    CHECK_THROWS_AS(oracle_boundary_matrix({1.0, 0.0, 1.0}, geom), std::domain_error);
}

TEST_CASE("oracle agrees with the direct conversion") {
    Lcg64 g(71);
    for (int i = 0; i < 200; ++i) {
        const JunctionGeometry geom{g.uniform(0.0, 3.0)};
        const QuaternionDecomposition d = sample_nondiagonal(g);
        CHECK(matrix_distance(oracle_boundary_matrix(d, geom),
                              u_to_alpha(d, geom).alpha.matrix()) < 1e-9);
    }
}

TEST_CASE("transfer matrices are unimodular in modulus") {
    Lcg64 g(73);
    for (int i = 0; i < 200; ++i) {
        const JunctionGeometry geom{g.uniform(0.0, 3.0)};
        const AlphaVector a = u_to_alpha(sample_nondiagonal(g), geom).alpha;
        CHECK(std::abs(std::abs(a.matrix().det()) - 1.0) < 1e-10);
    }
}

TEST_CASE("domain samples satisfy the transfer condition") {
    Lcg64 g(79);
    for (int i = 0; i < 200; ++i) {
        const JunctionGeometry geom{g.uniform(0.0, 3.0)};
        const QuaternionDecomposition d = sample_nondiagonal(g);
        const Complex cl{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const Complex cr{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const BoundaryData bd = domain_sample(UnitaryU2{d.reconstruct()}, geom, cl, cr);
        const auto res = apply_bc_alpha(u_to_alpha(d, geom).alpha, bd);
        CHECK(std::max(std::abs(res[0]), std::abs(res[1])) < 1e-9);
    }
}

TEST_CASE("domain samples from a diagonal U satisfy the Robin condition") {
    const JunctionGeometry geom{0.8};
    const RhoPair rho{1.5, -0.25};
    const UnitaryU2 u = rho_to_u(rho, geom);
    Lcg64 g(83);
    for (int i = 0; i < 50; ++i) {
        const Complex cl{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const Complex cr{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
        const BoundaryData bd = domain_sample(u, geom, cl, cr);
        const auto res = apply_bc_rho(rho, bd);
        CHECK(std::max(std::abs(res[0]), std::abs(res[1])) < 1e-10);
    }
}

TEST_CASE("domain samples vanish with the coefficients and pair to a zero boundary form") {
    const JunctionGeometry geom{1.1};
    const UnitaryU2 u{C2Matrix{0.0, -1.0, 1.0, 0.0}};
    const BoundaryData zero = domain_sample(u, geom, Complex{}, Complex{});
    CHECK(std::abs(zero.psi_plus) == 0.0);
    CHECK(std::abs(zero.dpsi_minus) == 0.0);

    // self-adjointness: the form vanishes on every pair from one domain
    Lcg64 g(89);
    for (int i = 0; i < 100; ++i) {
        const QuaternionDecomposition d = sample_decomposition(g);
        const UnitaryU2 w{d.reconstruct()};
        const BoundaryData f = domain_sample(
            w, geom, {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)},
            {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)});
        const BoundaryData h = domain_sample(
            w, geom, {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)},
            {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)});
        CHECK(std::abs(boundary_form(f, h)) < 1e-10);
    }
}
