#include "hvol/quadrature.hpp"

#include "hvol/iterated.hpp"
#include "hvol/kernel.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hvol;

TEST_SUITE("quadrature") {

TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
    const auto r1 = tanh_sinh([](double t) { return cplx(std::sin(t), 0.0); }, 0.0,
                              std::numbers::pi, 1e-12, 10);
    CHECK(r1.converged);
    CHECK(std::abs(r1.value - 2.0) < 1e-11);

    // inverse square root at the right endpoint
    const auto r2 = tanh_sinh_offsets(
        [](double, double, double ob) { return cplx(1.0 / std::sqrt(ob), 0.0); }, 0.0,
        1.0, 1e-12, 10);
    CHECK(r2.converged);
    CHECK(std::abs(r2.value - 2.0) < 1e-10);

    // beta integrand, both endpoints singular: B(1/8, 1/2)
    const auto r3 = tanh_sinh_offsets(
        [](double, double oa, double ob) {
            return cplx(std::pow(oa, 1.0 / 8.0 - 1.0) / std::sqrt(ob), 0.0);
        },
        0.0, 1.0, 1e-12, 12);
    CHECK(r3.converged);
    CHECK(std::abs(r3.value.real() - beta(1.0 / 8.0, 0.5)) /
              std::abs(r3.value.real()) < 1e-10);
}

TEST_CASE("letter periods against the closed form") {
    const Genus g(3);
    CHECK(std::abs(quad_period(g, FormRef::omega(1), PathLetter::plain(0)) - cplx(1, 0)) <
          1e-9);
    CHECK(std::abs(quad_period(g, FormRef::omega(2), PathLetter::plain(3)) -
                   zeta_pow(g, 6)) < 1e-9);
    CHECK(std::abs(quad_period(g, FormRef::omega(1), PathLetter::iota(0)) + cplx(1, 0)) <
          1e-9);
    // conjugate form
    CHECK(std::abs(quad_period(g, FormRef::omega_conj(2), PathLetter::plain(1)) -
                   std::conj(zeta_pow(g, 2))) < 1e-9);
}

TEST_CASE("error decreases with increasing level") {
    const Genus g(3);
    const cplx exact = cplx(1, 0); // omega'_1 over e_0
    double prev = 1.0;
    for (int level = 6; level <= 10; level += 2) {
        QuadConfig cfg;
        cfg.level = level;
        cfg.abs_tol = 1e-13;
        const double err =
            std::abs(quad_period(g, FormRef::omega(1), PathLetter::plain(0), cfg) - exact);
        CHECK(err < prev + 1e-13);
        prev = err;
    }
    CHECK(prev < 1e-11);
}

TEST_CASE("iterated integral over a single letter") {
    const Genus g(3);
    const cplx v =
        quad_iterated(g, FormRef::omega(1), FormRef::omega(1),
                      PathWord{{PathLetter::plain(0)}});
    CHECK(std::abs(v - cplx(0.5, 0.0)) < 1e-6);
}

TEST_CASE("iterated integral over loops against the closed forms") {
    const Genus g(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const LoopRef a1{LoopRef::a, 1}, b2{LoopRef::b, 2};
            CHECK(std::abs(quad_iterated(g, FormRef::omega(i), FormRef::omega(j),
                                         a1.word(g)) -
                           loop_iterated_closed(g, i, j, a1)) < 1e-6);
            CHECK(std::abs(quad_iterated(g, FormRef::omega(i), FormRef::omega_conj(j),
                                         b2.word(g)) -
                           loop_iterated_closed(g, i, j, b2, true)) < 1e-6);
        }
}

TEST_CASE("oracle duality from numerically built harmonic forms") {
    const Genus g(3);
    const QuadOracle oracle(g);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const double d = i == j ? 1.0 : 0.0;
            CHECK(std::abs(oracle.word_period(FormRef::alpha(i), loop_b(g, j)) - d) <
                  1e-8);
            CHECK(std::abs(oracle.word_period(FormRef::beta(i), loop_a(g, j)) + d) <
                  1e-8);
            CHECK(std::abs(oracle.word_period(FormRef::alpha(i), loop_a(g, j))) < 1e-8);
            CHECK(std::abs(oracle.word_period(FormRef::beta(i), loop_b(g, j))) < 1e-8);
        }
}

TEST_CASE("config validation") {
    QuadConfig cfg;
    cfg.level = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.level = 10;
    cfg.abs_tol = 1e-14;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

} // TEST_SUITE
