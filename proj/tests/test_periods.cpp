#include "hvol/periods.hpp"

#include <doctest.h>

#include <cmath>

using namespace hvol;

TEST_SUITE("periods") {

TEST_CASE("letter periods pinned at genus 3") {
    const Genus g(3);
    CHECK(std::abs(segment_period(g, FormRef::omega(1), PathLetter::plain(0)) -
                   cplx(1, 0)) < 1e-15);
    CHECK(std::abs(segment_period(g, FormRef::omega(1), PathLetter::iota(0)) -
                   cplx(-1, 0)) < 1e-15);
    // conj(zeta^2) = -i
    CHECK(std::abs(segment_period(g, FormRef::omega_conj(2), PathLetter::plain(1)) -
                   cplx(0, -1)) < 1e-15);
    // reversal negates
    CHECK(std::abs(segment_period(g, FormRef::omega(2), PathLetter{3, false, true}) +
                   segment_period(g, FormRef::omega(2), PathLetter::plain(3))) < 1e-15);
}

TEST_CASE("alpha/beta rejected at the segment level") {
    const Genus g(3);
    CHECK_THROWS_AS(segment_period(g, FormRef::alpha(1), PathLetter::plain(0)),
                    std::invalid_argument);
}

TEST_CASE("loop periods pinned at genus 3") {
    const Genus g(3);
    CHECK(std::abs(loop_period_closed(g, 2, {LoopRef::a, 1}) - cplx(1, 1)) < 1e-14);
    CHECK(std::abs(loop_period_closed(g, 2, {LoopRef::b, 1}) - cplx(-1, 1)) < 1e-14);
}

TEST_CASE("loop periods equal letter sums") {
    for (int gg : {3, 4, 5}) {
        const Genus g(gg);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j)
                for (const LoopRef loop : {LoopRef{LoopRef::a, j}, LoopRef{LoopRef::b, j}}) {
                    cplx sum = 0.0;
                    for (const PathLetter& l : loop.word(g).letters)
                        sum += segment_period(g, FormRef::omega(i), l);
                    CHECK(std::abs(sum - loop_period_closed(g, i, loop)) < 1e-12);
                }
    }
}

TEST_CASE("period matrices pass their internal cross-checks") {
    for (int gg = 3; gg <= 8; ++gg) CHECK_NOTHROW(period_matrices(Genus(gg)));
}

TEST_CASE("Z is symmetric pure imaginary with positive definite imaginary part") {
    for (int gg : {3, 4}) {
        const Genus g(gg);
        const PeriodMatrices pm = period_matrices(g);
        for (int i = 0; i < gg; ++i)
            for (int j = 0; j < gg; ++j) {
                CHECK(std::abs(pm.z.at(i, j) - pm.z.at(j, i)) < 1e-12);
                CHECK(std::abs(pm.z.at(i, j).real()) < 1e-12);
            }
    }
}

TEST_CASE("three Z routes agree") {
    for (int gg : {3, 4, 6}) {
        const Genus g(gg);
        CHECK(mat_max_abs_diff(z_schindler(g), z_product(g)) < 1e-10);
        CHECK(mat_max_abs_diff(z_schindler(g), z_remark(g)) < 1e-10);
    }
}

TEST_CASE("harmonic coefficients are conjugate symmetric") {
    const Genus g(4);
    const HarmonicCoefficients hc = harmonic_coefficients(g);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 0; j < g.g; ++j) {
            CHECK(std::abs(hc.coeff(FormRef::alpha(i), g.g + j) -
                           std::conj(hc.coeff(FormRef::alpha(i), j))) < 1e-15);
            CHECK(std::abs(hc.coeff(FormRef::beta(i), g.g + j) -
                           std::conj(hc.coeff(FormRef::beta(i), j))) < 1e-15);
        }
}

TEST_CASE("duality table") {
    for (int gg : {3, 4, 5}) {
        const Genus g(gg);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j) {
                const double d = i == j ? 1.0 : 0.0;
                const LoopRef aj{LoopRef::a, j}, bj{LoopRef::b, j};
                CHECK(std::abs(loop_period(g, FormRef::alpha(i), aj)) < 1e-10);
                CHECK(std::abs(loop_period(g, FormRef::alpha(i), bj) - d) < 1e-10);
                CHECK(std::abs(loop_period(g, FormRef::beta(i), aj) + d) < 1e-10);
                CHECK(std::abs(loop_period(g, FormRef::beta(i), bj)) < 1e-10);
            }
    }
}

TEST_CASE("duality examples from the table") {
    const Genus g3(3);
    CHECK(std::abs(loop_period(g3, FormRef::alpha(2), {LoopRef::b, 2}) - 1.0) < 1e-10);
    CHECK(std::abs(loop_period(g3, FormRef::alpha(1), {LoopRef::a, 1})) < 1e-10);
    const Genus g4(4);
    CHECK(std::abs(loop_period(g4, FormRef::beta(3), {LoopRef::a, 3}) + 1.0) < 1e-10);
}

TEST_CASE("wedge numbers reproduce the intersection pairing") {
    const Genus g(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const double d = i == j ? 1.0 : 0.0;
            CHECK(std::abs(wedge_number(g, FormRef::alpha(i), FormRef::beta(j)) - d) < 1e-9);
            CHECK(std::abs(wedge_number(g, FormRef::beta(j), FormRef::alpha(i)) + d) < 1e-9);
            CHECK(std::abs(wedge_number(g, FormRef::alpha(i), FormRef::alpha(j))) < 1e-9);
            // holomorphic wedge holomorphic vanishes identically
            CHECK(std::abs(wedge_number(g, FormRef::omega(i), FormRef::omega(j))) < 1e-9);
        }
}

} // TEST_SUITE
