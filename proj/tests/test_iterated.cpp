#include "hvol/iterated.hpp"

#include "hvol/kernel.hpp"

#include <doctest.h>

#include <cmath>

using namespace hvol;

namespace {

const std::vector<LoopRef> all_loops(int g) {
    std::vector<LoopRef> out;
    for (int k = 1; k <= g; ++k) {
        out.push_back({LoopRef::a, k});
        out.push_back({LoopRef::b, k});
    }
    return out;
}

} // namespace

TEST_SUITE("iterated") {

TEST_CASE("segment values") {
    const Genus g(3);
    const FormRef w1 = FormRef::omega(1);
    CHECK(std::abs(segment_iterated(g, w1, w1, PathLetter::plain(0)) - cplx(0.5, 0)) <
          1e-15);
    // the involuted letter carries the same double integral
    for (int j = 0; j <= 7; ++j)
        for (int i = 1; i <= 3; ++i)
            for (int k = 1; k <= 3; ++k)
                CHECK(std::abs(segment_iterated(g, FormRef::omega(i), FormRef::omega(k),
                                                PathLetter::plain(j)) -
                               segment_iterated(g, FormRef::omega(i), FormRef::omega(k),
                                                PathLetter::iota(j))) < 1e-15);
    // equal forms give half the squared period
    const cplx p = segment_period(g, FormRef::omega(2), PathLetter::iota(3));
    CHECK(std::abs(segment_iterated(g, FormRef::omega(2), FormRef::omega(2),
                                    PathLetter::iota(3)) -
                   0.5 * p * p) < 1e-15);
}

TEST_CASE("a_1 closed form pinned at genus 3") {
    const Genus g(3);
    //  (1/2) zeta^2 (1 - 2 zeta + zeta^2) with zeta = e^{i pi/4}
    const cplx zeta = zeta_pow(g, 1);
    const cplx expect = 0.5 * zeta * zeta * (1.0 - 2.0 * zeta + zeta * zeta);
    CHECK(std::abs(loop_iterated_closed(g, 1, 1, {LoopRef::a, 1}) - expect) < 1e-14);
    CHECK(std::abs(word_iterated(g, FormRef::omega(1), FormRef::omega(1), loop_a(g, 1)) -
                   expect) < 1e-14);
}

TEST_CASE("b_1 closed form has a single l-term") {
    for (int gg : {3, 4}) {
        const Genus g(gg);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j) {
                const cplx expect =
                    0.5 * (1.0 - 2.0 * zeta_pow(g, i) + zeta_pow(g, i + j));
                CHECK(std::abs(loop_iterated_closed(g, i, j, {LoopRef::b, 1}) - expect) <
                      1e-14);
            }
    }
}

TEST_CASE("conjugate closed form over a_1 pinned") {
    const Genus g(3);
    // i = j = 1: (1/2)(1 - 2 zeta^{-1} + 1) = 1 - zeta^{-1}
    const cplx expect = 1.0 - zeta_pow(g, -1);
    CHECK(std::abs(loop_iterated_closed(g, 1, 1, {LoopRef::a, 1}, true) - expect) <
          1e-14);
}

TEST_CASE("closed formulas match the shuffle engine everywhere") {
    for (int gg : {3, 4, 5}) {
        const Genus g(gg);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j)
                for (const LoopRef& loop : all_loops(gg))
                    for (bool conj : {false, true}) {
                        const FormRef f2 =
                            conj ? FormRef::omega_conj(j) : FormRef::omega(j);
                        const cplx engine =
                            word_iterated(g, FormRef::omega(i), f2, loop.word(g));
                        const cplx formula = loop_iterated_closed(g, i, j, loop, conj);
                        CHECK(std::abs(engine - formula) < 1e-12);
                    }
    }
}

TEST_CASE("shuffle identity on loops") {
    const Genus g(4);
    const std::vector<FormRef> forms = {FormRef::omega(1), FormRef::omega_conj(2),
                                        FormRef::alpha(2), FormRef::beta(4)};
    for (const FormRef& f1 : forms)
        for (const FormRef& f2 : forms)
            for (const LoopRef& loop : all_loops(4)) {
                const PathWord w = loop.word(g);
                const cplx lhs = word_iterated(g, f1, f2, w) + word_iterated(g, f2, f1, w);
                cplx p1 = 0.0, p2 = 0.0;
                for (const PathLetter& l : w.letters) {
                    const HarmonicCoefficients hc = harmonic_coefficients(g);
                    for (const auto& [c, e] : expand_form(g, f1, hc))
                        p1 += c * segment_period(g, e, l);
                    for (const auto& [c, e] : expand_form(g, f2, hc))
                        p2 += c * segment_period(g, e, l);
                }
                CHECK(std::abs(lhs - p1 * p2) < 1e-10);
            }
}

TEST_CASE("inserting e_j iota(e_j) never changes a word value, exactly") {
    const Genus g(3);
    const FormRef f1 = FormRef::omega(2), f2 = FormRef::omega_conj(3);
    const PathWord base = loop_b(g, 2);
    const CycElem ref = word_iterated_exact(g, f1, f2, base);
    for (size_t pos = 0; pos <= base.size(); pos += 2) {
        for (int j : {0, 3, 5}) {
            PathWord w = base;
            PathWord pair;
            const bool at_q1 = pos == 0 ? false : base.letters[pos - 1].ends_at_q1();
            if (at_q1)
                pair.letters = {PathLetter::iota(j), PathLetter::plain(j)};
            else
                pair.letters = {PathLetter::plain(j), PathLetter::iota(j)};
            w.letters.insert(w.letters.begin() + pos, pair.letters.begin(),
                             pair.letters.end());
            REQUIRE(w.is_loop_at_q0());
            const CycElem got = word_iterated_exact(g, f1, f2, w);
            CHECK((got - ref).is_literal_zero());
        }
    }
}

TEST_CASE("relator kills every holomorphic pair exactly") {
    for (int gg : {3, 4}) {
        const Genus g(gg);
        const PathWord r = relator_word(g);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j)
                CHECK(word_iterated_exact(g, FormRef::omega(i), FormRef::omega(j), r)
                          .is_zero());
    }
}

TEST_CASE("harmonic pair engine against the t_u displays") {
    for (int gg : {3, 4, 5}) {
        const Genus g(gg);
        for (int i = 1; i <= gg; ++i)
            for (int j = 1; j <= gg; ++j)
                for (int k = 1; k <= gg; ++k) {
                    const LoopRef ak{LoopRef::a, k}, bk{LoopRef::b, k};
                    const FormRef ai = FormRef::alpha(i), aj = FormRef::alpha(j);
                    const FormRef bi = FormRef::beta(i), bj = FormRef::beta(j);
                    CHECK(std::abs(harmonic_pair_iterated(g, bi, bj, ak) -
                                   harmonic_pair_formula(g, bi, bj, ak)) < 1e-10);
                    CHECK(std::abs(harmonic_pair_iterated(g, ai, aj, bk) -
                                   harmonic_pair_formula(g, ai, aj, bk)) < 1e-10);
                    CHECK(std::abs(harmonic_pair_iterated(g, bi, bj, bk)) < 1e-10);
                    CHECK(std::abs(harmonic_pair_iterated(g, ai, aj, ak)) < 1e-10);
                }
    }
}

TEST_CASE("pinned t_u formula values at genus 3") {
    const Genus g(3);
    // integral over a_2 of beta_1 beta_2 = -1/8
    CHECK(std::abs(harmonic_pair_formula(g, FormRef::beta(1), FormRef::beta(2),
                                         {LoopRef::a, 2}) -
                   (-0.125)) < 1e-14);
    CHECK(std::abs(harmonic_pair_iterated(g, FormRef::beta(1), FormRef::beta(2),
                                          {LoopRef::a, 2}) -
                   (-0.125)) < 1e-10);
    // beta beta over b_k vanishes (equation (2))
    CHECK(harmonic_pair_formula(g, FormRef::beta(2), FormRef::beta(2), {LoopRef::b, 1}) ==
          0.0);
}

TEST_CASE("k=1 degenerate pair sum in equation (4)") {
    // for k = 1 the v-sum is empty; the formula reduces to the u = 1 term
    const Genus g(4);
    const auto te = [&](long u) { return t_u(g, u).real(); };
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const double expect =
                (te(2 - 2 * j) * te(2 - 2 * i) - 2.0 * te(-2 * j) * te(2 - 2 * i) +
                 te(-2 * j) * te(-2 * i)) /
                (2.0 * 25.0);
            CHECK(std::abs(harmonic_pair_formula(g, FormRef::alpha(i), FormRef::alpha(j),
                                                 {LoopRef::b, 1}) -
                           expect) < 1e-14);
        }
}

TEST_CASE("mixed harmonic pairs run through the engine") {
    const Genus g(3);
    CHECK_NOTHROW(harmonic_pair_iterated(g, FormRef::alpha(1), FormRef::beta(1),
                                         {LoopRef::b, 2}));
    CHECK_THROWS_AS(harmonic_pair_formula(g, FormRef::alpha(1), FormRef::beta(1),
                                          {LoopRef::b, 2}),
                    std::invalid_argument);
}

} // TEST_SUITE
