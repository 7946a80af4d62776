#include "hvol/volume.hpp"

#include <doctest.h>

#include <cmath>

using namespace hvol;

namespace {
BasisSymbol X(int i) { return {BasisSymbol::x, i}; }
BasisSymbol Y(int i) { return {BasisSymbol::y, i}; }

double circ_dist(double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, 1.0 - d);
}
} // namespace

TEST_SUITE("volume") {

TEST_CASE("k_decompose shapes") {
    const Genus g(3);
    TensorElement d = TensorElement::monomial({X(1), Y(1), Y(2)});
    d -= TensorElement::monomial({X(3), Y(3), Y(2)});
    const auto groups = k_decompose(g, d);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].loop.kind == LoopRef::b);
    CHECK(groups[0].loop.index == 2);
    REQUIRE(groups[0].pairs.size() == 2);
    CHECK(groups[0].pairing_sum() == 0);

    // third slot x_2 routes to the loop a_2
    TensorElement da = TensorElement::monomial({X(1), Y(1), X(2)});
    da -= TensorElement::monomial({X(3), Y(3), X(2)});
    const auto single = k_decompose(g, da);
    REQUIRE(single.size() == 1);
    CHECK(single[0].loop.kind == LoopRef::a);
    CHECK(single[0].loop.index == 2);

    // kind (6a) with i = 1 splits over b_1 and b_2
    TensorElement t6 = TensorElement::monomial({X(1), X(1), Y(1)});
    t6 -= TensorElement::monomial({X(1), X(2), Y(2)});
    t6 -= TensorElement::monomial({X(2), X(1), Y(2)});
    const auto g6 = k_decompose(g, t6);
    CHECK(g6.size() == 2);
    for (const auto& grp : g6) CHECK(grp.pairing_sum() == 0);
}

TEST_CASE("k_decompose rejects elements outside ker p") {
    const Genus g(3);
    CHECK_THROWS_AS(k_decompose(g, TensorElement::monomial({X(1), Y(1), Y(2)})),
                    std::invalid_argument);
}

TEST_CASE("theorem values at genus 3") {
    const Genus g(3);
    // kind (2), i=1, k=2, z=y: raw is -1/2, i.e. 1/2 mod 1
    TensorElement t = TensorElement::monomial({X(1), Y(1), Y(2)});
    t -= TensorElement::monomial({X(3), Y(3), Y(2)});
    const HalfValue v = volume(g, t);
    CHECK(v.value == 0.5);
    CHECK(v.residual < 1e-9);

    // kind (1) vanishes
    CHECK(volume(g, TensorElement::monomial({X(1), X(2), Y(3)})).value == 0.0);

    // kind (6a), i=1 gives 1/2
    TensorElement t6 = TensorElement::monomial({X(1), X(1), Y(1)});
    t6 -= TensorElement::monomial({X(1), X(2), Y(2)});
    t6 -= TensorElement::monomial({X(2), X(1), Y(2)});
    CHECK(volume(g, t6).value == 0.5);
}

TEST_CASE("z_k = x_k branch vanishes at genus 4") {
    const Genus g(4);
    TensorElement t = TensorElement::monomial({X(2), Y(2), X(3)});
    t -= TensorElement::monomial({X(4), Y(4), X(3)});
    CHECK(volume(g, t).value == 0.0);
}

TEST_CASE("full table equals the theorem at genus 3 and 4") {
    for (int gg : {3, 4}) {
        const Genus g(gg);
        for (const VolumeRow& row : volume_table(g)) {
            CHECK(row.value.value == expected_volume(g, row.family));
            CHECK(row.value.residual < 1e-8);
        }
    }
}

TEST_CASE("kind 2 zero branches") {
    const Genus g(6);
    for (const VolumeRow& row : volume_table(g)) {
        if (row.family.kind != FamilyKind::k2) continue;
        const bool half = row.family.zs[2] == BasisSymbol::y && row.family.k >= 2 &&
                          row.family.k <= 5 && row.family.i < row.family.k;
        CHECK(row.value.value == (half ? 0.5 : 0.0));
    }
}

TEST_CASE("S3 equivariance of the computed volume") {
    const Genus g(3);
    for (const CanonicalFamily& fam : enumerate_family_a(g)) {
        const TensorElement t = fam.expand(g);
        const double base = volume_real(g, t);
        for (const S3Perm& sigma : all_s3()) {
            const double image = volume_real(g, s3_act(sigma, t));
            CHECK(circ_dist(image, sigma.sign == 1 ? base : 1.0 - base) < 1e-8);
        }
    }
}

TEST_CASE("snap failure carries the raw value") {
    const SnapFailure f(0.3);
    CHECK(f.raw == 0.3);
}

} // TEST_SUITE
