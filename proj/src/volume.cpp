#include "hvol/volume.hpp"

#include <cmath>
#include <optional>

namespace hvol {

long long LoopGroup::pairing_sum() const {
    long long s = 0;
    for (const auto& [f1, f2, w] : pairs) {
        // intersection pairing of the Poincare-dual classes
        const BasisSymbol u{f1.kind == FormKind::alpha ? BasisSymbol::x : BasisSymbol::y,
                            f1.index};
        const BasisSymbol v{f2.kind == FormKind::alpha ? BasisSymbol::x : BasisSymbol::y,
                            f2.index};
        s += w * pairing(u, v);
    }
    return s;
}

namespace {

FormRef dual_form(const BasisSymbol& s) {
    return s.letter == BasisSymbol::x ? FormRef::alpha(s.index) : FormRef::beta(s.index);
}

LoopRef dual_loop(const BasisSymbol& s) {
    return {s.letter == BasisSymbol::x ? LoopRef::a : LoopRef::b, s.index};
}

// group by third slot; empty optional when some group fails the wedge
// condition
std::optional<std::vector<LoopGroup>> try_decompose(const TensorElement& t) {
    std::map<BasisSymbol, LoopGroup> groups;
    for (const auto& [tr, c] : t.terms) {
        auto [it, inserted] = groups.try_emplace(tr[2]);
        if (inserted) it->second.loop = dual_loop(tr[2]);
        it->second.pairs.emplace_back(dual_form(tr[0]), dual_form(tr[1]), c);
    }
    std::vector<LoopGroup> out;
    out.reserve(groups.size());
    for (auto& [sym, grp] : groups) {
        if (grp.pairing_sum() != 0) return std::nullopt;
        out.push_back(std::move(grp));
    }
    return out;
}

} // namespace

std::vector<LoopGroup> k_decompose(const Genus& g, const TensorElement& t) {
    for (const auto& [tr, c] : t.terms)
        for (const BasisSymbol& s : tr)
            if (s.index < 1 || s.index > g.g)
                throw std::invalid_argument("k_decompose: symbol index out of range");
    if (!in_kernel_p(t))
        throw std::invalid_argument("k_decompose: element not in ker p");
    // even rotations preserve the volume with sign +1; try them in turn if
    // a raw grouping ever violates the wedge condition
    for (const S3Perm& sigma : all_s3()) {
        if (sigma.sign != 1) continue;
        if (auto groups = try_decompose(s3_act(sigma, t))) return std::move(*groups);
    }
    throw std::invalid_argument("k_decompose: no even rotation is K-decomposable");
}

double volume_real(const Genus& g, const TensorElement& t) {
    double acc = 0.0;
    for (const LoopGroup& grp : k_decompose(g, t))
        for (const auto& [f1, f2, w] : grp.pairs)
            acc += static_cast<double>(w) * harmonic_pair_iterated(g, f1, f2, grp.loop);
    double r = acc - std::floor(acc);
    if (r >= 1.0) r -= 1.0;
    return r;
}

HalfValue volume(const Genus& g, const TensorElement& t) {
    const double raw = volume_real(g, t);
    const double d0 = std::min(raw, 1.0 - raw); // circular distance to 0
    const double dh = std::abs(raw - 0.5);
    const double residual = std::min(d0, dh);
    if (residual >= 1e-4) throw SnapFailure(raw);
    return {d0 < dh ? 0.0 : 0.5, raw, residual};
}

double expected_volume(const Genus& g, const CanonicalFamily& fam) {
    switch (fam.kind) {
        case FamilyKind::k6a:
        case FamilyKind::k6b: return 0.5;
        case FamilyKind::k2:
            if (fam.zs[2] == BasisSymbol::y && fam.k >= 2 && fam.k <= g.g - 1 &&
                fam.i < fam.k)
                return 0.5;
            return 0.0;
        default: return 0.0;
    }
}

std::vector<VolumeRow> volume_table(const Genus& g) {
    std::vector<VolumeRow> rows;
    std::string failures;
    for (const CanonicalFamily& fam : enumerate_family_a(g)) {
        try {
            rows.push_back({fam, volume(g, fam.expand(g))});
        } catch (const SnapFailure& e) {
            failures += fam.label() + " raw=" + std::to_string(e.raw) + "; ";
        }
    }
    if (!failures.empty())
        throw std::runtime_error("volume_table: snap failures: " + failures);
    return rows;
}

} // namespace hvol
