#pragma once

#include "hvol/iterated.hpp"
#include "hvol/tensor.hpp"

namespace hvol {

// Terms of an (H^x3)' element that share a dual loop: the third slot picks
// the loop (x_k -> a_k, y_k -> b_k), the first two slots the harmonic
// integrands.  The weights must kill the total wedge class, which is what
// lets the correction form drop out on C0.
struct LoopGroup {
    LoopRef loop;
    std::vector<std::tuple<FormRef, FormRef, long long>> pairs;

    long long pairing_sum() const;
};

struct SnapFailure : std::runtime_error {
    double raw;
    explicit SnapFailure(double raw_)
        : std::runtime_error("volume: raw value " + std::to_string(raw_) +
                             " does not snap to {0, 1/2}"),
          raw(raw_) {}
};

struct HalfValue {
    double value;    // 0.0 or 0.5
    double raw;      // residue mod 1 before snapping
    double residual; // circular distance from raw to value

    std::string str() const { return value == 0.0 ? "0" : "1/2"; }
};

// Split an element of ker p into its per-loop groups.  Elements outside
// ker p are rejected; if a group ever failed the wedge condition the even
// slot rotations are tried first, mirroring the reduction used in the
// analytic computation.
std::vector<LoopGroup> k_decompose(const Genus& g, const TensorElement& t);

// The iterated-integral part of the harmonic volume, reduced mod 1 into
// [0, 1).  The correction term vanishes because every canonical loop is a
// word in the e_j and their involutes.
double volume_real(const Genus& g, const TensorElement& t);

// volume_real snapped to {0, 1/2}; throws SnapFailure if the raw value is
// not within 1e-4 of either
HalfValue volume(const Genus& g, const TensorElement& t);

// theorem table over the canonical family: 0.5 for kind (6) and for kind
// (2) with z = y, 2 <= k <= g-1, i < k; 0 otherwise
double expected_volume(const Genus& g, const CanonicalFamily& fam);

struct VolumeRow {
    CanonicalFamily family;
    HalfValue value;
};

// every representative evaluated through the engine
std::vector<VolumeRow> volume_table(const Genus& g);

} // namespace hvol
