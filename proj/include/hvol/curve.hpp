#pragma once

#include "hvol/genus.hpp"

#include <map>
#include <string>
#include <vector>

namespace hvol {

// One oriented arc on C0.  The underlying path e_j runs Q0 -> P_j -> Q1;
// the involuted letter iota(e_j) is its image under (z, w) -> (z, -w),
// which coincides with the reversed parametrization e_j^{-1}.  Reversal is
// kept as a flag so sign bookkeeping stays at the letter level.
struct PathLetter {
    int index = 0;          // j in 0..2g+1
    bool involuted = false; // iota applied
    bool reversed = false;  // opposite orientation

    static PathLetter plain(int j) { return {j, false, false}; }
    static PathLetter iota(int j) { return {j, true, false}; }

    PathLetter inverse() const { return {index, involuted, !reversed}; }

    // endpoints are always Q0 or Q1; false = Q0, true = Q1
    bool starts_at_q1() const { return involuted != reversed; }
    bool ends_at_q1() const { return !starts_at_q1(); }

    bool operator==(const PathLetter&) const = default;
};

struct PathWord {
    std::vector<PathLetter> letters;

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }

    // consecutive letters must chain Q0/Q1 endpoints
    bool well_formed() const;
    // well formed, starts and ends at Q0
    bool is_loop_at_q0() const;

    PathWord concat(const PathWord& other) const;
    PathWord inverse() const;
};

struct CurvePoint {
    cplx z;
    cplx w;
};

// a_i and b_i as words in the letters, keyed "a1".."ag", "b1".."bg"
std::map<std::string, PathWord> loop_words(const Genus& g);

PathWord loop_a(const Genus& g, int i);
PathWord loop_b(const Genus& g, int i);

// e_0 iota(e_1) e_2 ... e_{2g} iota(e_{2g+1}), null homotopic in C0
PathWord relator_word(const Genus& g);

// The explicit parametrization of a letter at time t in [0, 1].
// Plain e_j: (2t zeta^j, i sqrt(1-(2t)^{2g+2})) on the first half and
// ((2-2t) zeta^j, -i sqrt(1-(2-2t)^{2g+2})) on the second; involution
// negates w; reversal maps t -> 1-t.
CurvePoint path_point(const Genus& g, const PathLetter& letter, double t);

// dz/dt of the same parametrization (piecewise constant, used by the
// quadrature oracle to pull differentials back to [0, 1])
cplx path_velocity(const Genus& g, const PathLetter& letter, double t);

} // namespace hvol
