#include "hvol/curve.hpp"

#include "hvol/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace hvol {

bool PathWord::well_formed() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i].ends_at_q1() != letters[i + 1].starts_at_q1()) return false;
    return true;
}

bool PathWord::is_loop_at_q0() const {
    if (letters.empty()) return true;
    return well_formed() && !letters.front().starts_at_q1() &&
           !letters.back().ends_at_q1();
}

PathWord PathWord::concat(const PathWord& other) const {
    PathWord out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
}

PathWord PathWord::inverse() const {
    PathWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

PathWord loop_a(const Genus& g, int i) {
    if (i < 1 || i > g.g) throw std::invalid_argument("loop_a: index out of [1, g]");
    return PathWord{{PathLetter::plain(2 * i - 1), PathLetter::iota(2 * i)}};
}

PathWord loop_b(const Genus& g, int i) {
    if (i < 1 || i > g.g) throw std::invalid_argument("loop_b: index out of [1, g]");
    PathWord w;
    for (int l = i; l >= 1; --l) {
        w.letters.push_back(PathLetter::plain(2 * l - 1));
        w.letters.push_back(PathLetter::iota(2 * l - 2));
    }
    return w;
}

std::map<std::string, PathWord> loop_words(const Genus& g) {
    std::map<std::string, PathWord> out;
    for (int i = 1; i <= g.g; ++i) {
        out["a" + std::to_string(i)] = loop_a(g, i);
        out["b" + std::to_string(i)] = loop_b(g, i);
    }
    return out;
}

PathWord relator_word(const Genus& g) {
    PathWord w;
    for (int j = 0; j <= 2 * g.g + 1; j += 2) {
        w.letters.push_back(PathLetter::plain(j));
        w.letters.push_back(PathLetter::iota(j + 1));
    }
    return w;
}

namespace {

// plain e_j at time t; the radicand 1-(2t)^{2g+2} is real nonnegative on
// each half, so no complex branch is ever taken.  expm1/log1p keep the
// w ~ sqrt(1/2 - t) behaviour accurate near the ramification point.
CurvePoint plain_point(const Genus& g, int j, double t) {
    const int n = g.n();
    const cplx zj = zeta_pow(g, j);
    const double s = (t <= 0.5) ? 2.0 * t : 2.0 - 2.0 * t;
    double radicand;
    if (s == 0.0) {
        radicand = 1.0;
    } else {
        radicand = -std::expm1(static_cast<double>(n) * std::log(s));
        if (radicand < 0.0) radicand = 0.0; // rounding at s == 1
    }
    const double root = std::sqrt(radicand);
    if (t <= 0.5) return {s * zj, cplx(0.0, root)};
    return {s * zj, cplx(0.0, -root)};
}

} // namespace

CurvePoint path_point(const Genus& g, const PathLetter& letter, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("path_point: t outside [0, 1]");
    const double s = letter.reversed ? 1.0 - t : t;
    CurvePoint p = plain_point(g, letter.index, s);
    if (letter.involuted) p.w = -p.w;
    return p;
}

cplx path_velocity(const Genus& g, const PathLetter& letter, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("path_velocity: t outside [0, 1]");
    const double s = letter.reversed ? 1.0 - t : t;
    const cplx zj = zeta_pow(g, letter.index);
    cplx v = (s <= 0.5) ? 2.0 * zj : -2.0 * zj;
    if (letter.reversed) v = -v;
    return v;
}

} // namespace hvol
