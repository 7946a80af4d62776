#pragma once

#include "hvol/cyclotomic.hpp"
#include "hvol/periods.hpp"

namespace hvol {

// Length-2 iterated integral over a single letter.  Every letter is e_j or
// its exact reverse, so the value is always half the product of the two
// letter periods; omega kinds only.
cplx segment_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                      const PathLetter& letter);

// Shuffle fold over a word for an elementary (omega-kind) pair, carried out
// exactly in (1/2) Z[zeta]: letter periods are +-zeta^m, the fold only adds,
// shifts and halves.  is_zero() on the result decides vanishing exactly.
CycElem word_iterated_exact(const Genus& g, const FormRef& f1, const FormRef& f2,
                            const PathWord& word);

// Iterated integral of any two forms along a word; harmonic forms are
// expanded into omega'/conjugate pairs at this boundary and each elementary
// pair goes through the exact fold.
cplx word_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                   const PathWord& word);

// The displayed closed forms: over a_k
//   (1/2) zeta^{(i+e)(2k-1)} (1 - 2 zeta^e + zeta^{i+e})
// and over b_k
//   sum_l (1/2) zeta^{(i+e)(2l-2)} (1 - 2 zeta^i + zeta^{i+e})
//   + sum_{l<m} (zeta^i - 1)(zeta^e - 1) zeta^{i(2m-2) + e(2l-2)}
// with e = j for omega'_j in the second slot and e = -j for its conjugate.
cplx loop_iterated_closed(const Genus& g, int i, int j, const LoopRef& loop,
                          bool conjugate_second = false);

// Iterated integral of two harmonic forms over a canonical loop, via the
// expansion engine; the value is real (imaginary residue is checked).
double harmonic_pair_iterated(const Genus& g, const FormRef& h1, const FormRef& h2,
                              const LoopRef& loop);

// The t_u route: equations (1)-(4), so only (alpha, alpha) and (beta, beta)
// pairs; (beta beta over b_k) and (alpha alpha over a_k) are identically 0.
double harmonic_pair_formula(const Genus& g, const FormRef& h1, const FormRef& h2,
                             const LoopRef& loop);

// (coefficient, elementary form) expansion of any FormRef
std::vector<std::pair<cplx, FormRef>> expand_form(const Genus& g, const FormRef& f,
                                                  const HarmonicCoefficients& hc);

} // namespace hvol
