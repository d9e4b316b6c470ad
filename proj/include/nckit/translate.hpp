#pragma once

#include "nckit/formula.hpp"

namespace nckit {

// Truth-preserving rewrite into the box-only language:
//   t(# f)  =  (t(f) -> [] t(f)) & (!t(f) -> [] !t(f))
//   t(% f)  =  [] t(f) | [] !t(f)
//   t(o f)  =  t(f) -> [] t(f)
// homomorphic elsewhere. Negations are taken as written; no double-negation
// cleanup happens. The result is box-only for any input, so this also serves
// as the desugaring of % and o alone.
Formula to_box(const Formula& f);

// Rewrite of the box-only language into the # language:
//   t'([] f)  =  # t'(f) & t'(f)
// homomorphic elsewhere. Truth-preserving on reflexive models only. Throws
// std::invalid_argument if the input contains %, o or #.
Formula to_blacktri(const Formula& f);

}  // namespace nckit
