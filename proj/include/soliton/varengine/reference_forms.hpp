#ifndef SOLITON_VARENGINE_REFERENCE_FORMS_HPP
#define SOLITON_VARENGINE_REFERENCE_FORMS_HPP

#include "soliton/exactnum/poly.hpp"
#include "soliton/varengine/integrals.hpp"

// Closed forms against which the pipeline is compared. They are never used
// as inputs to the pipeline itself.
namespace soliton::varengine::reference_forms {

AnsatzFn f_ss();
AnsatzFn u_tilde();
AnsatzFn u();
AnsatzFn h_b();

SigmaQuad cross_conformal();
/// The sigma_2^2 cubic is taken as 29n^3 - 59n^2 + 90n - 72.
SigmaQuad cross_tt();
SigmaQuad third_variation();

RatFunc Q4();
RatFunc Q2();

/// Reference numerator of Q4 + Q2 when sigma_4 = sigma_2^2.
exactnum::Poly b1_numerator();

/// Reference values at n = 4.
Rat Q4_at_4();
Rat Q2_at_4();
Rat sum_at_4();

} // namespace soliton::varengine::reference_forms

#endif
