#include "soliton/varengine/reference_forms.hpp"

#include "soliton/exactnum/parse.hpp"

namespace soliton::varengine::reference_forms {

using exactnum::operator""_qn;

AnsatzFn f_ss() { return AnsatzFn::from({"-n/3"_qn, "-(n-6)/60"_qn, "-(13n-38)/60"_qn, 0, 0, 0}); }

AnsatzFn u_tilde() {
    return AnsatzFn::from({"-2(2n-3)/(3(3n-4))"_qn, "(247n^2-678n+456)/(60(3n-4)(5n-6))"_qn,
                           "-(n-6)(4n-5)/(30n(5n-6))"_qn, 0, 0, 0});
}

AnsatzFn u() {
    return AnsatzFn::from({"2(2n-3)/(3n-4)"_qn, "-(29n^2-82n+56)/(4(3n-4)(5n-6))"_qn,
                           "-(11n^2-19n+6)/(6n(5n-6))"_qn, 0, 0, 0});
}

AnsatzFn h_b() {
    return AnsatzFn::from({"-2(n-2)/(3n-4)"_qn, "(n-2)(7n-8)/((3n-4)(5n-6))"_qn,
                           "(n-2)(17n-18)/(6n(5n-6))"_qn, "n(n-2)/(3n-4)"_qn,
                           "-n(n-2)(7n-8)/(2(3n-4)(5n-6))"_qn, "-(n-1)(n-2)/(5n-6)"_qn});
}

SigmaQuad cross_conformal() {
    return {"-(87n^3-265n^2+186n+24)/(108n(3n-4))"_qn,
            "(2235n^3-9866n^2+14364n-6888)/(675(3n-4)(5n-6))"_qn};
}

SigmaQuad cross_tt() {
    return {"(n-2)^2(29n^3-59n^2+90n-72)/(72n(3n-4)(5n-6))"_qn,
            "-(n-2)^2(41n^2+40n-104)/(180(3n-4)(5n-6))"_qn};
}

SigmaQuad third_variation() {
    return {"-(19n^3-87n^2+36n+12)/(18n)"_qn, "(383n^2-174n+732)/900"_qn};
}

RatFunc Q4() { return "(4515n^4-19054n^3+10364n^2+28056n-25056)/(900(3n-4)(5n-6))"_qn; }

RatFunc Q2() { return "-(483n^5-2659n^4+3584n^3+492n^2-3120n+1152)/(36n(3n-4)(5n-6))"_qn; }

exactnum::Poly b1_numerator() { return "840n^4-4149n^3+3272n^2+2612n-2400"_qn.num(); }

Rat Q4_at_4() { return Rat(2959, 1575); }
Rat Q2_at_4() { return Rat(-311, 126); }
Rat sum_at_4() { return Rat(-619, 1050); }

} // namespace soliton::varengine::reference_forms
