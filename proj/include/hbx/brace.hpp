#ifndef HBX_BRACE_HPP
#define HBX_BRACE_HPP

#include "hbx/hopf.hpp"

namespace hbx {

/* Two Hopf algebra structures sharing one coalgebra on one object, tied by
 * the compatibility law relating the second multiplication to the first
 * through the gamma action. Both units are stored; whether they agree is a
 * checked law, not a construction-time constraint. */
struct HopfBraceData {
    FinObject obj;
    Morphism counit;
    Morphism comult;
    Morphism unit1, mult1, antipode1;
    Morphism unit2, mult2, antipode2;

    HopfBraceData(FinObject obj, Morphism counit, Morphism comult, Morphism unit1,
                  Morphism mult1, Morphism antipode1, Morphism unit2, Morphism mult2,
                  Morphism antipode2);

    HopfData hopf1() const { return HopfData(obj, unit1, mult1, counit, comult, antipode1); }
    HopfData hopf2() const { return HopfData(obj, unit2, mult2, counit, comult, antipode2); }
    AlgebraData algebra1() const { return AlgebraData(obj, unit1, mult1); }
    AlgebraData algebra2() const { return AlgebraData(obj, unit2, mult2); }
};

// mult1 after (antipode1 (x) mult2) after (comult (x) H) : H (x) H -> H.
// Makes (H, mult1) a module algebra over the second structure.
Morphism gamma_action(const HopfBraceData& hb);

// mult1 after (mult2 (x) antipode1) after (H (x) c) after (comult (x) H),
// the twisted companion of gamma_action.
Morphism gamma_prime_action(const HopfBraceData& hb);

/* Both Hopf suites first (short-circuiting: compatibility witnesses are
 * only meaningful over valid Hopf pairs), then the shared unit, the
 * compatibility law, the identities expressing mult2 through the gamma
 * actions, both module-algebra structures on (H, mult1), and, when the
 * shared coalgebra is cocommutative, that the gamma actions are coalgebra
 * morphisms. */
CheckReport check_hopf_brace(const HopfBraceData& hb);

bool is_cocommutative(const HopfBraceData& hb);

// Both structures equal to h; raises InvalidHopf unless h passes check_hopf.
HopfBraceData trivial_brace(const HopfData& h);

}  // namespace hbx

#endif
