#ifndef HBX_COCYCLE_HPP
#define HBX_COCYCLE_HPP

#include "hbx/brace.hpp"

namespace hbx {

/* A coalgebra isomorphism pi : A -> H between Hopf algebras, with H a left
 * A-module algebra, whose multiplicativity defect is absorbed by the action.
 * The inverse of pi is supplied by the caller and stored, never recomputed
 * (exact inversion is available as hbx::inverse for convenience). */
struct CocycleData {
    HopfData a;
    HopfData h;
    Morphism phi;     // A (x) H -> H
    Morphism pi;      // A -> H
    Morphism pi_inv;  // H -> A

    CocycleData(HopfData a, HopfData h, Morphism phi, Morphism pi, Morphism pi_inv);
};

struct CocycleMorphism {
    CocycleData src;
    CocycleData dst;
    Morphism f;  // src.a -> dst.a
    Morphism g;  // src.h -> dst.h

    CocycleMorphism(CocycleData src, CocycleData dst, Morphism f, Morphism g);
};

/* Hopf suites for both endpoints, pi's isomorphism and coalgebra-morphism
 * laws, the module-algebra structure of the action, and the twisted
 * multiplicativity law itself. Consequences (the antipode-twist identity,
 * the counit absorption of the action, and - for cocommutative H - the
 * action being a coalgebra morphism) are verified as internal checks. */
CheckReport check_cocycle(const CocycleData& c);

CheckReport check_cocycle_morphism(const CocycleMorphism& m);

// The identity cocycle on h with the trivial action counit (x) H.
// Raises InvalidHopf unless h passes check_hopf.
CocycleData trivial_cocycle(const HopfData& h);

// The cocycle id : H2 -> H1 of a brace, acting through gamma_action.
// Raises InvalidBrace.
CocycleData cocycle_from_brace(const HopfBraceData& hb);

// The brace (H, H_pi) with the second structure transported through pi.
// Raises InvalidCocycle.
HopfBraceData brace_from_cocycle(const CocycleData& c);

// The companion action mult (mult (x) H) (pi (x) phi (x) antipode.pi)
// (comult (x) c) (comult (x) H); raises InvalidCocycle, and its defining
// properties are machine-checked by verify_action_correspondence.
Morphism companion_action(const CocycleData& c);

enum class ActionCandidate { action, companion };

/* Both directions of the equivalence between the two presentations of a
 * cocycle: given the action, derives the companion and checks its
 * module-algebra and twisted-multiplicativity laws; given the companion,
 * reconstructs the action and checks the original laws. Also checks that
 * the round trip reproduces the candidate exactly. */
CheckReport verify_action_correspondence(const HopfData& a, const HopfData& h,
                                         const Morphism& pi, const Morphism& candidate,
                                         ActionCandidate kind);

struct NamedBrace {
    std::string name;
    HopfBraceData brace;
};

struct NamedCocycle {
    std::string name;
    CocycleData cocycle;
};

/* For every brace: converting to a cocycle and back reproduces the brace,
 * structure constant by structure constant. For every cocycle pi: the pair
 * (pi, id_H) is an isomorphism onto the cocycle of its brace, with inverse
 * (pi_inv, id_H). */
CheckReport verify_brace_cocycle_equivalence(const std::vector<NamedBrace>& braces,
                                             const std::vector<NamedCocycle>& cocycles);

}  // namespace hbx

#endif
