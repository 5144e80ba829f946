#ifndef HBX_HOPF_HPP
#define HBX_HOPF_HPP

#include "hbx/pipeline.hpp"
#include "hbx/report.hpp"

namespace hbx {

/* Structure-constant carriers. Constructors validate shapes (endpoint
 * objects of every map) and nothing else; whether the data satisfies the
 * axioms is the checkers' business, so that deliberately broken data can be
 * constructed and diagnosed. */

struct AlgebraData {
    FinObject obj;
    Morphism unit;  // K -> A
    Morphism mult;  // A (x) A -> A

    AlgebraData(FinObject obj, Morphism unit, Morphism mult);
};

struct CoalgebraData {
    FinObject obj;
    Morphism counit;  // D -> K
    Morphism comult;  // D -> D (x) D

    CoalgebraData(FinObject obj, Morphism counit, Morphism comult);
};

struct HopfData {
    FinObject obj;
    Morphism unit;
    Morphism mult;
    Morphism counit;
    Morphism comult;
    Morphism antipode;  // H -> H

    HopfData(FinObject obj, Morphism unit, Morphism mult, Morphism counit, Morphism comult,
             Morphism antipode);

    AlgebraData algebra() const { return AlgebraData(obj, unit, mult); }
    CoalgebraData coalgebra() const { return CoalgebraData(obj, counit, comult); }
};

struct ModuleData {
    FinObject carrier;
    Morphism act;  // A (x) M -> M
    AlgebraData over;

    ModuleData(FinObject carrier, Morphism act, AlgebraData over);
};

// Unit and associativity laws, exact; witnesses on failure.
CheckReport check_algebra(const AlgebraData& a);

// Counit laws and coassociativity.
CheckReport check_coalgebra(const CoalgebraData& c);

// Braided tensor product algebra: mult twists the middle factors through the
// braiding before multiplying componentwise.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);
CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d);

// f * g = mult_A after (f (x) g) after comult_C, for f, g : C -> A.
Morphism convolve(const Morphism& f, const Morphism& g, const CoalgebraData& c,
                  const AlgebraData& a);
// The convolution unit: unit_A after counit_C.
Morphism convolution_unit(const CoalgebraData& c, const AlgebraData& a);

// Algebra + coalgebra suites, then the four compatibility laws making the
// counit and comultiplication algebra morphisms. Later layers are skipped
// while earlier ones fail.
CheckReport check_bialgebra(const HopfData& h);

// Bialgebra suite, both antipode convolution laws, then the derived antipode
// identities (antimultiplicativity etc.), the latter flagged as internal
// inconsistencies since they are consequences of the rest.
CheckReport check_hopf(const HopfData& h);

CheckReport check_left_module(const ModuleData& m);

// (B, act) a left module over the Hopf algebra d whose unit and
// multiplication are equivariant for the diagonal action on B (x) B.
CheckReport check_module_algebra(const AlgebraData& b, const Morphism& act, const HopfData& d);

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const CoalgebraData& c);
bool is_cocommutative(const HopfData& h);

// M = A acting on itself by multiplication.
ModuleData regular_module(const AlgebraData& a);
// act = counit (x) M.
ModuleData trivial_module(const HopfData& h, const FinObject& m);

// Transpose of all structure constants; requires a symmetric braiding.
HopfData dual_hopf(const HopfData& h);

}  // namespace hbx

#endif
