#ifndef HBX_CONSTRUCTIONS_HPP
#define HBX_CONSTRUCTIONS_HPP

#include <optional>

#include "hbx/modules.hpp"

namespace hbx {

/* Finite group as a Cayley table on {0..n-1} with identity 0. The
 * constructor verifies identity, latin property, inverses and full
 * associativity, raising InvalidGroup otherwise. */
struct GroupTable {
    size_t n;
    std::vector<std::vector<size_t>> op;

    GroupTable(size_t n, std::vector<std::vector<size_t>> op);

    size_t mul(size_t a, size_t b) const { return op[a][b]; }
    size_t inv(size_t a) const;

    static GroupTable cyclic(size_t n);
    static GroupTable direct_product(const GroupTable& g, const GroupTable& h);
    static GroupTable symmetric3();

    bool operator==(const GroupTable& o) const { return op == o.op; }
};

/* Two group structures on one set with a common identity. Whether the
 * compatibility law holds is check_skew_brace's business. */
struct SkewBraceTable {
    size_t n;
    GroupTable diamond;
    GroupTable circ;

    SkewBraceTable(GroupTable diamond, GroupTable circ);

    bool operator==(const SkewBraceTable& o) const {
        return diamond == o.diamond && circ == o.circ;
    }
};

// Exhaustive triple check of
//   a o (b <> c) = (a o b) <> inv<>(a) <> (a o c)
CheckReport check_skew_brace(const SkewBraceTable& t);

// All Cayley tables on {0..n-1} with identity 0, emitted in lexicographic
// order of the flattened table.
std::vector<GroupTable> enumerate_group_tables(size_t n);

struct SkewBraceCensus {
    size_t order = 0;
    size_t labeled_count = 0;
    bool up_to_iso = false;
    std::optional<size_t> iso_count;
    std::vector<SkewBraceTable> structures;  // lexicographic; iso reps if reduced
};

// Labeled structures with identity 0 for n <= 8 (OrderTooLarge beyond);
// optional reduction under simultaneous relabelling fixing 0, keeping the
// lexicographically least representative of each class.
SkewBraceCensus enumerate_skew_braces(size_t n, bool up_to_iso);

// Group-like basis: mult from the table, grouplike comultiplication,
// antipode from inversion. Swap braiding. InvalidGroup on a bad table.
HopfData group_algebra(const GroupTable& g, const FieldSpec& field);

// mult1 from diamond, mult2 from circ on the shared group-like coalgebra;
// InvalidSkewBrace unless the compatibility law holds.
HopfBraceData linearize_skew_brace(const SkewBraceTable& t, const FieldSpec& field);

// dim 2, odd generator squaring to zero, primitive comultiplication, sign
// braiding; CharTwo in characteristic 2.
HopfData super_exterior_line(const FieldSpec& field);

// Truncated polynomial line k[x]/(x^n) with deg x = 1 under the bicharacter
// braiding for q; q must be a primitive n-th root of unity
// (NoPrimitiveRoot). The comultiplication is generated multiplicatively
// from the primitive generator and the antipode is solved, not transcribed.
HopfData braided_line(uint32_t n, const FieldSpec& field, const Scalar& q);
// Picks the smallest primitive n-th root in the field.
HopfData braided_line(uint32_t n, const FieldSpec& field);

// Solves the convolution-inverse condition for the antipode by Gauss
// elimination, degree block by degree block; raises NoAntipode if the
// system is not uniquely solvable.
Morphism solve_antipode(const FinObject& obj, const Morphism& unit, const Morphism& mult,
                        const Morphism& counit, const Morphism& comult);

struct NamedHopf {
    std::string name;
    HopfData hopf;
};

struct NamedModule {
    std::string name;
    ModuleData module;
    HopfData over;
};

struct NamedBraceModule {
    std::string name;
    BraceModuleData module;
};

/* The pinned instance roster every verification suite runs over: group
 * algebras of C1..C4, C2xC2, S3 over Q, F5 and F7, the super exterior line,
 * the braided line at n=3 over F7, trivial braces on all of them, the
 * linearized skew braces of order <= 6 (one representative per class) over
 * Q and F7, the induced cocycles, and regular/trivial modules throughout.
 * Construction order is deterministic. */
struct Catalog {
    std::vector<NamedHopf> hopfs;
    std::vector<NamedBrace> braces;
    std::vector<NamedCocycle> cocycles;
    std::vector<NamedModule> modules;
    std::vector<NamedBraceModule> brace_modules;
    std::vector<NamedCocycleModule> cocycle_modules;
};

Catalog catalog();

}  // namespace hbx

#endif
