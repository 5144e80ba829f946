#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbx/constructions.hpp"
#include "util.hpp"

using namespace hbx;

namespace {

// a nontrivial skew brace: the two group tables differ
SkewBraceTable nontrivial_order6() {
    SkewBraceCensus census = enumerate_skew_braces(6, true);
    for (const auto& s : census.structures)
        if (!(s.diamond == s.circ))
            return s;
    throw std::runtime_error("no nontrivial structure of order 6");
}

}  // namespace

TEST_CASE("trivial braces pass the full suite") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(check_hopf_brace(trivial_brace(group_algebra(GroupTable::symmetric3(), q))).passed());
    CHECK(check_hopf_brace(trivial_brace(group_algebra(GroupTable::cyclic(2), q))).passed());
    CHECK(check_hopf_brace(trivial_brace(super_exterior_line(q))).passed());
}

TEST_CASE("trivial brace over the braided line (non-symmetric backend)") {
    FieldSpec f7 = FieldSpec::prime(7);
    HopfBraceData hb = trivial_brace(braided_line(3, f7, Scalar::of_int(2, f7)));
    CHECK_FALSE(is_cocommutative(hb));
    CheckReport rep = check_hopf_brace(hb);
    CHECK(rep.passed());
    // the coalgebra-morphism laws only apply to cocommutative braces
    CHECK_FALSE(rep.law_checked("brace.gamma_comult"));
}

TEST_CASE("trivial_brace validates its input") {
    HopfData c3 = group_algebra(GroupTable::cyclic(3), FieldSpec::rationals());
    HopfData broken(c3.obj, c3.unit, c3.mult, c3.counit, c3.comult, identity(c3.obj));
    CHECK_THROWS_AS(trivial_brace(broken), precondition_error);
}

TEST_CASE("gamma action of a trivial brace is the trivial action") {
    HopfData s3 = group_algebra(GroupTable::symmetric3(), FieldSpec::rationals());
    HopfBraceData hb = trivial_brace(s3);
    CHECK(gamma_action(hb) == tensor(s3.counit, identity(s3.obj)));
}

TEST_CASE("gamma of a linearized skew brace matches the set-level map") {
    SkewBraceTable t = nontrivial_order6();
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = linearize_skew_brace(t, q);
    Morphism gamma = gamma_action(hb);
    // gamma(e_a (x) e_b) = e at diamond(inv_diamond(a), circ(a, b))
    for (size_t a = 0; a < t.n; ++a)
        for (size_t b = 0; b < t.n; ++b) {
            size_t expected = t.diamond.mul(t.diamond.inv(a), t.circ.mul(a, b));
            for (size_t k = 0; k < t.n; ++k)
                CHECK(gamma.at(k, a * t.n + b) ==
                      (k == expected ? Scalar::one(q) : Scalar::zero(q)));
        }
}

TEST_CASE("gamma-prime of a trivial brace is the linearized conjugation") {
    GroupTable g = GroupTable::symmetric3();
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = trivial_brace(group_algebra(g, q));
    Morphism gp = gamma_prime_action(hb);
    for (size_t x = 0; x < 6; ++x)
        for (size_t h = 0; h < 6; ++h) {
            size_t expected = g.mul(g.mul(x, h), g.inv(x));
            for (size_t k = 0; k < 6; ++k)
                CHECK(gp.at(k, x * 6 + h) ==
                      (k == expected ? Scalar::one(q) : Scalar::zero(q)));
        }
}

TEST_CASE("both gamma actions are unital") {
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);
    size_t d = hb.obj.dim();
    for (const Morphism& action : {gamma_action(hb), gamma_prime_action(hb)}) {
        Pipeline p(d);
        p.then(1, hb.unit2, d).then(action);
        CHECK(p.materialize(hb.obj, hb.obj) == identity(hb.obj));
    }
}

TEST_CASE("linearized nontrivial skew braces pass the brace suite") {
    SkewBraceTable t = nontrivial_order6();
    CHECK_FALSE(t.diamond == t.circ);
    CHECK(check_hopf_brace(linearize_skew_brace(t, FieldSpec::rationals())).passed());
    CHECK(check_hopf_brace(linearize_skew_brace(t, FieldSpec::prime(7))).passed());
}

TEST_CASE("opposite multiplication on a nonabelian algebra fails compatibility") {
    FieldSpec q = FieldSpec::rationals();
    HopfData s3 = group_algebra(GroupTable::symmetric3(), q);
    Morphism op_mult = compose(s3.mult, braiding(s3.obj, s3.obj));
    HopfBraceData broken(s3.obj, s3.counit, s3.comult, s3.unit, s3.mult, s3.antipode, s3.unit,
                         op_mult, s3.antipode);
    CheckReport rep = check_hopf_brace(broken);
    CHECK_FALSE(rep.passed());
    bool compat_failed = false;
    for (const auto& v : rep.violations())
        if (v.law.rfind("brace.", 0) == 0)
            compat_failed = true;
    CHECK(compat_failed);
}

TEST_CASE("cocommutative braces get the coalgebra-morphism laws") {
    HopfBraceData hb = trivial_brace(group_algebra(GroupTable::symmetric3(),
                                                   FieldSpec::rationals()));
    CheckReport rep = check_hopf_brace(hb);
    CHECK(rep.law_checked("brace.gamma_comult"));
    CHECK(rep.law_checked("brace.gamma_prime_comult"));
    CHECK(rep.passed());
}

TEST_CASE("mismatched units are reported as a law failure") {
    FieldSpec q = FieldSpec::rationals();
    HopfData c2 = group_algebra(GroupTable::cyclic(2), q);
    MatrixBuilder u2(c2.obj, FinObject::unit(c2.obj.braid()));
    u2.at(0, 0) = Scalar::one(q);
    u2.at(1, 0) = Scalar::one(q);
    Morphism bad_unit(c2.obj, FinObject::unit(c2.obj.braid()), u2.take());
    HopfBraceData hb(c2.obj, c2.counit, c2.comult, c2.unit, c2.mult, c2.antipode, bad_unit,
                     c2.mult, c2.antipode);
    CheckReport rep = check_hopf_brace(hb);
    CHECK_FALSE(rep.passed());
    // the second unit is not even a unit for the multiplication
    bool caught = rep.law_failed("brace.shared_unit");
    for (const auto& v : rep.violations())
        if (v.law.rfind("hopf2.", 0) == 0)
            caught = true;
    CHECK(caught);
}
