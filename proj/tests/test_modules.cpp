#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbx/constructions.hpp"
#include "util.hpp"

using namespace hbx;

namespace {

Morphism bump(const Morphism& f, size_t row, size_t col) {
    std::vector<Scalar> m = f.entries();
    m[row * f.cols() + col] = m[row * f.cols() + col] + Scalar::one(f.src().field());
    return Morphism(f.dst(), f.src(), std::move(m));
}

SkewBraceTable nontrivial_order6() {
    SkewBraceCensus census = enumerate_skew_braces(6, true);
    for (const auto& s : census.structures)
        if (!(s.diamond == s.circ))
            return s;
    throw std::runtime_error("no nontrivial structure of order 6");
}

GroupTable cyclic6() {
    return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3));
}

// right multiplication by basis element g commutes with both left regular
// actions
Morphism right_mult(const HopfData& h, size_t g) {
    MatrixBuilder b(h.obj, h.obj);
    for (size_t x = 0; x < h.obj.dim(); ++x)
        for (size_t k = 0; k < h.obj.dim(); ++k)
            if (!h.mult.at(k, x * h.obj.dim() + g).is_zero())
                b.at(k, x) = h.mult.at(k, x * h.obj.dim() + g);
    return Morphism(h.obj, h.obj, b.take());
}

}  // namespace

TEST_CASE("brace modules") {
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);

    SUBCASE("regular and trivial modules pass") {
        CHECK(check_brace_module(regular_brace_module(hb)).passed());
        CHECK(check_brace_module(trivial_brace_module(hb)).passed());
    }

    SUBCASE("perturbing the second action fails the compatibility law") {
        BraceModuleData broken(hb.obj, hb.mult1, bump(hb.mult2, 1, 8), hb);
        CheckReport rep = check_brace_module(broken);
        CHECK_FALSE(rep.passed());
        bool hit = rep.law_failed("bmod.compat");
        for (const auto& v : rep.violations())
            if (v.law.rfind("act2.", 0) == 0)
                hit = true;
        CHECK(hit);
    }
}

TEST_CASE("gamma module action") {
    FieldSpec q = FieldSpec::rationals();

    SUBCASE("trivial brace: the induced action is trivial") {
        HopfData s3 = group_algebra(GroupTable::symmetric3(), q);
        HopfBraceData hb = trivial_brace(s3);
        BraceModuleData reg = regular_brace_module(hb);
        CHECK(gamma_module_action(reg) == tensor(s3.counit, identity(s3.obj)));
    }

    SUBCASE("regular module: the induced action is the brace's own gamma") {
        HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);
        CHECK(gamma_module_action(regular_brace_module(hb)) == gamma_action(hb));
    }

    SUBCASE("unitality") {
        HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);
        BraceModuleData reg = regular_brace_module(hb);
        Morphism gm = gamma_module_action(reg);
        size_t d = hb.obj.dim();
        Pipeline p(d);
        p.then(1, hb.unit2, d).then(gm);
        CHECK(p.materialize(hb.obj, hb.obj) == identity(hb.obj));
    }
}

TEST_CASE("the stronger two-sided compatibility condition") {
    FieldSpec q = FieldSpec::rationals();

    SUBCASE("holds over cocommutative braces") {
        HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);
        CHECK(check_zhu_condition(regular_brace_module(hb)));
        CHECK(check_zhu_condition(trivial_brace_module(hb)));
        HopfBraceData triv = trivial_brace(group_algebra(GroupTable::symmetric3(), q));
        CHECK(check_zhu_condition(regular_brace_module(triv)));
    }

    SUBCASE("is deterministic on the non-cocommutative instance") {
        FieldSpec f7 = FieldSpec::prime(7);
        HopfBraceData hb = trivial_brace(braided_line(3, f7, Scalar::of_int(2, f7)));
        bool first = check_zhu_condition(regular_brace_module(hb));
        CHECK(first == check_zhu_condition(regular_brace_module(hb)));
    }
}

TEST_CASE("cocycle modules") {
    FieldSpec q = FieldSpec::rationals();
    CocycleData c = cocycle_from_brace(linearize_skew_brace(nontrivial_order6(), q));

    SUBCASE("regular and trivial modules pass") {
        CHECK(check_cocycle_module(regular_cocycle_module(c)).passed());
        CHECK(check_cocycle_module(trivial_cocycle_module(c)).passed());
    }

    SUBCASE("a non-equivariant gamma fails the equivariance law") {
        CocycleModuleData reg = regular_cocycle_module(c);
        CocycleModuleData broken(reg.m, reg.n, reg.act_m, reg.hact_m, reg.act_n,
                                 bump(reg.gamma, 0, 3), reg.gamma_inv, c);
        CheckReport rep = check_cocycle_module(broken);
        CHECK_FALSE(rep.passed());
        bool hit = rep.law_failed("cmod.gamma_equivariance") ||
                   rep.law_failed("cmod.gamma_inverse_right") ||
                   rep.law_failed("cmod.gamma_inverse_left");
        CHECK(hit);
    }
}

TEST_CASE("modules over a Hopf algebra embed as cocycle modules") {
    FieldSpec q = FieldSpec::rationals();
    HopfData c3 = group_algebra(GroupTable::cyclic(3), q);

    SUBCASE("regular module") {
        CocycleModuleData img = cocycle_module_from_module(c3, regular_module(c3.algebra()));
        CHECK(check_cocycle_module(img).passed());
    }
    SUBCASE("trivial module matches the trivial cocycle module") {
        CocycleModuleData img = cocycle_module_from_module(
            c3, trivial_module(c3, FinObject::unit(c3.obj.braid())));
        CocycleModuleData expected = trivial_cocycle_module(trivial_cocycle(c3));
        CHECK(img.act_m == expected.act_m);
        CHECK(img.hact_m == expected.hact_m);
        CHECK(img.act_n == expected.act_n);
        CHECK(check_cocycle_module(img).passed());
    }
    SUBCASE("module morphisms go to pairs") {
        CocycleModuleData img = cocycle_module_from_module(c3, regular_module(c3.algebra()));
        Morphism f = right_mult(c3, 1);
        CocycleModuleMorphism m(img, img, f, f);
        CHECK(check_cocycle_module_morphism(m).passed());
    }
    SUBCASE("invalid modules are rejected") {
        ModuleData broken(c3.obj, bump(c3.mult, 0, 4), c3.algebra());
        CHECK_THROWS_AS(cocycle_module_from_module(c3, broken), precondition_error);
    }
}

TEST_CASE("pullback along cocycle morphisms") {
    FieldSpec q = FieldSpec::rationals();

    SUBCASE("pullback along the identity is the identity") {
        CocycleData c = trivial_cocycle(group_algebra(GroupTable::cyclic(4), q));
        CocycleMorphism idm(c, c, identity(c.a.obj), identity(c.h.obj));
        CocycleModuleData reg = regular_cocycle_module(c);
        CocycleModuleData back = pullback_module(idm, reg);
        CHECK(back.act_m == reg.act_m);
        CHECK(back.hact_m == reg.hact_m);
        CHECK(back.act_n == reg.act_n);
    }

    SUBCASE("restriction square with a Hopf quotient map") {
        // f : k[C4] -> k[C2] induced by the group quotient
        HopfData c4 = group_algebra(GroupTable::cyclic(4), q);
        HopfData c2 = group_algebra(GroupTable::cyclic(2), q);
        MatrixBuilder fb(c2.obj, c4.obj);
        for (size_t g = 0; g < 4; ++g)
            fb.at(g % 2, g) = Scalar::one(q);
        Morphism f(c2.obj, c4.obj, fb.take());

        ModuleData m = regular_module(c2.algebra());
        // restriction of scalars on the module side
        ModuleData restricted(m.carrier, compose(m.act, tensor(f, identity(m.carrier))),
                              c4.algebra());

        CocycleMorphism ff(trivial_cocycle(c4), trivial_cocycle(c2), f, f);
        CocycleModuleData route1 = cocycle_module_from_module(c4, restricted);
        CocycleModuleData route2 = pullback_module(ff, cocycle_module_from_module(c2, m));
        CHECK(route1.act_m == route2.act_m);
        CHECK(route1.hact_m == route2.hact_m);
        CHECK(route1.act_n == route2.act_n);
        CHECK(route1.gamma == route2.gamma);
        CHECK(check_cocycle_module(route2).passed());
    }
}

TEST_CASE("brace modules embed as cocycle modules over the brace's cocycle") {
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);

    SUBCASE("regular module maps to the gamma-twisted tuple") {
        BraceModuleData reg = regular_brace_module(hb);
        CocycleModuleData img = cocycle_module_from_brace_module(reg);
        CHECK(img.act_m == gamma_action(hb));
        CHECK(img.hact_m == hb.mult1);
        CHECK(img.act_n == hb.mult2);
        CHECK(check_cocycle_module(img).passed());
    }
    SUBCASE("trivial module maps to the trivial module") {
        CocycleModuleData img = cocycle_module_from_brace_module(trivial_brace_module(hb));
        CHECK(img.m.dim() == 1);
        CHECK(check_cocycle_module(img).passed());
    }
    SUBCASE("brace module morphisms map to pairs") {
        HopfData c3 = group_algebra(GroupTable::cyclic(3), q);
        HopfBraceData triv = trivial_brace(c3);
        BraceModuleData reg = regular_brace_module(triv);
        CocycleModuleData img = cocycle_module_from_brace_module(reg);
        Morphism f = right_mult(c3, 2);
        CocycleModuleMorphism m(img, img, f, f);
        CHECK(check_cocycle_module_morphism(m).passed());
    }
}

TEST_CASE("cocycle modules come back as brace modules") {
    FieldSpec q = FieldSpec::rationals();
    CocycleData c = cocycle_from_brace(linearize_skew_brace(nontrivial_order6(), q));
    HopfBraceData hb = brace_from_cocycle(c);

    SUBCASE("the regular cocycle module yields the regular brace module") {
        BraceModuleData out = brace_module_from_cocycle_module(regular_cocycle_module(c));
        CHECK(out.psi1 == hb.mult1);
        CHECK(out.psi2 == hb.mult2);
        CHECK(check_brace_module(out).passed());
    }
    SUBCASE("the trivial cocycle module yields the trivial brace module") {
        BraceModuleData out = brace_module_from_cocycle_module(trivial_cocycle_module(c));
        CHECK(out.carrier.dim() == 1);
        CHECK(out.psi1 == hb.counit);
        CHECK(out.psi2 == hb.counit);
    }
}

TEST_CASE("module equivalence round trips") {
    FieldSpec q = FieldSpec::rationals();
    CocycleData c = cocycle_from_brace(linearize_skew_brace(nontrivial_order6(), q));

    SUBCASE("regular and trivial modules") {
        CheckReport rep = verify_module_equivalence(
            c, {NamedCocycleModule{"regular", regular_cocycle_module(c)},
                NamedCocycleModule{"trivial", trivial_cocycle_module(c)}});
        CHECK(rep.passed());
    }

    SUBCASE("specializing to the identity cocycle") {
        HopfBraceData hb = trivial_brace(group_algebra(GroupTable::symmetric3(), q));
        CocycleData e_hb = cocycle_from_brace(hb);
        CheckReport rep = verify_module_equivalence(
            e_hb, {NamedCocycleModule{"regular", regular_cocycle_module(e_hb)}});
        CHECK(rep.passed());
    }

    SUBCASE("corrupted gamma is reported by instance name") {
        CocycleModuleData reg = regular_cocycle_module(c);
        CocycleModuleData broken(reg.m, reg.n, reg.act_m, reg.hact_m, reg.act_n,
                                 bump(reg.gamma, 0, 3), reg.gamma_inv, c);
        CheckReport rep =
            verify_module_equivalence(c, {NamedCocycleModule{"broken", broken}});
        CHECK_FALSE(rep.passed());
        bool named = false;
        for (const auto& v : rep.violations())
            if (v.law.find("[broken]") != std::string::npos)
                named = true;
        CHECK(named);
    }
}

TEST_CASE("tensor products of cocycle modules") {
    FieldSpec q = FieldSpec::rationals();
    CocycleData c6 = trivial_cocycle(group_algebra(cyclic6(), q));

    SUBCASE("the trivial module is a strict unit") {
        CocycleModuleData reg = regular_cocycle_module(c6);
        CocycleModuleData prod = tensor_cocycle_modules(trivial_cocycle_module(c6), reg);
        CHECK(prod.act_m == reg.act_m);
        CHECK(prod.hact_m == reg.hact_m);
        CHECK(prod.act_n == reg.act_n);
        CHECK(prod.gamma == reg.gamma);
    }

    SUBCASE("regular (x) regular passes the checker") {
        CocycleModuleData reg = regular_cocycle_module(c6);
        CocycleModuleData prod = tensor_cocycle_modules(reg, reg);
        CHECK(prod.m.dim() == 36);
        CHECK(check_cocycle_module(prod).passed());
    }

    SUBCASE("the swap pair is a module morphism between the two orders") {
        CocycleModuleData reg = regular_cocycle_module(c6);
        CocycleModuleData t = tensor_cocycle_modules(reg, trivial_cocycle_module(c6));
        CocycleModuleData u = tensor_cocycle_modules(trivial_cocycle_module(c6), reg);
        CocycleModuleMorphism swap_pair(
            t, u, braiding(reg.m, FinObject::unit(reg.m.braid())),
            braiding(reg.n, FinObject::unit(reg.n.braid())));
        CHECK(check_cocycle_module_morphism(swap_pair).passed());

        CocycleModuleData rr = tensor_cocycle_modules(reg, reg);
        CocycleModuleMorphism swap_rr(rr, rr, braiding(reg.m, reg.m),
                                      braiding(reg.n, reg.n));
        CHECK(check_cocycle_module_morphism(swap_rr).passed());
    }

    SUBCASE("the non-symmetric backend is rejected") {
        FieldSpec f7 = FieldSpec::prime(7);
        CocycleData bl = trivial_cocycle(braided_line(3, f7, Scalar::of_int(2, f7)));
        CocycleModuleData reg = regular_cocycle_module(bl);
        CHECK_THROWS_WITH_AS(tensor_cocycle_modules(reg, reg),
                             doctest::Contains("NotSymmetric"), precondition_error);
    }

    SUBCASE("non-cocommutative structures are rejected") {
        HopfData dual = dual_hopf(group_algebra(GroupTable::symmetric3(), q));
        CocycleData c = trivial_cocycle(dual);
        CocycleModuleData reg = regular_cocycle_module(c);
        CHECK_THROWS_WITH_AS(tensor_cocycle_modules(reg, reg),
                             doctest::Contains("NotCocommutative"), precondition_error);
    }
}

TEST_CASE("tensor products of brace modules") {
    FieldSpec q = FieldSpec::rationals();
    HopfBraceData hb = linearize_skew_brace(nontrivial_order6(), q);
    BraceModuleData reg = regular_brace_module(hb);
    BraceModuleData triv = trivial_brace_module(hb);

    SUBCASE("trivial unit and counit absorption") {
        BraceModuleData p1 = tensor_brace_modules(triv, reg);
        CHECK(p1.psi1 == reg.psi1);
        CHECK(p1.psi2 == reg.psi2);
        BraceModuleData p2 = tensor_brace_modules(reg, triv);
        CHECK(p2.psi1 == reg.psi1);
        CHECK(p2.psi2 == reg.psi2);
    }

    SUBCASE("regular (x) regular passes the checker") {
        BraceModuleData prod = tensor_brace_modules(reg, reg);
        CHECK(prod.carrier.dim() == 36);
        CHECK(check_brace_module(prod).passed());
    }

    SUBCASE("gates fire") {
        FieldSpec f7 = FieldSpec::prime(7);
        HopfBraceData bl = trivial_brace(braided_line(3, f7, Scalar::of_int(2, f7)));
        BraceModuleData blreg = regular_brace_module(bl);
        CHECK_THROWS_WITH_AS(tensor_brace_modules(blreg, blreg),
                             doctest::Contains("NotSymmetric"), precondition_error);
    }
}

TEST_CASE("diagonal embedding and projection of plain modules") {
    FieldSpec q = FieldSpec::rationals();
    HopfData c2 = group_algebra(GroupTable::cyclic(2), q);
    ModuleData reg = regular_module(c2.algebra());

    BraceModuleData j = diagonal_brace_module(c2, reg);
    CHECK(check_brace_module(j).passed());
    CHECK(j.psi1 == j.psi2);

    ModuleData back = first_action_module(j);
    CHECK(back.act == reg.act);
    CHECK(back.carrier == reg.carrier);

    BraceModuleData jt = diagonal_brace_module(
        c2, trivial_module(c2, FinObject::unit(c2.obj.braid())));
    CHECK(jt.carrier.dim() == 1);
    CHECK(check_brace_module(jt).passed());
}
