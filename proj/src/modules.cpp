#include "hbx/modules.hpp"

namespace hbx {

BraceModuleData::BraceModuleData(FinObject carrier_, Morphism psi1_, Morphism psi2_,
                                 HopfBraceData over_)
    : carrier(std::move(carrier_)),
      psi1(std::move(psi1_)),
      psi2(std::move(psi2_)),
      over(std::move(over_)) {
    FinObject hm = tensor(over.obj, carrier);
    if (psi1.src() != hm || psi1.dst() != carrier)
        throw shape_error("first action has wrong endpoints");
    if (psi2.src() != hm || psi2.dst() != carrier)
        throw shape_error("second action has wrong endpoints");
}

CocycleModuleData::CocycleModuleData(FinObject m_, FinObject n_, Morphism act_m_,
                                     Morphism hact_m_, Morphism act_n_, Morphism gamma_,
                                     Morphism gamma_inv_, CocycleData over_)
    : m(std::move(m_)),
      n(std::move(n_)),
      act_m(std::move(act_m_)),
      hact_m(std::move(hact_m_)),
      act_n(std::move(act_n_)),
      gamma(std::move(gamma_)),
      gamma_inv(std::move(gamma_inv_)),
      over(std::move(over_)) {
    if (act_m.src() != tensor(over.a.obj, m) || act_m.dst() != m)
        throw shape_error("A-action on M has wrong endpoints");
    if (hact_m.src() != tensor(over.h.obj, m) || hact_m.dst() != m)
        throw shape_error("H-action on M has wrong endpoints");
    if (act_n.src() != tensor(over.a.obj, n) || act_n.dst() != n)
        throw shape_error("A-action on N has wrong endpoints");
    if (gamma.src() != n || gamma.dst() != m)
        throw shape_error("gamma has wrong endpoints");
    if (gamma_inv.src() != m || gamma_inv.dst() != n)
        throw shape_error("gamma_inv has wrong endpoints");
}

CocycleModuleMorphism::CocycleModuleMorphism(CocycleModuleData src_, CocycleModuleData dst_,
                                             Morphism h_)
    : src(std::move(src_)),
      dst(std::move(dst_)),
      h(std::move(h_)),
      l(compose(dst.gamma_inv, compose(h, src.gamma))) {
    if (h.src() != src.m || h.dst() != dst.m)
        throw shape_error("h has wrong endpoints");
}

CocycleModuleMorphism::CocycleModuleMorphism(CocycleModuleData src_, CocycleModuleData dst_,
                                             Morphism h_, Morphism l_)
    : src(std::move(src_)), dst(std::move(dst_)), h(std::move(h_)), l(std::move(l_)) {
    if (h.src() != src.m || h.dst() != dst.m)
        throw shape_error("h has wrong endpoints");
    if (l.src() != src.n || l.dst() != dst.n)
        throw shape_error("l has wrong endpoints");
}

Morphism gamma_module_action(const BraceModuleData& m) {
    size_t d = m.over.obj.dim(), dm = m.carrier.dim();
    Pipeline p(d * dm);
    p.then(1, m.over.comult, dm)
        .then(1, m.over.antipode1, d * dm)
        .then(d, m.psi2, 1)
        .then(m.psi1);
    return p.materialize(m.carrier, tensor(m.over.obj, m.carrier));
}

CheckReport check_brace_module(const BraceModuleData& m) {
    CheckReport rep("brace-module");
    rep.absorb(check_left_module(ModuleData(m.carrier, m.psi1, m.over.algebra1())), "act1.");
    rep.absorb(check_left_module(ModuleData(m.carrier, m.psi2, m.over.algebra2())), "act2.");
    if (!rep.passed())
        return rep;

    size_t d = m.over.obj.dim(), dm = m.carrier.dim();
    Morphism gm = gamma_module_action(m);
    Morphism c = braiding(m.over.obj, m.over.obj);
    FinObject hhm = tensor(tensor(m.over.obj, m.over.obj), m.carrier);

    Pipeline lhs(d * d * dm);
    lhs.then(d, m.psi1, 1).then(m.psi2);
    Morphism lhs_m = lhs.materialize(m.carrier, hhm);
    {
        Pipeline rhs(d * d * dm);
        rhs.then(1, m.over.comult, d * dm)
            .then(d, c, dm)
            .then(1, m.over.mult2, d * dm)
            .then(d, gm, 1)
            .then(m.psi1);
        rep.equal("bmod.compat", lhs_m, rhs.materialize(m.carrier, hhm), {d, d, dm});
    }
    if (!rep.passed())
        return rep;

    // consequences of the module axioms and the compatibility law
    {
        Morphism gamma_prime = gamma_prime_action(m.over);
        Pipeline rhs(d * d * dm);
        rhs.then(1, m.over.comult, d * dm)
            .then(d, c, dm)
            .then(1, gamma_prime, d * dm)
            .then(d, m.psi2, 1)
            .then(m.psi1);
        rep.equal("bmod.compat_twisted", lhs_m, rhs.materialize(m.carrier, hhm), {d, d, dm},
                  Violation::Kind::internal);
    }
    {
        Morphism gamma = gamma_action(m.over);
        Pipeline glhs(d * d * dm), grhs(d * d * dm);
        glhs.then(d, m.psi1, 1).then(gm);
        grhs.then(1, m.over.comult, d * dm)
            .then(d, c, dm)
            .then(1, gamma, d * dm)
            .then(d, gm, 1)
            .then(m.psi1);
        rep.equal("bmod.gamma_compat", glhs.materialize(m.carrier, hhm),
                  grhs.materialize(m.carrier, hhm), {d, d, dm}, Violation::Kind::internal);
    }
    rep.absorb(check_left_module(ModuleData(m.carrier, gm, m.over.algebra2())),
               "bmod.gamma_module.", true);
    return rep;
}

bool check_zhu_condition(const BraceModuleData& m) {
    size_t d = m.over.obj.dim(), dm = m.carrier.dim();
    Morphism gm = gamma_module_action(m);
    Morphism c_hm = braiding(m.over.obj, m.carrier);
    FinObject hm = tensor(m.over.obj, m.carrier);
    FinObject mh = tensor(m.carrier, m.over.obj);

    Pipeline lhs(d * dm);
    lhs.then(1, m.over.comult, dm).then(d, c_hm, 1).then(1, m.psi2, d);

    Pipeline rhs(d * dm);
    rhs.then(1, m.over.comult, dm)
        .then(1, m.over.comult, d * dm)
        .then(d * d, gm, 1)
        .then(d, c_hm, 1)
        .then(1, m.psi1, d);

    return lhs.materialize(mh, hm) == rhs.materialize(mh, hm);
}

CheckReport check_cocycle_module(const CocycleModuleData& x) {
    CheckReport rep("cocycle-module");
    rep.absorb(check_left_module(ModuleData(x.m, x.act_m, x.over.a.algebra())), "m_act.");
    rep.absorb(check_left_module(ModuleData(x.m, x.hact_m, x.over.h.algebra())), "m_hact.");
    rep.absorb(check_left_module(ModuleData(x.n, x.act_n, x.over.a.algebra())), "n_act.");
    if (!rep.passed())
        return rep;

    size_t da = x.over.a.obj.dim(), dh = x.over.h.obj.dim();
    size_t dm = x.m.dim(), dn = x.n.dim();
    rep.equal("cmod.gamma_inverse_right", compose(x.gamma, x.gamma_inv), identity(x.m), {dm});
    rep.equal("cmod.gamma_inverse_left", compose(x.gamma_inv, x.gamma), identity(x.n), {dn});

    FinObject ahm = tensor(tensor(x.over.a.obj, x.over.h.obj), x.m);
    {
        Pipeline lhs(da * dh * dm), rhs(da * dh * dm);
        lhs.then(da, x.hact_m, 1).then(x.act_m);
        rhs.then(1, x.over.a.comult, dh * dm)
            .then(da, braiding(x.over.a.obj, x.over.h.obj), dm)
            .then(1, x.over.phi, da * dm)
            .then(dh, x.act_m, 1)
            .then(x.hact_m);
        rep.equal("cmod.mixed_compat", lhs.materialize(x.m, ahm), rhs.materialize(x.m, ahm),
                  {da, dh, dm});
    }
    FinObject an = tensor(x.over.a.obj, x.n);
    {
        Pipeline rhs(da * dn);
        rhs.then(da, x.gamma, 1)
            .then(1, x.over.a.comult, dm)
            .then(1, x.over.pi, da * dm)
            .then(dh, x.act_m, 1)
            .then(x.hact_m);
        rep.equal("cmod.gamma_equivariance", compose(x.gamma, x.act_n),
                  rhs.materialize(x.m, an), {da, dn});
    }
    if (!rep.passed())
        return rep;

    // determined forms of the two actions; consequences of the laws above
    {
        Pipeline rhs(da * dn);
        rhs.then(da, x.gamma, 1)
            .then(1, x.over.a.comult, dm)
            .then(1, x.over.pi, da * dm)
            .then(dh, x.act_m, 1)
            .then(x.hact_m)
            .then(x.gamma_inv);
        rep.equal("cmod.n_action_determined", x.act_n, rhs.materialize(x.n, an), {da, dn},
                  Violation::Kind::internal);
    }
    {
        FinObject am = tensor(x.over.a.obj, x.m);
        Pipeline rhs(da * dm);
        rhs.then(da, x.gamma_inv, 1)
            .then(1, x.over.a.comult, dn)
            .then(da, x.act_n, 1)
            .then(da, x.gamma, 1)
            .then(1, x.over.pi, dm)
            .then(1, x.over.h.antipode, dm)
            .then(x.hact_m);
        rep.equal("cmod.m_action_recovered", x.act_m, rhs.materialize(x.m, am), {da, dm},
                  Violation::Kind::internal);
    }
    return rep;
}

CheckReport check_cocycle_module_morphism(const CocycleModuleMorphism& mor) {
    CheckReport rep("cocycle-module-morphism");
    size_t da = mor.src.over.a.obj.dim(), dh = mor.src.over.h.obj.dim();
    rep.equal("cmmor.h_a_linear", compose(mor.h, mor.src.act_m),
              compose(mor.dst.act_m, tensor(identity(mor.src.over.a.obj), mor.h)),
              {da, mor.src.m.dim()});
    rep.equal("cmmor.h_h_linear", compose(mor.h, mor.src.hact_m),
              compose(mor.dst.hact_m, tensor(identity(mor.src.over.h.obj), mor.h)),
              {dh, mor.src.m.dim()});
    rep.equal("cmmor.l_a_linear", compose(mor.l, mor.src.act_n),
              compose(mor.dst.act_n, tensor(identity(mor.src.over.a.obj), mor.l)),
              {da, mor.src.n.dim()});
    rep.equal("cmmor.square", compose(mor.h, mor.src.gamma), compose(mor.dst.gamma, mor.l),
              {mor.src.n.dim()});
    rep.equal("cmmor.l_determined", mor.l,
              compose(mor.dst.gamma_inv, compose(mor.h, mor.src.gamma)), {mor.src.n.dim()},
              Violation::Kind::internal);
    return rep;
}

CocycleModuleData cocycle_module_from_module(const HopfData& h, const ModuleData& m) {
    if (!check_left_module(m).passed())
        throw precondition_error("InvalidModule", "data failing the module suite");
    if (!(m.over.obj == h.obj && m.over.unit == h.unit && m.over.mult == h.mult))
        throw shape_error("module is not over the given Hopf algebra");
    Morphism id = identity(m.carrier);
    return CocycleModuleData(m.carrier, m.carrier, m.act,
                             tensor(h.counit, identity(m.carrier)), m.act, id, id,
                             trivial_cocycle(h));
}

CocycleModuleData pullback_module(const CocycleMorphism& mor, const CocycleModuleData& m) {
    if (!(m.over.a.obj == mor.dst.a.obj && m.over.h.obj == mor.dst.h.obj &&
          m.over.phi == mor.dst.phi && m.over.pi == mor.dst.pi))
        throw precondition_error("InvalidInput", "module does not live over the morphism target");
    return CocycleModuleData(m.m, m.n, compose(m.act_m, tensor(mor.f, identity(m.m))),
                             compose(m.hact_m, tensor(mor.g, identity(m.m))),
                             compose(m.act_n, tensor(mor.f, identity(m.n))), m.gamma,
                             m.gamma_inv, mor.src);
}

CocycleModuleData cocycle_module_from_brace_module(const BraceModuleData& m) {
    Morphism id = identity(m.carrier);
    return CocycleModuleData(m.carrier, m.carrier, gamma_module_action(m), m.psi1, m.psi2, id,
                             id, cocycle_from_brace(m.over));
}

BraceModuleData brace_module_from_cocycle_module(const CocycleModuleData& x) {
    HopfBraceData hb = brace_from_cocycle(x.over);
    Morphism psi2 =
        compose(x.gamma, compose(x.act_n, tensor(x.over.pi_inv, x.gamma_inv)));
    BraceModuleData out(x.m, x.hact_m, psi2, hb);

    // transported action identity: act_m (pi_inv (x) M) equals the gamma
    // action of the result
    Morphism lhs = compose(x.act_m, tensor(x.over.pi_inv, identity(x.m)));
    if (!(lhs == gamma_module_action(out)))
        throw precondition_error("InvalidModule", "transported action identity fails");
    return out;
}

BraceModuleData diagonal_brace_module(const HopfData& h, const ModuleData& m) {
    if (!check_left_module(m).passed())
        throw precondition_error("InvalidModule", "data failing the module suite");
    if (!(m.over.obj == h.obj && m.over.unit == h.unit && m.over.mult == h.mult))
        throw shape_error("module is not over the given Hopf algebra");
    return BraceModuleData(m.carrier, m.act, m.act, trivial_brace(h));
}

ModuleData first_action_module(const BraceModuleData& m) {
    return ModuleData(m.carrier, m.psi1, m.over.algebra1());
}

namespace {

void tensor_gates(const BraidSpec& braid, bool cocommutative) {
    if (!braid.symmetric())
        throw precondition_error("NotSymmetric",
                                 "tensor modules need a symmetric braiding, have " + braid.str());
    if (!cocommutative)
        throw precondition_error("NotCocommutative",
                                 "tensor modules need cocommutative structures");
}

// (act1 (x) act2) (A (x) c_{A,X} (x) Y) (comult (x) X (x) Y)
Morphism diagonal_action(const CoalgebraData& a, const Morphism& act1, const FinObject& x,
                         const Morphism& act2, const FinObject& y) {
    size_t da = a.obj.dim(), dx = x.dim(), dy = y.dim();
    Pipeline p(da * dx * dy);
    p.then(1, a.comult, dx * dy)
        .then(da, braiding(a.obj, x), dy)
        .then(1, act1, da * dy)
        .then(dx, act2, 1);
    return p.materialize(tensor(x, y), tensor(a.obj, tensor(x, y)));
}

}  // namespace

CocycleModuleData tensor_cocycle_modules(const CocycleModuleData& m1,
                                         const CocycleModuleData& m2) {
    const CocycleData& c = m1.over;
    tensor_gates(c.a.obj.braid(), is_cocommutative(c.a) && is_cocommutative(c.h));
    if (!(m2.over.a.obj == c.a.obj && m2.over.h.obj == c.h.obj && m2.over.phi == c.phi &&
          m2.over.pi == c.pi))
        throw precondition_error("InvalidInput", "tensor factors live over different cocycles");
    CoalgebraData ca = c.a.coalgebra(), ch = c.h.coalgebra();
    return CocycleModuleData(tensor(m1.m, m2.m), tensor(m1.n, m2.n),
                             diagonal_action(ca, m1.act_m, m1.m, m2.act_m, m2.m),
                             diagonal_action(ch, m1.hact_m, m1.m, m2.hact_m, m2.m),
                             diagonal_action(ca, m1.act_n, m1.n, m2.act_n, m2.n),
                             tensor(m1.gamma, m2.gamma),
                             tensor(m1.gamma_inv, m2.gamma_inv), c);
}

BraceModuleData tensor_brace_modules(const BraceModuleData& m1, const BraceModuleData& m2) {
    const HopfBraceData& hb = m1.over;
    tensor_gates(hb.obj.braid(), is_cocommutative(hb));
    if (!(m2.over.obj == hb.obj && m2.over.mult1 == hb.mult1 && m2.over.mult2 == hb.mult2))
        throw precondition_error("InvalidInput", "tensor factors live over different braces");
    CoalgebraData cc(hb.obj, hb.counit, hb.comult);
    return BraceModuleData(tensor(m1.carrier, m2.carrier),
                           diagonal_action(cc, m1.psi1, m1.carrier, m2.psi1, m2.carrier),
                           diagonal_action(cc, m1.psi2, m1.carrier, m2.psi2, m2.carrier), hb);
}

BraceModuleData regular_brace_module(const HopfBraceData& hb) {
    return BraceModuleData(hb.obj, hb.mult1, hb.mult2, hb);
}

BraceModuleData trivial_brace_module(const HopfBraceData& hb) {
    // H (x) K = H strictly, so the counit is already the action
    FinObject k = FinObject::unit(hb.obj.braid());
    return BraceModuleData(k, hb.counit, hb.counit, hb);
}

CocycleModuleData regular_cocycle_module(const CocycleData& c) {
    return CocycleModuleData(c.h.obj, c.a.obj, c.phi, c.h.mult, c.a.mult, c.pi, c.pi_inv, c);
}

CocycleModuleData trivial_cocycle_module(const CocycleData& c) {
    FinObject k = FinObject::unit(c.a.obj.braid());
    Morphism idk = identity(k);
    return CocycleModuleData(k, k, c.a.counit, c.h.counit, c.a.counit, idk, idk, c);
}

CheckReport verify_module_equivalence(const CocycleData& cocycle,
                                      const std::vector<NamedCocycleModule>& modules) {
    CheckReport rep("module-equivalence");
    HopfBraceData hb = brace_from_cocycle(cocycle);
    CocycleData e_hb = cocycle_from_brace(hb);
    CocycleMorphism pi_id(cocycle, e_hb, cocycle.pi, identity(cocycle.h.obj));

    // brace modules come back on the nose
    std::vector<std::pair<std::string, BraceModuleData>> brace_modules;
    brace_modules.emplace_back("regular", regular_brace_module(hb));
    brace_modules.emplace_back("trivial", trivial_brace_module(hb));
    for (const auto& [name, m] : modules) {
        try {
            if (check_cocycle_module(m).passed())
                brace_modules.emplace_back(name, brace_module_from_cocycle_module(m));
        } catch (const precondition_error& e) {
            Violation v;
            v.law = "instance[" + name + "].precondition";
            v.lhs = e.gate;
            v.rhs = "valid";
            rep.fail(std::move(v));
        }
    }
    for (const auto& [name, bm] : brace_modules) {
        CocycleModuleData through = pullback_module(pi_id, cocycle_module_from_brace_module(bm));
        BraceModuleData rt = brace_module_from_cocycle_module(through);
        rep.equal("brace_roundtrip[" + name + "].psi1", rt.psi1, bm.psi1,
                  {hb.obj.dim(), bm.carrier.dim()});
        rep.equal("brace_roundtrip[" + name + "].psi2", rt.psi2, bm.psi2,
                  {hb.obj.dim(), bm.carrier.dim()});
    }

    // cocycle modules are isomorphic to their round-trip image through
    // (id, gamma)
    for (const auto& [name, m] : modules) {
        try {
            CheckReport own = check_cocycle_module(m);
            if (!own.passed()) {
                rep.absorb(own, "instance[" + name + "].");
                continue;
            }
            CocycleModuleData rt =
                pullback_module(pi_id, cocycle_module_from_brace_module(
                                           brace_module_from_cocycle_module(m)));
            CocycleModuleMorphism fwd(m, rt, identity(m.m), m.gamma);
            CocycleModuleMorphism bwd(rt, m, identity(m.m), m.gamma_inv);
            rep.absorb(check_cocycle_module_morphism(fwd), "module_iso[" + name + "].fwd.");
            rep.absorb(check_cocycle_module_morphism(bwd), "module_iso[" + name + "].bwd.");
            rep.absorb(check_cocycle_module(rt), "module_image[" + name + "].");
        } catch (const precondition_error& e) {
            Violation v;
            v.law = "instance[" + name + "].precondition";
            v.lhs = e.gate;
            v.rhs = "valid";
            rep.fail(std::move(v));
        }
    }
    return rep;
}

}  // namespace hbx
