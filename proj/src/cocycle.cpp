#include "hbx/cocycle.hpp"

namespace hbx {

CocycleData::CocycleData(HopfData a_, HopfData h_, Morphism phi_, Morphism pi_,
                         Morphism pi_inv_)
    : a(std::move(a_)),
      h(std::move(h_)),
      phi(std::move(phi_)),
      pi(std::move(pi_)),
      pi_inv(std::move(pi_inv_)) {
    if (a.obj.braid() != h.obj.braid())
        throw braid_error("cocycle endpoints over different braidings");
    if (phi.src() != tensor(a.obj, h.obj) || phi.dst() != h.obj)
        throw shape_error("action has wrong endpoints");
    if (pi.src() != a.obj || pi.dst() != h.obj)
        throw shape_error("pi has wrong endpoints");
    if (pi_inv.src() != h.obj || pi_inv.dst() != a.obj)
        throw shape_error("pi_inv has wrong endpoints");
}

CocycleMorphism::CocycleMorphism(CocycleData src_, CocycleData dst_, Morphism f_, Morphism g_)
    : src(std::move(src_)), dst(std::move(dst_)), f(std::move(f_)), g(std::move(g_)) {
    if (f.src() != src.a.obj || f.dst() != dst.a.obj)
        throw shape_error("f has wrong endpoints");
    if (g.src() != src.h.obj || g.dst() != dst.h.obj)
        throw shape_error("g has wrong endpoints");
}

CheckReport check_cocycle(const CocycleData& c) {
    CheckReport rep("cocycle");
    rep.absorb(check_hopf(c.a), "A.");
    rep.absorb(check_hopf(c.h), "H.");
    if (!rep.passed())
        return rep;

    size_t da = c.a.obj.dim(), dh = c.h.obj.dim();
    rep.equal("cocycle.pi_inverse_right", compose(c.pi, c.pi_inv), identity(c.h.obj), {dh});
    rep.equal("cocycle.pi_inverse_left", compose(c.pi_inv, c.pi), identity(c.a.obj), {da});
    rep.equal("cocycle.pi_comult", compose(tensor(c.pi, c.pi), c.a.comult),
              compose(c.h.comult, c.pi), {da});
    rep.equal("cocycle.pi_counit", compose(c.h.counit, c.pi), c.a.counit, {da});
    rep.equal("cocycle.pi_unit", compose(c.pi, c.a.unit), c.h.unit, {1});
    if (!rep.passed())
        return rep;

    rep.absorb(check_module_algebra(c.h.algebra(), c.phi, c.a), "action.");
    if (!rep.passed())
        return rep;

    FinObject aa = tensor(c.a.obj, c.a.obj);
    {
        Pipeline rhs(da * da);
        rhs.then(1, c.a.comult, da)
            .then(da * da, c.pi, 1)
            .then(1, c.pi, da * dh)
            .then(dh, c.phi, 1)
            .then(c.h.mult);
        rep.equal("cocycle.structure", compose(c.pi, c.a.mult), rhs.materialize(c.h.obj, aa),
                  {da, da});
    }
    if (!rep.passed())
        return rep;

    // consequences of the laws above
    {
        Pipeline lhs(da * da), rhs(da * da);
        lhs.then(da, c.pi, 1).then(da, c.h.antipode, 1).then(c.phi);
        rhs.then(1, c.a.comult, da)
            .then(da * da, c.pi, 1)
            .then(da, braiding(c.a.obj, c.h.obj), 1)
            .then(1, c.a.comult, dh * da)
            .then(1, c.pi, da * dh * da)
            .then(dh, c.phi, da)
            .then(dh * dh, c.pi, 1)
            .then(1, c.h.mult, dh)
            .then(1, c.h.antipode, dh)
            .then(c.h.mult);
        rep.equal("cocycle.antipode_twist", lhs.materialize(c.h.obj, aa),
                  rhs.materialize(c.h.obj, aa), {da, da}, Violation::Kind::internal);
    }
    CoalgebraData ah = tensor_coalgebra(c.a.coalgebra(), c.h.coalgebra());
    rep.equal("cocycle.action_counit", compose(c.h.counit, c.phi), ah.counit, {da, dh},
              Violation::Kind::internal);
    if (is_cocommutative(c.h)) {
        Pipeline rhs(da * dh);
        rhs.then(ah.comult).then(1, c.phi, da * dh).then(dh, c.phi, 1);
        rep.equal("cocycle.action_comult", compose(c.h.comult, c.phi),
                  rhs.materialize(tensor(c.h.obj, c.h.obj), ah.obj), {da, dh},
                  Violation::Kind::internal);
    }
    return rep;
}

namespace {

void check_hopf_morphism_laws(CheckReport& rep, const std::string& prefix, const Morphism& f,
                              const HopfData& x, const HopfData& y) {
    rep.equal(prefix + ".algebra_mult", compose(f, x.mult), compose(y.mult, tensor(f, f)),
              {x.obj.dim(), x.obj.dim()});
    rep.equal(prefix + ".algebra_unit", compose(f, x.unit), y.unit, {1});
    rep.equal(prefix + ".coalgebra_comult", compose(tensor(f, f), x.comult),
              compose(y.comult, f), {x.obj.dim()});
    rep.equal(prefix + ".coalgebra_counit", compose(y.counit, f), x.counit, {x.obj.dim()});
}

}  // namespace

CheckReport check_cocycle_morphism(const CocycleMorphism& m) {
    CheckReport rep("cocycle-morphism");
    check_hopf_morphism_laws(rep, "cmor.f", m.f, m.src.a, m.dst.a);
    check_hopf_morphism_laws(rep, "cmor.g", m.g, m.src.h, m.dst.h);
    rep.equal("cmor.square", compose(m.g, m.src.pi), compose(m.dst.pi, m.f),
              {m.src.a.obj.dim()});
    rep.equal("cmor.action_compat", compose(m.g, m.src.phi),
              compose(m.dst.phi, tensor(m.f, m.g)), {m.src.a.obj.dim(), m.src.h.obj.dim()});
    return rep;
}

CocycleData trivial_cocycle(const HopfData& h) {
    if (!check_hopf(h).passed())
        throw precondition_error("InvalidHopf", "trivial cocycle over data failing the Hopf suite");
    Morphism id = identity(h.obj);
    return CocycleData(h, h, tensor(h.counit, id), id, id);
}

CocycleData cocycle_from_brace(const HopfBraceData& hb) {
    if (!check_hopf_brace(hb).passed())
        throw precondition_error("InvalidBrace", "cocycle over data failing the brace suite");
    Morphism id = identity(hb.obj);
    return CocycleData(hb.hopf2(), hb.hopf1(), gamma_action(hb), id, id);
}

HopfBraceData brace_from_cocycle(const CocycleData& c) {
    if (!check_cocycle(c).passed())
        throw precondition_error("InvalidCocycle", "brace over data failing the cocycle suite");
    Morphism mult2 = compose(c.pi, compose(c.a.mult, tensor(c.pi_inv, c.pi_inv)));
    Morphism antipode2 = compose(c.pi, compose(c.a.antipode, c.pi_inv));
    return HopfBraceData(c.h.obj, c.h.counit, c.h.comult, c.h.unit, c.h.mult, c.h.antipode,
                         c.h.unit, mult2, antipode2);
}

namespace {

// the defining composite, shape-checked only
Morphism companion_action_raw(const HopfData& a, const HopfData& h, const Morphism& pi,
                              const Morphism& phi) {
    size_t da = a.obj.dim(), dh = h.obj.dim();
    Pipeline p(da * dh);
    p.then(1, a.comult, dh)
        .then(da, braiding(a.obj, h.obj), 1)
        .then(1, a.comult, dh * da)
        .then(1, pi, da * dh * da)
        .then(dh, phi, da)
        .then(dh * dh, pi, 1)
        .then(dh * dh, h.antipode, 1)
        .then(1, h.mult, dh)
        .then(h.mult);
    return p.materialize(h.obj, tensor(a.obj, h.obj));
}

// recovers the action from its companion
Morphism recover_action(const HopfData& a, const HopfData& h, const Morphism& pi,
                        const Morphism& companion) {
    size_t da = a.obj.dim(), dh = h.obj.dim();
    Pipeline p(da * dh);
    p.then(1, a.comult, dh)
        .then(da, braiding(a.obj, h.obj), 1)
        .then(1, a.comult, dh * da)
        .then(1, pi, da * dh * da)
        .then(1, h.antipode, da * dh * da)
        .then(dh, companion, da)
        .then(dh * dh, pi, 1)
        .then(1, h.mult, dh)
        .then(h.mult);
    return p.materialize(h.obj, tensor(a.obj, h.obj));
}

// pi mult_A = mult_H (x (x) pi) (A (x) c_{A,H}) (comult_A (x) pi)
// for x = the companion action
void check_twisted_structure(CheckReport& rep, const std::string& law, const HopfData& a,
                             const HopfData& h, const Morphism& pi, const Morphism& companion) {
    size_t da = a.obj.dim();
    FinObject aa = tensor(a.obj, a.obj);
    Pipeline rhs(da * da);
    rhs.then(1, a.comult, da)
        .then(da * da, pi, 1)
        .then(da, braiding(a.obj, h.obj), 1)
        .then(1, companion, da)
        .then(h.obj.dim(), pi, 1)
        .then(h.mult);
    rep.equal(law, compose(pi, a.mult), rhs.materialize(h.obj, aa), {da, da});
}

}  // namespace

Morphism companion_action(const CocycleData& c) {
    if (!check_cocycle(c).passed())
        throw precondition_error("InvalidCocycle",
                                 "companion action of data failing the cocycle suite");
    return companion_action_raw(c.a, c.h, c.pi, c.phi);
}

CheckReport verify_action_correspondence(const HopfData& a, const HopfData& h,
                                         const Morphism& pi, const Morphism& candidate,
                                         ActionCandidate kind) {
    CheckReport rep("action-correspondence");
    Morphism pi_inv = inverse(pi);

    Morphism phi = kind == ActionCandidate::action ? candidate
                                                   : recover_action(a, h, pi, candidate);
    Morphism companion = kind == ActionCandidate::companion
                             ? candidate
                             : companion_action_raw(a, h, pi, candidate);

    // the action side: module algebra plus the structure law
    rep.absorb(check_cocycle(CocycleData(a, h, phi, pi, pi_inv)), "action_side.");

    // the companion side: module algebra plus the twisted structure law
    rep.absorb(check_module_algebra(h.algebra(), companion, a), "companion_side.");
    check_twisted_structure(rep, "companion_side.structure", a, h, pi, companion);

    // round trips between the two presentations
    if (kind == ActionCandidate::action) {
        rep.equal("roundtrip.action_recovered", recover_action(a, h, pi, companion), phi,
                  {a.obj.dim(), h.obj.dim()});
    } else {
        rep.equal("roundtrip.companion_recovered", companion_action_raw(a, h, pi, phi),
                  companion, {a.obj.dim(), h.obj.dim()});
    }
    return rep;
}

namespace {

void record_precondition_failure(CheckReport& rep, const std::string& instance,
                                 const precondition_error& e) {
    Violation v;
    v.law = "instance[" + instance + "].precondition";
    v.lhs = e.gate;
    v.rhs = "valid";
    rep.fail(std::move(v));
}

}  // namespace

CheckReport verify_brace_cocycle_equivalence(const std::vector<NamedBrace>& braces,
                                             const std::vector<NamedCocycle>& cocycles) {
    CheckReport rep("brace-cocycle-equivalence");
    for (const auto& [name, hb] : braces) {
        try {
            HopfBraceData rt = brace_from_cocycle(cocycle_from_brace(hb));
            std::vector<size_t> one{1};
            rep.equal("roundtrip[" + name + "].counit", rt.counit, hb.counit);
            rep.equal("roundtrip[" + name + "].comult", rt.comult, hb.comult);
            rep.equal("roundtrip[" + name + "].unit1", rt.unit1, hb.unit1, one);
            rep.equal("roundtrip[" + name + "].mult1", rt.mult1, hb.mult1);
            rep.equal("roundtrip[" + name + "].antipode1", rt.antipode1, hb.antipode1);
            rep.equal("roundtrip[" + name + "].unit2", rt.unit2, hb.unit2, one);
            rep.equal("roundtrip[" + name + "].mult2", rt.mult2, hb.mult2);
            rep.equal("roundtrip[" + name + "].antipode2", rt.antipode2, hb.antipode2);
        } catch (const precondition_error& e) {
            record_precondition_failure(rep, name, e);
        }
    }
    for (const auto& [name, c] : cocycles) {
        try {
            CheckReport own = check_cocycle(c);
            if (!own.passed()) {
                rep.absorb(own, "instance[" + name + "].");
                continue;
            }
            CocycleData image = cocycle_from_brace(brace_from_cocycle(c));
            CocycleMorphism fwd(c, image, c.pi, identity(c.h.obj));
            CocycleMorphism bwd(image, c, c.pi_inv, identity(c.h.obj));
            rep.absorb(check_cocycle_morphism(fwd), "iso[" + name + "].fwd.");
            rep.absorb(check_cocycle_morphism(bwd), "iso[" + name + "].bwd.");
            rep.equal("iso[" + name + "].inverse_left", compose(bwd.f, fwd.f),
                      identity(c.a.obj));
            rep.equal("iso[" + name + "].inverse_right", compose(fwd.f, bwd.f),
                      identity(image.a.obj));
        } catch (const precondition_error& e) {
            record_precondition_failure(rep, name, e);
        }
    }
    return rep;
}

}  // namespace hbx
