#include "hbx/brace.hpp"

namespace hbx {

HopfBraceData::HopfBraceData(FinObject obj_, Morphism counit_, Morphism comult_,
                             Morphism unit1_, Morphism mult1_, Morphism antipode1_,
                             Morphism unit2_, Morphism mult2_, Morphism antipode2_)
    : obj(std::move(obj_)),
      counit(std::move(counit_)),
      comult(std::move(comult_)),
      unit1(std::move(unit1_)),
      mult1(std::move(mult1_)),
      antipode1(std::move(antipode1_)),
      unit2(std::move(unit2_)),
      mult2(std::move(mult2_)),
      antipode2(std::move(antipode2_)) {
    hopf1();  // endpoint validation happens in the HopfData constructors
    hopf2();
}

Morphism gamma_action(const HopfBraceData& hb) {
    size_t d = hb.obj.dim();
    FinObject hh = tensor(hb.obj, hb.obj);
    Pipeline p(d * d);
    p.then(1, hb.comult, d).then(1, hb.antipode1, d * d).then(d, hb.mult2, 1).then(hb.mult1);
    return p.materialize(hb.obj, hh);
}

Morphism gamma_prime_action(const HopfBraceData& hb) {
    size_t d = hb.obj.dim();
    FinObject hh = tensor(hb.obj, hb.obj);
    Pipeline p(d * d);
    p.then(1, hb.comult, d)
        .then(1, braiding(hb.obj, hb.obj), 1)
        .then(1, hb.mult2, d)
        .then(1, hb.antipode1, 1)
        .then(hb.mult1);
    return p.materialize(hb.obj, hh);
}

CheckReport check_hopf_brace(const HopfBraceData& hb) {
    CheckReport rep("hopf-brace");
    rep.absorb(check_hopf(hb.hopf1()), "hopf1.");
    rep.absorb(check_hopf(hb.hopf2()), "hopf2.");
    if (!rep.passed())
        return rep;

    size_t d = hb.obj.dim();
    rep.equal("brace.shared_unit", hb.unit1, hb.unit2, {1});

    Morphism gamma = gamma_action(hb);
    Morphism gamma_prime = gamma_prime_action(hb);
    Morphism c = braiding(hb.obj, hb.obj);
    FinObject hh = tensor(hb.obj, hb.obj);
    FinObject hhh = tensor(hh, hb.obj);

    {
        Pipeline lhs(d * d * d), rhs(d * d * d);
        lhs.then(d, hb.mult1, 1).then(hb.mult2);
        rhs.then(1, hb.comult, d * d)
            .then(d, c, d)
            .then(1, hb.mult2, d * d)
            .then(d, gamma, 1)
            .then(hb.mult1);
        rep.equal("brace.compat", lhs.materialize(hb.obj, hhh), rhs.materialize(hb.obj, hhh),
                  {d, d, d});
    }
    {
        Pipeline lhs(d * d), rhs(d * d);
        lhs.then(d, hb.antipode1, 1).then(gamma);
        rhs.then(1, hb.comult, d)
            .then(d, c, 1)
            .then(1, hb.mult2, d)
            .then(1, hb.antipode1, d)
            .then(hb.mult1);
        rep.equal("brace.gamma_antipode", lhs.materialize(hb.obj, hh),
                  rhs.materialize(hb.obj, hh), {d, d});
    }
    {
        Pipeline rhs(d * d);
        rhs.then(1, hb.comult, d).then(d, gamma, 1).then(hb.mult1);
        rep.equal("brace.mult2_via_gamma", hb.mult2, rhs.materialize(hb.obj, hh), {d, d});
    }
    {
        Pipeline rhs(d * d);
        rhs.then(1, hb.comult, d).then(d, c, 1).then(1, gamma_prime, d).then(hb.mult1);
        rep.equal("brace.mult2_via_gamma_prime", hb.mult2, rhs.materialize(hb.obj, hh), {d, d});
    }

    rep.absorb(check_module_algebra(hb.algebra1(), gamma, hb.hopf2()), "gamma.");
    rep.absorb(check_module_algebra(hb.algebra1(), gamma_prime, hb.hopf2()), "gamma_prime.");

    if (is_cocommutative(hb)) {
        CoalgebraData cc(hb.obj, hb.counit, hb.comult);
        CoalgebraData hh_coalg = tensor_coalgebra(cc, cc);
        const std::pair<const char*, const Morphism*> actions[] = {
            {"brace.gamma_comult", &gamma}, {"brace.gamma_prime_comult", &gamma_prime}};
        for (const auto& [name, action] : actions) {
            Pipeline rhs(d * d);
            rhs.then(hh_coalg.comult).then(1, *action, d * d).then(d, *action, 1);
            rep.equal(name, compose(hb.comult, *action), rhs.materialize(hh, hh), {d, d});
            rep.equal(std::string(name) + "_counit", compose(hb.counit, *action),
                      hh_coalg.counit, {d, d});
        }
    }
    return rep;
}

bool is_cocommutative(const HopfBraceData& hb) {
    return is_cocommutative(CoalgebraData(hb.obj, hb.counit, hb.comult));
}

HopfBraceData trivial_brace(const HopfData& h) {
    CheckReport rep = check_hopf(h);
    if (!rep.passed())
        throw precondition_error("InvalidHopf", "trivial brace over data failing the Hopf suite");
    return HopfBraceData(h.obj, h.counit, h.comult, h.unit, h.mult, h.antipode, h.unit, h.mult,
                         h.antipode);
}

}  // namespace hbx
