#include "hbx/hopf.hpp"

namespace hbx {

namespace {

void expect_endpoints(const Morphism& f, const FinObject& dst, const FinObject& src,
                      const char* what) {
    if (f.src() != src || f.dst() != dst)
        throw shape_error(std::string(what) + " has wrong endpoints");
}

}  // namespace

AlgebraData::AlgebraData(FinObject obj_, Morphism unit_, Morphism mult_)
    : obj(std::move(obj_)), unit(std::move(unit_)), mult(std::move(mult_)) {
    FinObject k = FinObject::unit(obj.braid());
    expect_endpoints(unit, obj, k, "unit");
    expect_endpoints(mult, obj, tensor(obj, obj), "mult");
}

CoalgebraData::CoalgebraData(FinObject obj_, Morphism counit_, Morphism comult_)
    : obj(std::move(obj_)), counit(std::move(counit_)), comult(std::move(comult_)) {
    FinObject k = FinObject::unit(obj.braid());
    expect_endpoints(counit, k, obj, "counit");
    expect_endpoints(comult, tensor(obj, obj), obj, "comult");
}

HopfData::HopfData(FinObject obj_, Morphism unit_, Morphism mult_, Morphism counit_,
                   Morphism comult_, Morphism antipode_)
    : obj(std::move(obj_)),
      unit(std::move(unit_)),
      mult(std::move(mult_)),
      counit(std::move(counit_)),
      comult(std::move(comult_)),
      antipode(std::move(antipode_)) {
    FinObject k = FinObject::unit(obj.braid());
    expect_endpoints(unit, obj, k, "unit");
    expect_endpoints(mult, obj, tensor(obj, obj), "mult");
    expect_endpoints(counit, k, obj, "counit");
    expect_endpoints(comult, tensor(obj, obj), obj, "comult");
    expect_endpoints(antipode, obj, obj, "antipode");
}

ModuleData::ModuleData(FinObject carrier_, Morphism act_, AlgebraData over_)
    : carrier(std::move(carrier_)), act(std::move(act_)), over(std::move(over_)) {
    expect_endpoints(act, carrier, tensor(over.obj, carrier), "action");
}

CheckReport check_algebra(const AlgebraData& a) {
    CheckReport rep("algebra");
    size_t d = a.obj.dim();
    Morphism id = identity(a.obj);

    Pipeline ul(d);
    ul.then(1, a.unit, d).then(a.mult);
    rep.equal("alg.unit_left", ul.materialize(a.obj, a.obj), id, {d});

    Pipeline ur(d);
    ur.then(d, a.unit, 1).then(a.mult);
    rep.equal("alg.unit_right", ur.materialize(a.obj, a.obj), id, {d});

    FinObject hhh = tensor(tensor(a.obj, a.obj), a.obj);
    Pipeline lhs(d * d * d), rhs(d * d * d);
    lhs.then(d, a.mult, 1).then(a.mult);
    rhs.then(1, a.mult, d).then(a.mult);
    rep.equal("alg.assoc", lhs.materialize(a.obj, hhh), rhs.materialize(a.obj, hhh), {d, d, d});
    return rep;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
    CheckReport rep("coalgebra");
    size_t d = c.obj.dim();
    Morphism id = identity(c.obj);

    Pipeline cl(d);
    cl.then(c.comult).then(1, c.counit, d);
    rep.equal("coalg.counit_left", cl.materialize(c.obj, c.obj), id, {d});

    Pipeline cr(d);
    cr.then(c.comult).then(d, c.counit, 1);
    rep.equal("coalg.counit_right", cr.materialize(c.obj, c.obj), id, {d});

    FinObject ccc = tensor(tensor(c.obj, c.obj), c.obj);
    Pipeline lhs(d), rhs(d);
    lhs.then(c.comult).then(1, c.comult, d);
    rhs.then(c.comult).then(d, c.comult, 1);
    rep.equal("coalg.coassoc", lhs.materialize(ccc, c.obj), rhs.materialize(ccc, c.obj), {d});
    return rep;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
    if (a.obj.braid() != b.obj.braid())
        throw braid_error("tensor algebra over different braidings");
    FinObject ab = tensor(a.obj, b.obj);
    size_t da = a.obj.dim(), db = b.obj.dim();
    Pipeline mult(da * db * da * db);
    mult.then(da, braiding(b.obj, a.obj), db)
        .then(1, a.mult, db * db)
        .then(da, b.mult, 1);
    return AlgebraData(ab, tensor(a.unit, b.unit), mult.materialize(ab, tensor(ab, ab)));
}

CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d) {
    if (c.obj.braid() != d.obj.braid())
        throw braid_error("tensor coalgebra over different braidings");
    FinObject cd = tensor(c.obj, d.obj);
    size_t dc = c.obj.dim(), dd = d.obj.dim();
    Pipeline comult(dc * dd);
    comult.then(1, c.comult, dd)
        .then(dc * dc, d.comult, 1)
        .then(dc, braiding(c.obj, d.obj), dd);
    return CoalgebraData(cd, tensor(c.counit, d.counit), comult.materialize(tensor(cd, cd), cd));
}

Morphism convolve(const Morphism& f, const Morphism& g, const CoalgebraData& c,
                  const AlgebraData& a) {
    if (f.src() != c.obj || g.src() != c.obj || f.dst() != a.obj || g.dst() != a.obj)
        throw shape_error("convolution factors must map the coalgebra into the algebra");
    return compose(a.mult, compose(tensor(f, g), c.comult));
}

Morphism convolution_unit(const CoalgebraData& c, const AlgebraData& a) {
    return compose(a.unit, c.counit);
}

CheckReport check_bialgebra(const HopfData& h) {
    CheckReport rep("bialgebra");
    rep.absorb(check_algebra(h.algebra()), "");
    rep.absorb(check_coalgebra(h.coalgebra()), "");
    if (!rep.passed())
        return rep;

    size_t d = h.obj.dim();
    FinObject hh = tensor(h.obj, h.obj);
    AlgebraData hh_alg = tensor_algebra(h.algebra(), h.algebra());

    Pipeline lhs(d * d), rhs(d * d);
    lhs.then(h.mult).then(h.comult);
    rhs.then(1, h.comult, d).then(d * d, h.comult, 1).then(hh_alg.mult);
    rep.equal("bialg.comult_mult", lhs.materialize(hh, hh), rhs.materialize(hh, hh), {d, d});

    rep.equal("bialg.comult_unit", compose(h.comult, h.unit), tensor(h.unit, h.unit), {1});
    rep.equal("bialg.counit_mult", compose(h.counit, h.mult), tensor(h.counit, h.counit),
              {d, d});
    rep.equal("bialg.counit_unit", compose(h.counit, h.unit),
              identity(FinObject::unit(h.obj.braid())), {1});
    return rep;
}

CheckReport check_hopf(const HopfData& h) {
    CheckReport rep("hopf");
    rep.absorb(check_bialgebra(h), "");
    if (!rep.passed())
        return rep;

    size_t d = h.obj.dim();
    Morphism id = identity(h.obj);
    Morphism conv_unit = convolution_unit(h.coalgebra(), h.algebra());
    rep.equal("hopf.antipode_left", convolve(h.antipode, id, h.coalgebra(), h.algebra()),
              conv_unit, {d});
    rep.equal("hopf.antipode_right", convolve(id, h.antipode, h.coalgebra(), h.algebra()),
              conv_unit, {d});
    if (!rep.passed())
        return rep;

    // consequences of the convolution laws; a failure here is a checker bug
    FinObject hh = tensor(h.obj, h.obj);
    Morphism c = braiding(h.obj, h.obj);
    Pipeline am_l(d * d), am_r(d * d);
    am_l.then(h.mult).then(h.antipode);
    am_r.then(c).then(1, h.antipode, d).then(d, h.antipode, 1).then(h.mult);
    rep.equal("hopf.antipode_antimult", am_l.materialize(h.obj, hh),
              am_r.materialize(h.obj, hh), {d, d}, Violation::Kind::internal);

    Pipeline ac_l(d), ac_r(d);
    ac_l.then(h.antipode).then(h.comult);
    ac_r.then(h.comult).then(1, h.antipode, d).then(d, h.antipode, 1).then(c);
    rep.equal("hopf.antipode_anticomult", ac_l.materialize(hh, h.obj),
              ac_r.materialize(hh, h.obj), {d}, Violation::Kind::internal);

    rep.equal("hopf.antipode_unit", compose(h.antipode, h.unit), h.unit, {1},
              Violation::Kind::internal);
    rep.equal("hopf.antipode_counit", compose(h.counit, h.antipode), h.counit, {d},
              Violation::Kind::internal);
    return rep;
}

CheckReport check_left_module(const ModuleData& m) {
    CheckReport rep("module");
    rep.absorb(check_algebra(m.over), "over.");
    if (!rep.passed())
        return rep;

    size_t da = m.over.obj.dim(), dm = m.carrier.dim();
    Pipeline u(dm);
    u.then(1, m.over.unit, dm).then(m.act);
    rep.equal("mod.unit", u.materialize(m.carrier, m.carrier), identity(m.carrier), {dm});

    FinObject aam = tensor(tensor(m.over.obj, m.over.obj), m.carrier);
    Pipeline lhs(da * da * dm), rhs(da * da * dm);
    lhs.then(da, m.act, 1).then(m.act);
    rhs.then(1, m.over.mult, dm).then(m.act);
    rep.equal("mod.assoc", lhs.materialize(m.carrier, aam), rhs.materialize(m.carrier, aam),
              {da, da, dm});
    return rep;
}

CheckReport check_module_algebra(const AlgebraData& b, const Morphism& act, const HopfData& d) {
    CheckReport rep("module-algebra");
    rep.absorb(check_left_module(ModuleData(b.obj, act, AlgebraData(d.obj, d.unit, d.mult))),
               "");
    if (!rep.passed())
        return rep;

    size_t dd = d.obj.dim(), db = b.obj.dim();
    Pipeline ul(dd);
    ul.then(dd, b.unit, 1).then(act);
    rep.equal("modalg.unit_equivariant", ul.materialize(b.obj, d.obj),
              compose(b.unit, d.counit), {dd});

    FinObject dbb = tensor(tensor(d.obj, b.obj), b.obj);
    Pipeline lhs(dd * db * db), rhs(dd * db * db);
    lhs.then(dd, b.mult, 1).then(act);
    rhs.then(1, d.comult, db * db)
        .then(dd, braiding(d.obj, b.obj), db)
        .then(1, act, dd * db)
        .then(db, act, 1)
        .then(b.mult);
    rep.equal("modalg.mult_equivariant", lhs.materialize(b.obj, dbb),
              rhs.materialize(b.obj, dbb), {dd, db, db});
    return rep;
}

bool is_commutative(const AlgebraData& a) {
    return compose(a.mult, braiding(a.obj, a.obj)) == a.mult;
}

bool is_cocommutative(const CoalgebraData& c) {
    return compose(braiding(c.obj, c.obj), c.comult) == c.comult;
}

bool is_cocommutative(const HopfData& h) { return is_cocommutative(h.coalgebra()); }

ModuleData regular_module(const AlgebraData& a) { return ModuleData(a.obj, a.mult, a); }

ModuleData trivial_module(const HopfData& h, const FinObject& m) {
    return ModuleData(m, tensor(h.counit, identity(m)), h.algebra());
}

HopfData dual_hopf(const HopfData& h) {
    if (!h.obj.braid().symmetric())
        throw precondition_error("NotSymmetric", "dualizing needs a symmetric braiding");
    return HopfData(h.obj, transpose(h.counit), transpose(h.comult), transpose(h.unit),
                    transpose(h.mult), transpose(h.antipode));
}

}  // namespace hbx
