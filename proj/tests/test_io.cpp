#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbx/io.hpp"

using namespace hbx;
using nlohmann::json;

TEST_CASE("hopf files round trip") {
    FieldSpec f7 = FieldSpec::prime(7);
    for (const HopfData& h :
         {group_algebra(GroupTable::symmetric3(), FieldSpec::rationals()),
          super_exterior_line(FieldSpec::rationals()),
          braided_line(3, f7, Scalar::of_int(2, f7))}) {
        json doc = hopf_to_json(h);
        ParsedStructure s = parse_structure(doc);
        REQUIRE(s.kind == ParsedStructure::Kind::hopf);
        CHECK(s.hopf->unit == h.unit);
        CHECK(s.hopf->mult == h.mult);
        CHECK(s.hopf->counit == h.counit);
        CHECK(s.hopf->comult == h.comult);
        CHECK(s.hopf->antipode == h.antipode);
        CHECK(s.hopf->obj == h.obj);
    }
}

TEST_CASE("brace files round trip") {
    SkewBraceCensus census = enumerate_skew_braces(4, true);
    HopfBraceData hb = linearize_skew_brace(census.structures.back(), FieldSpec::prime(5));
    ParsedStructure s = parse_structure(brace_to_json(hb));
    REQUIRE(s.kind == ParsedStructure::Kind::brace);
    CHECK(s.brace->mult1 == hb.mult1);
    CHECK(s.brace->mult2 == hb.mult2);
    CHECK(s.brace->antipode2 == hb.antipode2);
    CHECK(s.brace->comult == hb.comult);
}

TEST_CASE("cocycle files round trip") {
    HopfBraceData hb = linearize_skew_brace(
        enumerate_skew_braces(4, true).structures.back(), FieldSpec::rationals());
    CocycleData c = cocycle_from_brace(hb);
    ParsedStructure s = parse_structure(cocycle_to_json(c));
    REQUIRE(s.kind == ParsedStructure::Kind::cocycle);
    CHECK(s.cocycle->phi == c.phi);
    CHECK(s.cocycle->pi == c.pi);
    CHECK(s.cocycle->pi_inv == c.pi_inv);
    CHECK(s.cocycle->a.mult == c.a.mult);
    CHECK(s.cocycle->h.mult == c.h.mult);
}

TEST_CASE("module files round trip") {
    HopfData c3 = group_algebra(GroupTable::cyclic(3), FieldSpec::rationals());
    ModuleData reg = regular_module(c3.algebra());
    ParsedStructure s = parse_structure(module_to_json(c3, reg));
    REQUIRE(s.kind == ParsedStructure::Kind::module);
    CHECK(s.module->act == reg.act);
    CHECK(s.module_over->mult == c3.mult);
}

TEST_CASE("brace module files round trip") {
    HopfBraceData hb = linearize_skew_brace(
        enumerate_skew_braces(4, true).structures.back(), FieldSpec::rationals());
    BraceModuleData reg = regular_brace_module(hb);
    ParsedStructure s = parse_structure(brace_module_to_json(reg));
    REQUIRE(s.kind == ParsedStructure::Kind::brace_module);
    CHECK(s.brace_module->psi1 == reg.psi1);
    CHECK(s.brace_module->psi2 == reg.psi2);
}

TEST_CASE("cocycle module files round trip") {
    HopfBraceData hb = linearize_skew_brace(
        enumerate_skew_braces(4, true).structures.back(), FieldSpec::rationals());
    CocycleModuleData reg = regular_cocycle_module(cocycle_from_brace(hb));
    ParsedStructure s = parse_structure(cocycle_module_to_json(reg));
    REQUIRE(s.kind == ParsedStructure::Kind::cocycle_module);
    CHECK(s.cocycle_module->act_m == reg.act_m);
    CHECK(s.cocycle_module->hact_m == reg.hact_m);
    CHECK(s.cocycle_module->act_n == reg.act_n);
    CHECK(s.cocycle_module->gamma == reg.gamma);
}

TEST_CASE("rationals serialize as num/den strings") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sw = BraidSpec::swap(q);
    FinObject k = FinObject::unit(sw);
    MatrixBuilder b(k, k);
    b.at(0, 0) = Scalar::of_fraction(3, 4, q);
    json doc = json::array();
    doc.push_back(Scalar::of_fraction(3, 4, q).str());
    CHECK(doc[0] == "3/4");
    CHECK(Scalar::parse("3/4", q) == Scalar::of_fraction(3, 4, q));
}

TEST_CASE("parse errors name the offending key") {
    json doc{{"field", {{"kind", "Q"}}}, {"dim", 2}};
    CHECK_THROWS_WITH_AS(parse_structure(doc), doctest::Contains("structure key"), error);

    doc["hopf"] = json::object();
    CHECK_THROWS_WITH_AS(parse_structure(doc), doctest::Contains("unit"), error);

    json bad_field{{"field", {{"kind", "R"}}}, {"dim", 1}, {"hopf", json::object()}};
    CHECK_THROWS_WITH_AS(parse_structure(bad_field), doctest::Contains("field"), error);
}

TEST_CASE("malformed scalars are rejected") {
    HopfData c2 = group_algebra(GroupTable::cyclic(2), FieldSpec::rationals());
    json doc = hopf_to_json(c2);
    doc["hopf"]["unit"][0] = "1/0";
    CHECK_THROWS_AS(parse_structure(doc), error);
    doc["hopf"]["unit"][0] = "pear";
    CHECK_THROWS_AS(parse_structure(doc), error);
}

TEST_CASE("shape mismatches are rejected") {
    HopfData c2 = group_algebra(GroupTable::cyclic(2), FieldSpec::rationals());
    json doc = hopf_to_json(c2);
    doc["dim"] = 3;
    CHECK_THROWS_AS(parse_structure(doc), error);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_WITH_AS(load_structure("/nonexistent/x.json"), doctest::Contains("cannot open"),
                         error);
}

TEST_CASE("census serialization is deterministic") {
    SkewBraceCensus census = enumerate_skew_braces(4, true);
    std::string a = dump_json(census_to_json(census));
    std::string b = dump_json(census_to_json(enumerate_skew_braces(4, true)));
    CHECK(a == b);
    CHECK(a.find("\"labeled_count\": 10") != std::string::npos);
    CHECK(a.find("\"iso_count\": 4") != std::string::npos);
}

TEST_CASE("prime field files round trip") {
    HopfData s3 = group_algebra(GroupTable::symmetric3(), FieldSpec::prime(5));
    ParsedStructure s = parse_structure(hopf_to_json(s3));
    CHECK(s.hopf->obj.field() == FieldSpec::prime(5));
    CHECK(s.hopf->mult == s3.mult);
}
