#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbx/pipeline.hpp"
#include "util.hpp"

using namespace hbx;
using testutil::random_morphism;

TEST_CASE("rational scalars stay in lowest terms") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::of_fraction(2, 4, q);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Scalar b = Scalar::of_fraction(1, 3, q);
    Scalar c = a + b;  // 1/2 + 1/3 = 5/6
    CHECK(c.num() == 5);
    CHECK(c.den() == 6);
    CHECK((a * b).str() == "1/6");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "2");
    CHECK(Scalar::of_fraction(-3, -6, q).str() == "1/2");
    CHECK(Scalar::of_fraction(3, -6, q).str() == "-1/2");
    CHECK_THROWS_AS(Scalar::of_fraction(1, 0, q), div_by_zero);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), div_by_zero);
}

TEST_CASE("prime field residues") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar a = Scalar::of_int(10, f7);
    CHECK(a.num() == 3);
    CHECK((a + Scalar::of_int(4, f7)).is_zero());
    CHECK((Scalar::of_int(3, f7) * Scalar::of_int(5, f7)).num() == 1);
    CHECK(Scalar::of_int(3, f7).inverse().num() == 5);
    CHECK(Scalar::of_int(-1, f7).num() == 6);
    CHECK(Scalar::of_fraction(1, 2, f7).num() == 4);  // 2*4 = 1 mod 7
    CHECK_THROWS_AS(FieldSpec::prime(6), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime(1), precondition_error);
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f7), field_error);
}

TEST_CASE("scalar parsing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::parse("-7", q).num() == -7);
    CHECK(Scalar::parse("3/9", q).str() == "1/3");
    CHECK_THROWS_AS(Scalar::parse("1/0", q), div_by_zero);
    CHECK_THROWS_AS(Scalar::parse("zebra", q), error);
}

TEST_CASE("overflow is detected, never wrapped") {
    FieldSpec q = FieldSpec::rationals();
    Scalar big = Scalar::of_int(INT64_MAX / 2, q);
    CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("identity morphisms") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sw = BraidSpec::swap(q);
    FinObject k = FinObject::unit(sw);
    Morphism idk = identity(k);
    CHECK(idk.rows() == 1);
    CHECK(idk.at(0, 0).is_one());

    FinObject x(3, sw);
    Morphism idx = identity(x);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(idx.at(i, j).is_one() == (i == j));

    Morphism f = random_morphism(x, x);
    CHECK(compose(identity(x), f) == f);
    CHECK(compose(f, identity(x)) == f);
}

TEST_CASE("compose rejects mismatched shapes and fields") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sw = BraidSpec::swap(q);
    FinObject x2(2, sw), x3(3, sw);
    Morphism f = random_morphism(x2, x3);
    CHECK_THROWS_AS(compose(f, f), shape_error);

    BraidSpec sw5 = BraidSpec::swap(FieldSpec::prime(5));
    FinObject y2(2, sw5);
    Morphism g = random_morphism(y2, y2);
    CHECK_THROWS_AS(compose(g, f), field_error);
}

TEST_CASE("composition is associative on random exact matrices") {
    FieldSpec q = FieldSpec::rationals();
    FinObject x(2, BraidSpec::swap(q));
    for (int k = 0; k < 10; ++k) {
        Morphism f = random_morphism(x, x), g = random_morphism(x, x),
                 h = random_morphism(x, x);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("tensor with the unit object is strict") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sw = BraidSpec::swap(q);
    FinObject k = FinObject::unit(sw), x(3, sw), y(2, sw);
    Morphism f = random_morphism(y, x);
    CHECK(tensor(identity(k), f) == f);
    CHECK(tensor(f, identity(k)) == f);
    CHECK(tensor(x, y).dim() == 6);
}

TEST_CASE("tensor interchange law") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sw = BraidSpec::swap(q);
    FinObject x(2, sw), y(3, sw);
    for (int k = 0; k < 5; ++k) {
        Morphism f = random_morphism(y, x), fp = random_morphism(x, y);
        Morphism g = random_morphism(x, y), gp = random_morphism(y, x);
        CHECK(compose(tensor(f, g), tensor(fp, gp)) ==
              tensor(compose(f, fp), compose(g, gp)));
    }
}

TEST_CASE("braiding against the unit object is the identity") {
    FieldSpec f7 = FieldSpec::prime(7);
    BraidSpec bi = BraidSpec::bicharacter(3, Scalar::of_int(2, f7));
    FinObject x(3, {0, 1, 2}, bi), k = FinObject::unit(bi);
    CHECK(braiding(x, k) == identity(x));
    CHECK(braiding(k, x) == identity(x));
}

TEST_CASE("sign braiding flips two odd lines") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sg = BraidSpec::sign(q);
    FinObject line(1, {1}, sg);
    Morphism c = braiding(line, line);
    CHECK(c.at(0, 0) == -Scalar::one(q));
}

TEST_CASE("hexagon identities") {
    FieldSpec f7 = FieldSpec::prime(7);
    BraidSpec bi = BraidSpec::bicharacter(3, Scalar::of_int(2, f7));
    FinObject m(2, {0, 1}, bi), n(3, {0, 1, 2}, bi), p(2, {1, 2}, bi);

    // c_{M,N(x)P} = (N (x) c_{M,P}) (c_{M,N} (x) P)
    Morphism lhs = braiding(m, tensor(n, p));
    Morphism rhs = compose(tensor(identity(n), braiding(m, p)),
                           tensor(braiding(m, n), identity(p)));
    CHECK(lhs == rhs);

    // c_{M(x)N,P} = (c_{M,P} (x) N) (M (x) c_{N,P})
    Morphism lhs2 = braiding(tensor(m, n), p);
    Morphism rhs2 = compose(tensor(braiding(m, p), identity(n)),
                            tensor(identity(m), braiding(n, p)));
    CHECK(lhs2 == rhs2);
}

TEST_CASE("braiding naturality on degree-preserving maps") {
    FieldSpec f7 = FieldSpec::prime(7);
    const BraidSpec specs[] = {BraidSpec::swap(f7), BraidSpec::sign(f7),
                               BraidSpec::bicharacter(3, Scalar::of_int(2, f7))};
    for (const auto& braid : specs) {
        uint32_t n = braid.modulus();
        FinObject m(3, {0, 1 % n, 2 % n}, braid), mp(3, {0, 1 % n, 2 % n}, braid);
        FinObject o(2, {0, 1 % n}, braid), op(2, {0, 1 % n}, braid);
        for (int k = 0; k < 5; ++k) {
            Morphism f = random_morphism(mp, m), g = random_morphism(op, o);
            CHECK(compose(braiding(mp, op), tensor(f, g)) ==
                  compose(tensor(g, f), braiding(m, o)));
        }
    }
}

TEST_CASE("symmetry of the backends") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(is_symmetric(BraidSpec::swap(q)));
    CHECK(is_symmetric(BraidSpec::sign(q)));
    // 2^2 = 4 != 1 in F7
    CHECK_FALSE(is_symmetric(BraidSpec::bicharacter(3, Scalar::of_int(2, f7))));

    // double braiding is the identity exactly in the symmetric backends
    BraidSpec sg = BraidSpec::sign(q);
    FinObject x(2, {0, 1}, sg);
    CHECK(compose(braiding(x, x), braiding(x, x)) == identity(tensor(x, x)));

    // and fails on a pair of odd lines under the cube-root backend
    BraidSpec bi = BraidSpec::bicharacter(3, Scalar::of_int(2, f7));
    FinObject line(1, {1}, bi);
    Morphism sq = compose(braiding(line, line), braiding(line, line));
    CHECK(sq.at(0, 0) == Scalar::of_int(4, f7));
}

TEST_CASE("bicharacter braiding requires q^N = 1") {
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK_THROWS_AS(BraidSpec::bicharacter(3, Scalar::of_int(3, f7)), braid_error);
    CHECK_THROWS_AS(BraidSpec::sign(FieldSpec::prime(2)), precondition_error);
}

TEST_CASE("morphisms must be degree-preserving") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sg = BraidSpec::sign(q);
    FinObject x(2, {0, 1}, sg);
    MatrixBuilder b(x, x);
    b.at(0, 1) = Scalar::one(q);  // connects degree 1 to degree 0
    CHECK_THROWS_AS(Morphism(x, x, b.take()), degree_error);
}

TEST_CASE("objects reject bad gradings") {
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(FinObject(2, {0, 1}, BraidSpec::swap(q)), shape_error);
    CHECK_THROWS_AS(FinObject(2, {0}, BraidSpec::sign(q)), shape_error);
    CHECK_THROWS_AS(FinObject(2, {0, 2}, BraidSpec::sign(q)), shape_error);
}

TEST_CASE("exact inverse via Gauss-Jordan") {
    FieldSpec q = FieldSpec::rationals();
    FinObject x(4, BraidSpec::swap(q));
    for (int k = 0; k < 5; ++k) {
        Morphism f = testutil::random_invertible(x);
        Morphism g = inverse(f);
        CHECK(compose(f, g) == identity(x));
        CHECK(compose(g, f) == identity(x));
    }
    CHECK_THROWS_AS(inverse(Morphism::zero(x, x)), precondition_error);
}

TEST_CASE("pipeline materialization equals the reference compose/tensor path") {
    FieldSpec f5 = FieldSpec::prime(5);
    BraidSpec sg = BraidSpec::sign(f5);
    FinObject a(2, {0, 1}, sg), b(3, {0, 1, 0}, sg), c(2, {1, 1}, sg);

    for (int k = 0; k < 10; ++k) {
        Morphism f = random_morphism(b, a);   // a -> b
        Morphism g = random_morphism(a, b);   // b -> a
        Morphism h = random_morphism(c, c);

        // id_a (x) f (x) id_c, then id_a (x) g (x) id_c, then braiding at the front
        Pipeline p(a.dim() * a.dim() * c.dim());
        p.then(a.dim(), f, c.dim()).then(a.dim(), g, c.dim()).then(1, braiding(a, a), c.dim());
        FinObject src = tensor(a, tensor(a, c));
        FinObject dst = tensor(a, tensor(a, c));
        Morphism streamed = p.materialize(dst, src);

        Morphism reference = compose(
            tensor(braiding(a, a), identity(c)),
            compose(tensor(identity(a), tensor(g, identity(c))),
                    tensor(identity(a), tensor(f, identity(c)))));
        CHECK(streamed == reference);
        (void)h;
    }
}

TEST_CASE("pipeline validates link dimensions") {
    FieldSpec q = FieldSpec::rationals();
    FinObject x(2, BraidSpec::swap(q));
    Morphism f = random_morphism(x, x);
    Pipeline p(4);
    CHECK_THROWS_AS(p.then(3, f, 1), shape_error);
}

TEST_CASE("transpose swaps endpoints and preserves degrees") {
    FieldSpec q = FieldSpec::rationals();
    BraidSpec sg = BraidSpec::sign(q);
    FinObject x(2, {0, 1}, sg), y(3, {0, 1, 1}, sg);
    Morphism f = random_morphism(y, x);
    Morphism ft = transpose(f);
    CHECK(ft.src() == y);
    CHECK(ft.dst() == x);
    CHECK(transpose(ft) == f);
}
