#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rht;

namespace {

struct S2xS3 {
    std::shared_ptr<const SullivanPresentation> p = test::load("s2xs3.json");
    GeneratorSetPtr g = p->generators();
    WeightAssignment w{{1, 2, 1}};
    LElement x = to_laurent(QElement::generator(g, 0));
    LElement y = to_laurent(QElement::generator(g, 1));
    LElement u = to_laurent(QElement::generator(g, 2));
    ModelAutomorphism phi = parse_automorphism(p, test::read_corpus("s2xs3-phi.json"));
};

Laurent t(int k) { return Laurent::t(k); }

}  // namespace

TEST_CASE("diagonal family of the S2 model") {
    const auto p = test::load("s2.json");
    const auto lambda = diagonal_family(p, WeightAssignment{{1, 2}});
    const auto g = p->generators();
    CHECK(lambda.image(0) == to_laurent(QElement::generator(g, 0)) * t(1));
    CHECK(lambda.image(1) == to_laurent(QElement::generator(g, 1)) * t(2));
    CHECK(verify_family(lambda).empty());
    const auto at2 = evaluate(lambda, Rational(2));
    CHECK(at2.map.image(0) == QElement::generator(g, 0) * Rational(2));
    CHECK(at2.map.image(1) == QElement::generator(g, 1) * Rational(4));
    CHECK_THROWS_AS(diagonal_family(p, WeightAssignment{{1, 3}}), std::invalid_argument);
}

TEST_CASE("equal weights give the identity at t = 1") {
    const auto p = test::load("s3.json");
    const auto lambda = diagonal_family(p, WeightAssignment{{4}});
    CHECK(evaluate(lambda, Rational(1)).map == AlgebraMap<Rational>::identity(p->generators()));
}

TEST_CASE("diagonal family of S2xS3") {
    S2xS3 s;
    const auto lambda = diagonal_family(s.p, s.w);
    CHECK(lambda.image(0) == s.x * t(1));
    CHECK(lambda.image(1) == s.y * t(2));
    CHECK(lambda.image(2) == s.u * t(1));
}

TEST_CASE("inverse of the S2xS3 automorphism") {
    S2xS3 s;
    const auto inv = s.phi.inverse_map();
    CHECK(inv.image(1) == QElement::generator(s.g, 1) - QElement::generator(s.g, 2));
    CHECK(inv.image(0) == QElement::generator(s.g, 0));
    const auto id = AlgebraMap<Rational>::identity(s.g);
    CHECK(s.phi.map().after(inv) == id);
    CHECK(inv.after(s.phi.map()) == id);
    const auto back = invert_automorphism(s.phi);
    CHECK(back.map() == inv);
    CHECK(ModelAutomorphism::identity(s.p).inverse_map() == id);
}

TEST_CASE("inverse of a diagonal rescaling") {
    const auto p = test::load("s2.json");
    const auto g = p->generators();
    const ModelAutomorphism phi(p, {QElement::generator(g, 0) * Rational(2), QElement::generator(g, 1) * Rational(4)});
    CHECK(phi.inverse_map().image(0) == QElement::generator(g, 0) * Rational::parse("1/2"));
    CHECK(phi.inverse_map().image(1) == QElement::generator(g, 1) * Rational::parse("1/4"));
}

TEST_CASE("inverse with decomposable corrections") {
    // z of degree 4 with z -> z + x^2 + 3/2 x^2, y -> y.
    const auto p = test::make_presentation({{"x", 2}, {"y", 3}, {"z", 4}}, {{"y", {{"1", {{"x", 2}}}}}}, 8);
    const auto ptr = std::make_shared<const SullivanPresentation>(p);
    const auto g = ptr->generators();
    const auto x = QElement::generator(g, 0);
    const ModelAutomorphism phi(ptr, {x * Rational(2), QElement::generator(g, 1) * Rational(4),
                                      QElement::generator(g, 2) * Rational(3) + x * x});
    const auto id = AlgebraMap<Rational>::identity(g);
    CHECK(phi.map().after(phi.inverse_map()) == id);
    CHECK(phi.inverse_map().after(phi.map()) == id);
}

TEST_CASE("singular or non chain automorphisms are rejected") {
    const auto p = test::load("s2xs3.json");
    const auto g = p->generators();
    const auto x = QElement::generator(g, 0);
    const auto y = QElement::generator(g, 1);
    const auto u = QElement::generator(g, 2);
    CHECK_THROWS_AS(ModelAutomorphism(p, {x, y, QElement(g)}), std::domain_error);
    CHECK_THROWS_AS(ModelAutomorphism(p, {x, u, y}), std::invalid_argument);
}

TEST_CASE("conjugated S2xS3 family") {
    S2xS3 s;
    const auto lambda = diagonal_family(s.p, s.w);
    const auto c = conjugate(lambda, s.phi);
    CHECK(c.image(0) == s.x * t(1));
    CHECK(c.image(2) == s.u * t(1));
    CHECK(c.image(1) == s.y * t(2) + s.u * (t(1) - t(2)));
    CHECK_FALSE(c == lambda);
    CHECK_FALSE(c.image(1) == lambda.image(1));
    CHECK(verify_family(c).empty());
    const auto at2 = evaluate(c, Rational(2));
    CHECK(at2.map.image(1) == QElement::generator(s.g, 1) * Rational(4) - QElement::generator(s.g, 2) * Rational(2));
}

TEST_CASE("conjugation by the identity and of the identity") {
    S2xS3 s;
    const auto lambda = diagonal_family(s.p, s.w);
    CHECK(conjugate(lambda, ModelAutomorphism::identity(s.p)) == lambda);
    const auto trivial = diagonal_family(s.p, WeightAssignment{{1, 2, 1}}.scaled(1));
    const OneParameterFamily id(s.p, {s.x, s.y, s.u});
    CHECK(conjugate(id, s.phi) == id);
    CHECK(verify_family(id).empty());
    (void)trivial;
}

TEST_CASE("verify family detects violations") {
    const auto p = test::load("s2.json");
    const auto g = p->generators();
    const auto x = to_laurent(QElement::generator(g, 0));
    const auto y = to_laurent(QElement::generator(g, 1));
    const OneParameterFamily bad(p, {x * t(1), y * t(3)});
    const auto vs = verify_family(bad);
    CHECK(std::any_of(vs.begin(), vs.end(), [](const Violation& v) { return v.kind == Violation::Kind::ChainMap; }));

    const OneParameterFamily shifted(p, {x * (t(1) + Laurent(1)), y * (t(1) + Laurent(1)) * (t(1) + Laurent(1))});
    const auto vs2 = verify_family(shifted);
    CHECK(std::any_of(vs2.begin(), vs2.end(), [](const Violation& v) { return v.kind == Violation::Kind::Identity; }));
    CHECK(std::any_of(vs2.begin(), vs2.end(), [](const Violation& v) { return v.kind == Violation::Kind::GroupLaw; }));
}

TEST_CASE("evaluation is a homomorphism of the parameter group") {
    S2xS3 s;
    const auto c = conjugate(diagonal_family(s.p, s.w), s.phi);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = test::random_nonzero_rational(rng, 5);
        const Rational b = test::random_nonzero_rational(rng, 5);
        CHECK(evaluate(c, a).map.after(evaluate(c, b).map) == evaluate(c, a * b).map);
    }
    CHECK(evaluate(c, Rational(1)).map == AlgebraMap<Rational>::identity(s.g));
    CHECK_FALSE(evaluate(c, Rational(0)).invertible);
    CHECK(evaluate(c, Rational(2)).invertible);
}

TEST_CASE("compose multiplies parameters") {
    S2xS3 s;
    const auto lambda = diagonal_family(s.p, s.w);
    const auto sq = compose(lambda, lambda);
    CHECK(sq.image(1) == s.y * t(4));
}

TEST_CASE("family files round trip") {
    S2xS3 s;
    const auto c = conjugate(diagonal_family(s.p, s.w), s.phi);
    const auto text = json_io::dump(family_json(c));
    CHECK(parse_family(s.p, text) == c);
    CHECK_THROWS_AS(parse_family(s.p, R"({"x":[{"coeff":"t","monomial":[["x",1]]}]})"), ParseError);
    CHECK_THROWS_AS(parse_family(s.p, R"({"x":[{"coeff":"t","monomial":[["y",1]]}],"y":[],"u":[]})"), ParseError);
}

TEST_CASE("transport changes the generating set") {
    // x -> x, y -> y + x*u is an algebra automorphism but not a chain map.
    S2xS3 s;
    const auto x = QElement::generator(s.g, 0);
    const auto y = QElement::generator(s.g, 1);
    const auto u = QElement::generator(s.g, 2);
    (void)u;
    const AlgebraMap<Rational> psi(s.g, {x, y, QElement::generator(s.g, 2) + QElement(s.g)});
    const auto same = transport(*s.p, psi);
    CHECK(same == *s.p);
    const AlgebraMap<Rational> mix(s.g, {x, y, QElement::generator(s.g, 2) + y});
    const auto moved = transport(*s.p, mix);
    CHECK(validate(moved).empty());
    CHECK(moved.d(2) == QElement(x * x));
    CHECK(find_weights(moved).feasible());
}
