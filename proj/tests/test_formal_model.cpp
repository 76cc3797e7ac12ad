#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rht;

namespace {

std::vector<std::string> names(const SullivanPresentation& p) {
    std::vector<std::string> out;
    for (const auto& g : p.generators()->generators()) out.push_back(g.name);
    return out;
}

std::size_t rank_of_images(const GradedAlgebraTable& h, const FormalModelResult& r, const std::vector<QElement>& reps) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : reps) {
        const QVector v = apply_quasi_iso(h, r, e);
        rows.emplace_back(v.data(), v.data() + v.size());
    }
    return oracle::naive_rank(std::move(rows));
}

}  // namespace

TEST_CASE("table products and graded commutativity") {
    const auto cp3 = test::load_table("cp3-table.json");
    CHECK(cp3.size() == 4);
    CHECK(cp3.max_degree() == 6);
    CHECK(cp3.dimension(4) == 1);
    CHECK(cp3.dimension(3) == 0);
    CHECK(cp3.format(cp3.product(1, 2)) == "a3");
    CHECK(cp3.format(cp3.multiply(cp3.basis_vector(1), cp3.basis_vector(1))) == "a2");
    CHECK(cp3.format(cp3.zero()) == "0");
    CHECK(cp3.multiply(cp3.basis_vector(0), cp3.basis_vector(3)) == cp3.basis_vector(3));
    const auto s2 = test::load_table("s2-table.json");
    CHECK(s2.product(1, 1) == s2.zero());
}

TEST_CASE("table validation errors") {
    const std::string head = R"({"name":"T","unit":"1","basis":[{"name":"1","degree":0},)";
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":1}],"products":[]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":2},{"name":"b","degree":3}],
        "products":[{"left":"a","right":"a","result":[{"coeff":"1","basis":"b"}]}]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":3},{"name":"b","degree":6}],
        "products":[{"left":"a","right":"a","result":[{"coeff":"1","basis":"b"}]}]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":2}],"products":[],"extra":1})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":2}],
        "products":[{"left":"a","right":"q","result":[]}]})"), ParseError);
    // a*b = c, b*c = d but a*(b*b) != (a*b)*b.
    CHECK_THROWS_AS(parse_algebra_table(head + R"({"name":"a","degree":2},{"name":"b","degree":2},{"name":"c","degree":4},
        {"name":"e","degree":6}],"products":[{"left":"a","right":"b","result":[{"coeff":"1","basis":"c"}]},
        {"left":"c","right":"b","result":[{"coeff":"1","basis":"e"}]}]})"), ParseError);
    CHECK_NOTHROW(parse_algebra_table(head + R"({"name":"a","degree":2}],"products":[]})"));
}

TEST_CASE("formal models of spheres and projective spaces") {
    const auto s2 = build_formal_model(test::load_table("s2-table.json"), 10);
    CHECK(names(s2.model) == std::vector<std::string>{"x2", "y3"});
    CHECK(s2.weights.values == std::vector<std::int64_t>{2, 4});
    CHECK(s2.stage == std::vector<int>{0, 1});
    CHECK(s2.model.d(1).to_string() == "x2^2");

    const auto cp2 = build_formal_model(test::load_table("cp2-table.json"), 10);
    CHECK(names(cp2.model) == std::vector<std::string>{"x2", "y5"});
    CHECK(cp2.weights.values == std::vector<std::int64_t>{2, 6});
    CHECK(cp2.model.d(1).to_string() == "x2^3");

    const auto cp3 = build_formal_model(test::load_table("cp3-table.json"), 10);
    CHECK(names(cp3.model) == std::vector<std::string>{"x2", "y7"});

    CHECK_THROWS_AS(build_formal_model(test::load_table("s2-table.json"), 1), std::invalid_argument);
}

TEST_CASE("wedge of spheres") {
    const auto h = test::load_table("s2vs4-table.json");
    const auto r = build_formal_model(h, 8);
    CHECK(names(r.model) ==
          std::vector<std::string>{"x2", "y3", "x4", "y5", "y6", "y7_1", "y7_2", "y8_1", "y8_2"});
    CHECK(r.model == *test::load("s2vs4.json"));
}

TEST_CASE("formal model invariants") {
    for (const auto& file : {"s2-table.json", "cp2-table.json", "cp3-table.json", "s2vs4-table.json"}) {
        const auto h = test::load_table(file);
        for (int n : {4, 7, 10}) {
            const auto r = build_formal_model(h, n);
            const auto& p = r.model;
            INFO(file << " N=" << n);
            REQUIRE(validate(p).empty());
            REQUIRE(check_weights(p, r.weights).empty());
            const auto& gens = *p.generators();
            for (const auto& g : gens.generators()) {
                CHECK(r.weights[g.id] == g.degree + r.stage[static_cast<std::size_t>(g.id)]);
                CHECK(apply_quasi_iso(h, r, p.d(g.id)) == h.zero());
                CHECK(g.degree <= n);
            }
            const auto ptr = std::make_shared<const SullivanPresentation>(p);
            const auto coh = weight_decomposition(p, cohomology(p, n - 1), r.weights);
            const auto lambda = diagonal_family(ptr, r.weights);
            for (int k = 0; k <= n - 1; ++k) {
                CHECK(coh.betti(k) == h.dimension(k));
                CHECK(oracle::naive_betti(p, n - 1)[static_cast<std::size_t>(k)] == h.dimension(k));
                CHECK(rank_of_images(h, r, coh.basis(k)) == h.dimension(k));
                const LMatrix a = induced_action(coh, lambda, k);
                for (Index i = 0; i < a.rows(); ++i) CHECK(a(i, i) == Laurent::t(k));
            }
        }
    }
}

TEST_CASE("quasi isomorphism is multiplicative") {
    const auto h = test::load_table("cp3-table.json");
    const auto r = build_formal_model(h, 9);
    const auto g = r.model.generators();
    const auto x = QElement::generator(g, 0);
    CHECK(h.format(apply_quasi_iso(h, r, x * x * x)) == "a3");
    CHECK(apply_quasi_iso(h, r, x * x * x * x) == h.zero());
}

TEST_CASE("formal model JSON") {
    const auto h = test::load_table("s2-table.json");
    const auto j = formal_model_json(h, build_formal_model(h, 6));
    CHECK(j.at("weights").at("y3") == 4);
    CHECK(j.at("stage").at("y3") == 1);
    CHECK(j.at("quasi_iso").at("x2").size() == 1);
    CHECK(j.at("quasi_iso").at("y3").empty());
    CHECK(parse_presentation(json_io::dump(j.at("model"))) == build_formal_model(h, 6).model);
}
