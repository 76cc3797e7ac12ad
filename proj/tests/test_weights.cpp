#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rht;

namespace {

WeightAssignment weights_of(std::vector<std::int64_t> v) { return WeightAssignment{std::move(v)}; }

}  // namespace

TEST_CASE("constraint extraction") {
    const auto s2 = test::load("s2.json");
    const auto sys = extract_constraints(*s2);
    REQUIRE(sys.matrix.rows() == 1);
    CHECK(sys.matrix(0, 0) == Rational(2));
    CHECK(sys.matrix(0, 1) == Rational(-1));
    CHECK(sys.labels.front() == "y: x^2");
    CHECK(extract_constraints(*test::load("s3.json")).matrix.rows() == 0);

    const auto p = test::make_presentation({{"x", 2}, {"y", 4}, {"z", 5}},
                                           {{"z", {{"1", {{"x", 1}, {"y", 1}}}, {"1", {{"x", 3}}}}}}, 8);
    const auto two = extract_constraints(p);
    REQUIRE(two.matrix.rows() == 2);
    std::set<std::vector<int>> rows;
    for (Index i = 0; i < 2; ++i)
        rows.insert({to_int64(two.matrix(i, 0).numerator()) > 0 ? static_cast<int>(to_int64(two.matrix(i, 0).numerator())) : 0,
                     static_cast<int>(to_int64(two.matrix(i, 1).numerator())),
                     static_cast<int>(to_int64(two.matrix(i, 2).numerator()))});
    CHECK(rows == std::set<std::vector<int>>{{1, 1, -1}, {3, 0, -1}});
}

TEST_CASE("find weights examples") {
    CHECK(find_weights(*test::load("s2.json")).weights->values == std::vector<std::int64_t>{1, 2});
    CHECK(find_weights(*test::load("cp3.json")).weights->values == std::vector<std::int64_t>{1, 4});
    const auto bad = find_weights(*test::load("infeasible-synthetic.json"));
    CHECK_FALSE(bad.feasible());
    CHECK(bad.witness_labels.size() == 5);
}

TEST_CASE("check weights examples") {
    const auto s2 = test::load("s2.json");
    CHECK(check_weights(*s2, weights_of({1, 2})).empty());
    const auto vs = check_weights(*s2, weights_of({1, 3}));
    REQUIRE(vs.size() == 1);
    CHECK(vs.front().generator == "y");
    CHECK(check_weights(*test::load("s2xs3.json"), weights_of({1, 2, 7})).empty());
    CHECK_FALSE(check_weights(*s2, weights_of({0, 0})).empty());
    CHECK_FALSE(check_weights(*s2, weights_of({1})).empty());
}

TEST_CASE("unconstrained generators get weight one") {
    const auto w = find_weights(*test::load("s2xs3.json"));
    CHECK(w.weights->values == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("valid weights stay valid under scaling") {
    for (const auto& name : test::formal_presentations()) {
        const auto p = test::load(name);
        const auto w = find_weights(*p);
        REQUIRE(w.weights);
        for (std::int64_t k = 1; k <= 5; ++k) CHECK(check_weights(*p, w.weights->scaled(k)).empty());
        CHECK(find_weights(*p).weights->values == w.weights->values);
    }
}

TEST_CASE("diagonal family of checked weights is a chain map") {
    for (const auto& name : test::formal_presentations()) {
        const auto p = test::load(name);
        const auto lambda = diagonal_family(p, *find_weights(*p).weights);
        CHECK_MESSAGE(verify_family(lambda).empty(), name);
    }
}

TEST_CASE("weight files") {
    const auto p = test::load("s2xs3.json");
    CHECK(test::load_weights(*p, "s2xs3-weights.json").values == std::vector<std::int64_t>{1, 2, 1});
    CHECK(parse_weights(*p, R"({"weights":{"x":2,"y":4,"u":3}})").values == std::vector<std::int64_t>{2, 4, 3});
    CHECK_THROWS_AS(parse_weights(*p, R"({"x":1,"y":2})"), ParseError);
    CHECK_THROWS_AS(parse_weights(*p, R"({"x":1,"y":2,"u":1,"q":3})"), ParseError);
    CHECK(format_weights(*p, weights_of({1, 2, 1})) == "x:1 y:2 u:1");
}

TEST_CASE("solver agrees with brute force on random presentations") {
    std::mt19937 rng(31337);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = test::random_presentation(rng, 5);
        REQUIRE(validate(p).empty());
        const auto solver = find_weights(p);
        const auto brute = oracle::brute_force_weights(p, 12);
        if (brute) CHECK(solver.feasible());
        if (!solver.feasible()) {
            ++infeasible;
            CHECK_FALSE(brute);
            continue;
        }
        ++feasible;
        CHECK(check_weights(p, *solver.weights).empty());
        const auto& v = solver.weights->values;
        if (std::all_of(v.begin(), v.end(), [](auto n) { return n <= 12; })) CHECK(brute);
    }
    MESSAGE("feasible " << feasible << ", infeasible " << infeasible);
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}
