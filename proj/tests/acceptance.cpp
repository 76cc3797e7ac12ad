#include "oracles.hpp"
#include "rht/growth.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace rht;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

Outcome weight_detection() {
    Outcome o;
    const auto start = Clock::now();
    o.require(find_weights(*test::load("s2.json")).weights->values == std::vector<std::int64_t>{1, 2}, "S2 weights");
    o.require(find_weights(*test::load("cp3.json")).weights->values == std::vector<std::int64_t>{1, 4}, "CP3 weights");
    for (const auto& name : test::formal_presentations()) {
        const auto p = test::load(name);
        const auto w = find_weights(*p);
        o.require(w.feasible() && check_weights(*p, *w.weights).empty(), name + " has no weights");
    }
    o.require(!find_weights(*test::load("infeasible-synthetic.json")).feasible(), "synthetic entry accepted");
    std::mt19937 rng(20240607);
    int agree = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = test::random_presentation(rng, 5);
        const auto solver = find_weights(p);
        const auto brute = oracle::brute_force_weights(p, 12);
        bool ok = !brute || solver.feasible();
        if (solver.feasible()) {
            ok = ok && check_weights(p, *solver.weights).empty();
            const auto& v = solver.weights->values;
            if (std::all_of(v.begin(), v.end(), [](auto n) { return n <= 12; })) ok = ok && brute.has_value();
        }
        agree += ok ? 1 : 0;
    }
    o.require(agree == 200, "oracle disagreement on " + std::to_string(200 - agree) + " presentations");
    const double t = seconds_since(start);
    o.require(t < 10.0, "too slow");
    o.detail = o.pass ? "200/200 random presentations agree, " + std::to_string(t) + " s" : o.detail;
    return o;
}

Outcome conjugated_family() {
    Outcome o;
    const auto p = test::load("s2xs3.json");
    const auto g = p->generators();
    const auto lambda = diagonal_family(p, WeightAssignment{{1, 2, 1}});
    const auto c = conjugate(lambda, parse_automorphism(p, test::read_corpus("s2xs3-phi.json")));
    const auto y = to_laurent(QElement::generator(g, 1));
    const auto u = to_laurent(QElement::generator(g, 2));
    o.require(c.image(1) == y * Laurent::t(2) + u * (Laurent::t(1) - Laurent::t(2)), "conjugated image of y");
    o.require(!(c == lambda), "conjugated family equals the diagonal one");
    o.require(verify_family(c).empty(), "group law check failed");
    if (o.pass) o.detail = "y |-> " + c.image(1).to_string();
    return o;
}

Outcome weight_decomposition_suite() {
    Outcome o;
    int checked = 0;
    for (const auto& name : test::formal_presentations()) {
        const auto p = test::load(name);
        const auto found = find_weights(*p);
        if (!found.feasible()) {
            o.require(false, name + " has no weights");
            continue;
        }
        std::vector<WeightAssignment> ws{*found.weights, found.weights->scaled(2), found.weights->scaled(3)};
        if (name == "s2xs3.json") ws.push_back(test::load_weights(*p, "s2xs3-formal-weights.json"));
        const auto base = cohomology(*p, p->truncation_degree() - 1);
        for (const auto& w : ws) {
            const auto r = weight_decomposition(*p, base, w);
            const auto lambda = diagonal_family(p, w);
            for (int n = 0; n <= r.max_degree(); ++n) {
                std::size_t total = 0;
                for (const auto& piece : r.degrees[static_cast<std::size_t>(n)].weight_pieces)
                    total += piece.representatives.size();
                o.require(total == r.betti(n), name + ": weight pieces do not sum to b_" + std::to_string(n));
                const LMatrix a = induced_action(r, lambda, n);
                const auto bw = r.basis_weights(n);
                for (Index i = 0; i < a.rows(); ++i)
                    for (Index j = 0; j < a.cols(); ++j) {
                        const Laurent want =
                            i == j ? Laurent::t(static_cast<int>(bw[static_cast<std::size_t>(i)])) : Laurent(0);
                        o.require(a(i, j) == want, name + ": action is not diag(t^w) on H^" + std::to_string(n));
                    }
            }
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " (model, weights) pairs";
    return o;
}

Outcome formal_models() {
    Outcome o;
    double worst = 0;
    for (const auto& file : {"s2-table.json", "cp2-table.json", "cp3-table.json", "s2vs4-table.json"}) {
        const auto h = test::load_table(file);
        const auto start = Clock::now();
        const int n = 10;
        const auto r = build_formal_model(h, n);
        const auto p = std::make_shared<const SullivanPresentation>(r.model);
        o.require(validate(*p).empty(), std::string(file) + ": invalid model");
        const auto coh = cohomology(*p, n - 1);
        const auto lambda = diagonal_family(p, r.weights);
        for (int k = 0; k <= n - 1; ++k) {
            o.require(coh.betti(k) == h.dimension(k), std::string(file) + ": wrong Betti number");
            const LMatrix a = induced_action(coh, lambda, k);
            for (Index i = 0; i < a.rows(); ++i)
                for (Index j = 0; j < a.cols(); ++j)
                    o.require(a(i, j) == (i == j ? Laurent::t(k) : Laurent(0)),
                              std::string(file) + ": action is not t^n on H^" + std::to_string(k));
        }
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        o.require(t < 5.0, std::string(file) + " too slow");
    }
    if (o.pass) o.detail = "4 algebras at N = 10, slowest " + std::to_string(worst) + " s";
    return o;
}

Outcome growth_arithmetic() {
    Outcome o;
    const auto s2xs3 = test::load("s2xs3.json");
    const WeightAssignment w{{1, 2, 1}};
    o.require(growth_exponent(*s2xs3, w) == Rational(3, 2), "growth exponent of S2xS3");
    o.require(dil_exponent(*s2xs3, w) == Rational(2, 3), "dil exponent of S2xS3");
    o.require(growth_exponent(*test::load("s2.json"), WeightAssignment{{1, 2}}) == Rational(2), "growth exponent of S2");
    if (o.pass) o.detail = "r = 3/2, dil = 2/3, r(S2) = 2";
    return o;
}

Outcome flexibility() {
    Outcome o;
    const auto p = test::load("s2xs3.json");
    const auto plain = flexibility_report(*p, diagonal_family(p, WeightAssignment{{1, 2, 1}}));
    const auto formal = flexibility_report(*p, diagonal_family(p, test::load_weights(*p, "s2xs3-formal-weights.json")));
    o.require(plain.formal_dimension == 5 && plain.top_weight == 2, "w_top with weights x:1 y:2 u:1");
    o.require(formal.top_weight == 5 && formal.top_weight == formal.formal_dimension, "w_top with formal weights");
    if (o.pass) o.detail = "w_top = 2, formal w_top = 5 = D";
    return o;
}

Outcome infrastructure() {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937 rng(99);
    std::size_t samples = 0;
    for (const auto& name : test::corpus_presentations()) {
        const auto p = test::load(name);
        const auto& gens = p->generators();
        const auto d = p->derivation();
        std::uniform_int_distribution<int> deg(0, 6);
        for (int k = 0; k < 1000; ++k) {
            const int da = deg(rng);
            const int db = deg(rng);
            const auto a = test::random_homogeneous<Rational>(rng, gens, da);
            const auto b = test::random_homogeneous<Rational>(rng, gens, db);
            o.require(d(d(a)).is_zero(), name + ": d^2 != 0");
            const Rational sign = da % 2 == 0 ? Rational(1) : Rational(-1);
            o.require(d(a * b) == d(a) * b + sign * (a * d(b)), name + ": Leibniz rule fails");
            ++samples;
        }
        std::vector<int> degrees;
        for (const auto& g : gens->generators()) degrees.push_back(g.degree);
        const auto counts = oracle::monomial_counts(degrees, 12);
        for (int n = 0; n <= 12; ++n)
            o.require(gens->monomial_basis(n).size() == static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]),
                      name + ": monomial count in degree " + std::to_string(n));
        const auto text = test::read_corpus(name);
        o.require(serialize(parse_presentation(text)) == text, name + ": round trip differs");
    }
    const double t = seconds_since(start);
    o.require(t < 30.0, "too slow");
    if (o.pass) o.detail = std::to_string(samples) + " samples, " + std::to_string(t) + " s";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"weight detection", weight_detection},
        {"conjugated S2xS3 family", conjugated_family},
        {"weight decomposition and diagonal action", weight_decomposition_suite},
        {"formal models act by t^n", formal_models},
        {"growth arithmetic", growth_arithmetic},
        {"flexibility on the top class", flexibility},
        {"infrastructure properties", infrastructure},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << o.detail << ")\n";
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
