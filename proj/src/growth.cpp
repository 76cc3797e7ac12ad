#include "rht/growth.hpp"

#include <stdexcept>

namespace rht {

GrowthReport growth_report(const SullivanPresentation& p, const WeightAssignment& w) {
    if (!p.formal_dimension()) throw std::invalid_argument("growth exponents need a declared formal_dimension");
    const auto violations = check_weights(p, w);
    if (!violations.empty()) throw std::invalid_argument("invalid weights: " + to_string(violations.front()));
    GrowthReport out;
    out.formal_dimension = *p.formal_dimension();
    for (const auto& g : p.generators()->generators()) {
        if (g.degree > out.formal_dimension) continue;
        const std::int64_t n = w[g.id];
        out.ratios.push_back({g.name, g.degree, n, Rational(g.degree) / Rational(n), Rational(n) / Rational(g.degree)});
    }
    if (out.ratios.empty())
        throw std::domain_error("no generator has degree <= formal dimension " + std::to_string(out.formal_dimension));
    out.growth_exponent = out.ratios.front().degree_over_weight;
    out.dil_exponent = out.ratios.front().weight_over_degree;
    for (const auto& r : out.ratios) {
        out.growth_exponent = std::min(out.growth_exponent, r.degree_over_weight);
        out.dil_exponent = std::max(out.dil_exponent, r.weight_over_degree);
    }
    out.note = "lower bound L^r conditional on realizing the rational family by genuine self-maps";
    return out;
}

Rational growth_exponent(const SullivanPresentation& p, const WeightAssignment& w) {
    return growth_report(p, w).growth_exponent;
}

Rational dil_exponent(const SullivanPresentation& p, const WeightAssignment& w) {
    return growth_report(p, w).dil_exponent;
}

json_io::Json growth_json(const GrowthReport& r) {
    json_io::Json ratios = json_io::Json::array();
    for (const auto& g : r.ratios)
        ratios.push_back({{"generator", g.name},
                          {"degree", g.degree},
                          {"weight", g.weight},
                          {"degree_over_weight", g.degree_over_weight.to_string()},
                          {"weight_over_degree", g.weight_over_degree.to_string()}});
    return {{"formal_dimension", r.formal_dimension},
            {"ratios", std::move(ratios)},
            {"growth_exponent", r.growth_exponent.to_string()},
            {"dil_exponent", r.dil_exponent.to_string()},
            {"note", r.note}};
}

}  // namespace rht
