#pragma once

#include "rht/json_io.hpp"
#include "rht/rational.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rht {

struct GeneratorRatio {
    std::string name;
    int degree = 0;
    std::int64_t weight = 0;
    Rational degree_over_weight;
    Rational weight_over_degree;
};

struct GrowthReport {
    int formal_dimension = 0;
    std::vector<GeneratorRatio> ratios;  // generators with degree <= formal_dimension
    Rational growth_exponent;            // min degree / weight
    Rational dil_exponent;               // max weight / degree
    std::string note;
};

/// Throws std::invalid_argument without a formal dimension or on invalid
/// weights, std::domain_error when no generator has degree <= D.
GrowthReport growth_report(const SullivanPresentation& p, const WeightAssignment& w);
Rational growth_exponent(const SullivanPresentation& p, const WeightAssignment& w);
Rational dil_exponent(const SullivanPresentation& p, const WeightAssignment& w);

json_io::Json growth_json(const GrowthReport& r);

}  // namespace rht
