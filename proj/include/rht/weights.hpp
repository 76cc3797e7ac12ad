#pragma once

#include "rht/json_io.hpp"
#include "rht/qlinalg.hpp"
#include "rht/sullivan.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rht {

/// Positive integer weight per generator, indexed by generator id.
struct WeightAssignment {
    std::vector<std::int64_t> values;

    [[nodiscard]] std::int64_t operator[](int id) const { return values.at(static_cast<std::size_t>(id)); }
    /// Weight of a monomial: exponent-weighted sum of its factors' weights.
    [[nodiscard]] std::int64_t weight(const GeneratorSet& gens, const Monomial& m) const;
    [[nodiscard]] WeightAssignment scaled(std::int64_t k) const;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// One row per term m of each d(x): weight(m) - n_x = 0.
struct WeightConstraintSystem {
    QMatrix matrix;                   // rows x generators
    std::vector<std::string> labels;  // "y: x^2"
    std::vector<int> source;          // generator whose differential produced the row
};

WeightConstraintSystem extract_constraints(const SullivanPresentation& p);

struct WeightSearchResult {
    std::optional<WeightAssignment> weights;
    std::vector<std::size_t> witness_rows;
    std::vector<std::string> witness_labels;

    [[nodiscard]] bool feasible() const { return weights.has_value(); }
};

/// Searches for weights for the given generating set only.  A negative
/// answer means this presentation admits no weights, not that no other
/// generating set does.
WeightSearchResult find_weights(const SullivanPresentation& p);

/// Positivity and weight-homogeneity of every differential term.
std::vector<Violation> check_weights(const SullivanPresentation& p, const WeightAssignment& w);

/// "x:1 y:2"
std::string format_weights(const SullivanPresentation& p, const WeightAssignment& w);

/// {"x": 1, "y": 2}.  Accepts either that object or a report object with a
/// "weights" field.  Throws ParseError on missing or unknown generators.
WeightAssignment parse_weights(const SullivanPresentation& p, const std::string& text);
json_io::Json weights_json(const SullivanPresentation& p, const WeightAssignment& w);

/// {"feasible": bool, "weights": {gen: n}, "witness_rows": [...], "witness_labels": [...]}
json_io::Json weight_report_json(const SullivanPresentation& p, const WeightSearchResult& r);

}  // namespace rht
