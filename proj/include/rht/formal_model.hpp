#pragma once

#include "rht/json_io.hpp"
#include "rht/scalar_traits.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rht {

struct AlgebraBasisElement {
    std::string name;
    int degree = 0;
};

/// A finite-dimensional graded-commutative algebra given by structure
/// constants on a homogeneous basis.
class GradedAlgebraTable {
public:
    /// A product entry products[(i, j)] is the coordinate vector of b_i * b_j.
    struct Product {
        int left = 0;
        int right = 0;
        QVector result;
    };

    /// Completes the table by graded commutativity and the unit, then checks
    /// every invariant (unit spans degree 0, nothing in degree 1, additive
    /// degrees, commutativity, associativity).  Throws std::invalid_argument.
    GradedAlgebraTable(std::string name, std::vector<AlgebraBasisElement> basis, int unit,
                       const std::vector<Product>& products, std::optional<int> formal_dimension = std::nullopt);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<AlgebraBasisElement>& basis() const { return basis_; }
    [[nodiscard]] std::size_t size() const { return basis_.size(); }
    [[nodiscard]] int unit() const { return unit_; }
    [[nodiscard]] const std::optional<int>& formal_dimension() const { return formal_dimension_; }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::size_t dimension(int n) const;
    [[nodiscard]] std::vector<int> indices_of_degree(int n) const;

    [[nodiscard]] QVector zero() const;
    [[nodiscard]] QVector basis_vector(int i) const;
    [[nodiscard]] const QVector& product(int i, int j) const;
    [[nodiscard]] QVector multiply(const QVector& a, const QVector& b) const;

    /// Human-readable form such as "2*a - b", "0" for zero.
    [[nodiscard]] std::string format(const QVector& v) const;

private:
    std::string name_;
    std::vector<AlgebraBasisElement> basis_;
    int unit_ = 0;
    std::vector<std::vector<QVector>> table_;
    std::optional<int> formal_dimension_;
};

/// Schema: {"name", "basis": [{"name", "degree"}], "unit": name,
/// "products": [{"left", "right", "result": [{"coeff", "basis"}]}],
/// optional "formal_dimension"}.  Unlisted products are zero.
GradedAlgebraTable parse_algebra_table(const std::string& text);

struct FormalModelResult {
    SullivanPresentation model;
    WeightAssignment weights;
    std::vector<int> stage;          // by generator id
    std::vector<QVector> quasi_iso;  // by generator id, table coordinates
};

/// Minimal model of (H, 0) through generator degree N with the bigrading
/// weight = degree + stage.  Throws std::invalid_argument if N < 2.
FormalModelResult build_formal_model(const GradedAlgebraTable& h, int n);

/// The algebra map from the model to H determined by quasi_iso.
QVector apply_quasi_iso(const GradedAlgebraTable& h, const FormalModelResult& r, const QElement& e);

json_io::Json formal_model_json(const GradedAlgebraTable& h, const FormalModelResult& r);

}  // namespace rht
