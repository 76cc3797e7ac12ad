#pragma once

#include "rht/json_io.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rht {

/// A family lambda_t of DGA endomorphisms whose generator images have
/// Laurent coefficients in t.
class OneParameterFamily {
public:
    OneParameterFamily(std::shared_ptr<const SullivanPresentation> base, std::vector<LElement> images);

    [[nodiscard]] const SullivanPresentation& base() const { return *base_; }
    [[nodiscard]] const std::shared_ptr<const SullivanPresentation>& base_ptr() const { return base_; }
    [[nodiscard]] const LElement& image(int id) const { return map_.image(id); }
    [[nodiscard]] const AlgebraMap<Laurent>& map() const { return map_; }
    [[nodiscard]] LElement operator()(const LElement& x) const { return map_(x); }

    friend bool operator==(const OneParameterFamily& a, const OneParameterFamily& b) { return a.map_ == b.map_; }

private:
    std::shared_ptr<const SullivanPresentation> base_;
    AlgebraMap<Laurent> map_;
};

/// A rational DGA automorphism together with its inverse.
class ModelAutomorphism {
public:
    /// Checks the chain map condition and computes the inverse.  Throws
    /// std::invalid_argument if not a chain map, std::domain_error if the
    /// linear part is singular in some degree.
    ModelAutomorphism(std::shared_ptr<const SullivanPresentation> base, std::vector<QElement> images);

    static ModelAutomorphism identity(std::shared_ptr<const SullivanPresentation> base);

    [[nodiscard]] const SullivanPresentation& base() const { return *base_; }
    [[nodiscard]] const std::shared_ptr<const SullivanPresentation>& base_ptr() const { return base_; }
    [[nodiscard]] const AlgebraMap<Rational>& map() const { return map_; }
    [[nodiscard]] const AlgebraMap<Rational>& inverse_map() const { return inverse_; }

private:
    ModelAutomorphism(std::shared_ptr<const SullivanPresentation> base, AlgebraMap<Rational> map,
                      AlgebraMap<Rational> inverse);

    friend ModelAutomorphism invert_automorphism(const ModelAutomorphism& phi);

    std::shared_ptr<const SullivanPresentation> base_;
    AlgebraMap<Rational> map_;
    AlgebraMap<Rational> inverse_;
};

/// Inverse of a degree-preserving algebra endomorphism of the free algebra
/// whose linear part is invertible in each degree.  Built degree by degree:
/// invert the linear part, then cancel the decomposable part using the
/// inverse already constructed on lower degrees.
AlgebraMap<Rational> invert_algebra_map(const AlgebraMap<Rational>& phi);

/// Coefficients of single-generator monomials of phi in degree k, as the
/// matrix M with phi(x_j) = sum_i M(j, i) x_i + decomposables.
QMatrix linear_part(const AlgebraMap<Rational>& phi, int degree);

/// Chain-map check phi(d x) = d(phi x) on every generator.
std::vector<Violation> check_chain_map(const SullivanPresentation& p, const AlgebraMap<Rational>& phi);

OneParameterFamily diagonal_family(std::shared_ptr<const SullivanPresentation> p, const WeightAssignment& w);
ModelAutomorphism invert_automorphism(const ModelAutomorphism& phi);
/// phi^{-1} o lambda_t o phi.
OneParameterFamily conjugate(const OneParameterFamily& lambda, const ModelAutomorphism& phi);
/// (lambda o mu)_t = lambda_t o mu_t.
OneParameterFamily compose(const OneParameterFamily& lambda, const OneParameterFamily& mu);

/// Symbolic checks: homogeneous images with no s, chain map, identity at
/// t = 1, and lambda_s o lambda_t = lambda_{st}.
std::vector<Violation> verify_family(const OneParameterFamily& lambda);

struct EvaluatedFamily {
    AlgebraMap<Rational> map;
    bool invertible = true;  // false at t = 0
};

/// Substitutes t = t0.  Throws std::domain_error when t0 = 0 meets a negative
/// power of t.
EvaluatedFamily evaluate(const OneParameterFamily& lambda, const Rational& t0);

/// Change of generating set: the presentation with differential
/// phi^{-1} o d o phi, isomorphic to p via phi.
SullivanPresentation transport(const SullivanPresentation& p, const AlgebraMap<Rational>& phi);

/// Family file: {gen: [{"coeff": "t^2", "monomial": [...]}, ...]} covering
/// every generator.
OneParameterFamily parse_family(std::shared_ptr<const SullivanPresentation> p, const std::string& text);
json_io::Json family_json(const OneParameterFamily& lambda);
/// Automorphism file: same schema with rational coefficients; generators
/// not listed are fixed.  No chain map condition.
AlgebraMap<Rational> parse_algebra_map(const GeneratorSetPtr& ambient, const std::string& text);
/// Automorphism file: same schema with rational coefficients; generators
/// not listed are fixed.
ModelAutomorphism parse_automorphism(std::shared_ptr<const SullivanPresentation> p, const std::string& text);
json_io::Json map_json(const AlgebraMap<Rational>& phi);

}  // namespace rht
