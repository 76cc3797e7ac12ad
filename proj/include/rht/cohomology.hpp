#pragma once

#include "rht/families.hpp"
#include "rht/json_io.hpp"
#include "rht/qlinalg.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace rht {

struct WeightPiece {
    std::int64_t weight = 0;
    std::vector<QElement> representatives;
};

struct DegreeCohomology {
    int degree = 0;
    std::vector<Monomial> cochain_basis;
    /// Independent coboundaries (columns, in cochain_basis coordinates).
    QMatrix coboundaries;
    /// Cocycle representatives of a basis of H^n, pivot-selected modulo
    /// coboundaries.
    std::vector<QElement> representatives;
    /// Filled by weight_decomposition, ascending weight.
    std::vector<WeightPiece> weight_pieces;

    [[nodiscard]] std::size_t betti() const { return representatives.size(); }
};

struct CohomologyReport {
    std::vector<DegreeCohomology> degrees;  // index n = degree n, n = 0..n_max
    std::optional<WeightAssignment> weights;

    [[nodiscard]] int max_degree() const { return static_cast<int>(degrees.size()) - 1; }
    [[nodiscard]] std::size_t betti(int n) const { return degrees.at(static_cast<std::size_t>(n)).betti(); }
    /// Weight-ordered basis when weights are present, else the plain basis.
    [[nodiscard]] std::vector<QElement> basis(int n) const;
    /// Weight of each basis vector from basis(n); requires weights.
    [[nodiscard]] std::vector<std::int64_t> basis_weights(int n) const;
};

/// H^n for n = 0..n_max.  Throws std::out_of_range unless 0 <= n_max <=
/// truncation_degree - 1.
CohomologyReport cohomology(const SullivanPresentation& p, int n_max);

/// Representatives of H^n of the subcomplex spanned by monomials of the given
/// weight.  The weights are not checked.
std::vector<QElement> weight_piece_representatives(const SullivanPresentation& p, int n, const WeightAssignment& w,
                                                   std::int64_t weight);

/// Splits every degree of the report by weight.  Throws std::invalid_argument
/// on invalid weights.
CohomologyReport weight_decomposition(const SullivanPresentation& p, CohomologyReport report,
                                      const WeightAssignment& w);

/// Matrix of the family on H^n in the report's basis: column j holds the
/// coordinates of lambda(r_j) modulo coboundaries.  Throws
/// std::invalid_argument when the family fails verify_family.
LMatrix induced_action(const CohomologyReport& report, const OneParameterFamily& lambda, int n);
/// Same, skipping the family verification (caller already verified).
LMatrix induced_action_unchecked(const CohomologyReport& report, const OneParameterFamily& lambda, int n);
/// Action on homology: the transpose of the cohomology action.
LMatrix homology_action(const CohomologyReport& report, const OneParameterFamily& lambda, int n);

/// Exact diagonalization of the matrix of a one-parameter group: writing
/// A(t) = sum_w t^w P_w, the P_w are complementary idempotents, the
/// eigenvalue t^w has multiplicity rank P_w and the columns of `basis`
/// (grouped by ascending w) are eigenvectors.
struct EigenDecomposition {
    std::map<int, std::size_t> multiplicities;
    QMatrix basis;
    std::vector<int> exponents;  // exponent of each basis column
};
/// Throws std::domain_error when A is not of that form.
EigenDecomposition eigen_decompose(const LMatrix& a);

struct FlexibilityReport {
    int formal_dimension = 0;
    std::size_t top_betti = 0;
    int top_weight = 0;
    std::string conclusion;
};

/// Reads off the action of lambda on the top class H^D.  Throws
/// std::invalid_argument without a declared formal dimension,
/// std::out_of_range if D > N - 1 and std::domain_error if b_D != 1.
FlexibilityReport flexibility_report(const SullivanPresentation& p, const OneParameterFamily& lambda);

json_io::Json laurent_matrix_json(const LMatrix& m);
json_io::Json flexibility_json(const FlexibilityReport& r);

}  // namespace rht
