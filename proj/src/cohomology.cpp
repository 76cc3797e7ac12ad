#include "rht/cohomology.hpp"

#include <functional>
#include <set>

namespace rht {

namespace {

using MonomialFilter = std::function<bool(const Monomial&)>;

struct Piece {
    std::vector<Monomial> basis;
    std::map<Monomial, Index> index;
};

Piece make_piece(const GeneratorSet& gens, int n, const MonomialFilter& keep) {
    Piece piece;
    for (auto& m : gens.monomial_basis(n)) {
        if (keep && !keep(m)) continue;
        piece.index.emplace(m, static_cast<Index>(piece.basis.size()));
        piece.basis.push_back(std::move(m));
    }
    return piece;
}

QMatrix d_matrix(const Derivation<Rational>& d, const Piece& from, const Piece& to) {
    QMatrix m = QMatrix::Zero(static_cast<Index>(to.basis.size()), static_cast<Index>(from.basis.size()));
    for (std::size_t j = 0; j < from.basis.size(); ++j) {
        const auto image = d.apply(from.basis[j]);
        for (const auto& [mono, c] : image.terms()) {
            const auto it = to.index.find(mono);
            if (it == to.index.end()) throw std::logic_error("differential leaves the weight piece");
            m(it->second, static_cast<Index>(j)) = c;
        }
    }
    return m;
}

QElement element_of(const GeneratorSetPtr& gens, const Piece& piece, const QVector& v) {
    QElement e(gens);
    for (Index i = 0; i < v.size(); ++i) e.add(piece.basis[static_cast<std::size_t>(i)], v(i));
    return e;
}

struct PieceCohomology {
    Piece piece;
    QMatrix coboundaries;
    std::vector<QElement> representatives;
};

// Cohomology of the subcomplex of monomials passing `keep` in degree n.
PieceCohomology piece_cohomology(const SullivanPresentation& p, const Derivation<Rational>& d, int n,
                                 const MonomialFilter& keep) {
    const auto& gens = *p.generators();
    PieceCohomology out;
    out.piece = make_piece(gens, n, keep);
    const Index dim = static_cast<Index>(out.piece.basis.size());
    if (dim == 0) {
        out.coboundaries = QMatrix(0, 0);
        return out;
    }
    const Piece above = make_piece(gens, n + 1, keep);
    const auto cocycles = kernel_basis(d_matrix(d, out.piece, above));

    QMatrix incoming(dim, 0);
    if (n > 0) {
        const Piece below = make_piece(gens, n - 1, keep);
        if (!below.basis.empty()) incoming = d_matrix(d, below, out.piece);
    }
    // Independent coboundaries first, then cocycles independent modulo them.
    const auto b_cols = independent_columns(incoming);
    out.coboundaries = QMatrix(dim, static_cast<Index>(b_cols.size()));
    for (std::size_t k = 0; k < b_cols.size(); ++k) out.coboundaries.col(static_cast<Index>(k)) = incoming.col(b_cols[k]);

    QMatrix stacked(dim, out.coboundaries.cols() + static_cast<Index>(cocycles.size()));
    stacked.leftCols(out.coboundaries.cols()) = out.coboundaries;
    for (std::size_t k = 0; k < cocycles.size(); ++k)
        stacked.col(out.coboundaries.cols() + static_cast<Index>(k)) = cocycles[k];
    for (Index col : independent_columns(stacked)) {
        if (col < out.coboundaries.cols()) continue;
        out.representatives.push_back(element_of(p.generators(), out.piece, stacked.col(col)));
    }
    return out;
}

QVector coordinates(const DegreeCohomology& h, const std::map<Monomial, Index>& index, const QElement& e) {
    QVector v = QVector::Constant(static_cast<Index>(h.cochain_basis.size()), Rational(0));
    for (const auto& [m, c] : e.terms()) v(index.at(m)) = c;
    return v;
}

}  // namespace

std::vector<QElement> CohomologyReport::basis(int n) const {
    const auto& h = degrees.at(static_cast<std::size_t>(n));
    if (!weights) return h.representatives;
    std::vector<QElement> out;
    for (const auto& piece : h.weight_pieces)
        out.insert(out.end(), piece.representatives.begin(), piece.representatives.end());
    return out;
}

std::vector<std::int64_t> CohomologyReport::basis_weights(int n) const {
    if (!weights) throw std::logic_error("report carries no weights");
    std::vector<std::int64_t> out;
    for (const auto& piece : degrees.at(static_cast<std::size_t>(n)).weight_pieces)
        out.insert(out.end(), piece.representatives.size(), piece.weight);
    return out;
}

CohomologyReport cohomology(const SullivanPresentation& p, int n_max) {
    if (n_max < 0 || n_max > p.truncation_degree() - 1)
        throw std::out_of_range("cohomology is certified only through degree " +
                                std::to_string(p.truncation_degree() - 1) + ", requested " + std::to_string(n_max));
    const auto d = p.derivation();
    CohomologyReport report;
    for (int n = 0; n <= n_max; ++n) {
        auto pc = piece_cohomology(p, d, n, nullptr);
        DegreeCohomology h;
        h.degree = n;
        h.cochain_basis = std::move(pc.piece.basis);
        h.coboundaries = std::move(pc.coboundaries);
        h.representatives = std::move(pc.representatives);
        report.degrees.push_back(std::move(h));
    }
    return report;
}

std::vector<QElement> weight_piece_representatives(const SullivanPresentation& p, int n, const WeightAssignment& w,
                                                   std::int64_t weight) {
    const auto& gens = *p.generators();
    return piece_cohomology(p, p.derivation(), n, [&](const Monomial& m) { return w.weight(gens, m) == weight; })
        .representatives;
}

CohomologyReport weight_decomposition(const SullivanPresentation& p, CohomologyReport report,
                                      const WeightAssignment& w) {
    const auto violations = check_weights(p, w);
    if (!violations.empty()) throw std::invalid_argument("invalid weights: " + to_string(violations.front()));
    const auto& gens = *p.generators();
    const auto d = p.derivation();
    for (auto& h : report.degrees) {
        std::set<std::int64_t> weights;
        for (const auto& m : h.cochain_basis) weights.insert(w.weight(gens, m));
        h.weight_pieces.clear();
        for (std::int64_t wt : weights) {
            auto pc = piece_cohomology(p, d, h.degree, [&](const Monomial& m) { return w.weight(gens, m) == wt; });
            if (pc.representatives.empty()) continue;
            h.weight_pieces.push_back({wt, std::move(pc.representatives)});
        }
    }
    report.weights = w;
    return report;
}

LMatrix induced_action_unchecked(const CohomologyReport& report, const OneParameterFamily& lambda, int n) {
    const auto& h = report.degrees.at(static_cast<std::size_t>(n));
    const auto basis = report.basis(n);
    const Index b = static_cast<Index>(basis.size());
    if (b == 0) return LMatrix(0, 0);

    std::map<Monomial, Index> index;
    for (std::size_t i = 0; i < h.cochain_basis.size(); ++i) index.emplace(h.cochain_basis[i], static_cast<Index>(i));
    const Index dim = static_cast<Index>(h.cochain_basis.size());
    const Index nb = h.coboundaries.cols();
    QMatrix q(dim, nb + b);
    q.leftCols(nb) = h.coboundaries;
    for (Index j = 0; j < b; ++j) q.col(nb + j) = coordinates(h, index, basis[static_cast<std::size_t>(j)]);
    // Rows of the left inverse that read off the cohomology coordinates.
    const LMatrix reader = left_inverse(q).bottomRows(b).cast<Laurent>();

    LMatrix action(b, b);
    for (Index j = 0; j < b; ++j) {
        const LElement image = lambda(to_laurent(basis[static_cast<std::size_t>(j)]));
        LVector v = LVector::Constant(dim, Laurent());
        for (const auto& [m, c] : image.terms()) v(index.at(m)) = c;
        action.col(j) = reader * v;
    }
    return action;
}

LMatrix induced_action(const CohomologyReport& report, const OneParameterFamily& lambda, int n) {
    const auto violations = verify_family(lambda);
    if (!violations.empty()) throw std::invalid_argument("family fails verification: " + to_string(violations.front()));
    return induced_action_unchecked(report, lambda, n);
}

LMatrix homology_action(const CohomologyReport& report, const OneParameterFamily& lambda, int n) {
    return induced_action(report, lambda, n).transpose();
}

EigenDecomposition eigen_decompose(const LMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigen_decompose: matrix is not square");
    const Index n = a.rows();
    std::map<int, QMatrix> parts;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            for (const auto& [e, c] : a(i, j).terms()) {
                if (e.second != 0) throw std::domain_error("eigen_decompose: entry involves s");
                auto [it, inserted] = parts.try_emplace(e.first, QMatrix::Zero(n, n));
                it->second(i, j) = c;
            }
        }
    }
    QMatrix sum = QMatrix::Zero(n, n);
    for (const auto& [w, pw] : parts) sum += pw;
    if (!(sum == QMatrix::Identity(n, n))) throw std::domain_error("eigen_decompose: A(1) is not the identity");
    for (const auto& [v, pv] : parts) {
        for (const auto& [w, pw] : parts) {
            const QMatrix prod = pv * pw;
            if (!(prod == (v == w ? pw : QMatrix(QMatrix::Zero(n, n)))))
                throw std::domain_error("eigen_decompose: coefficients are not complementary idempotents");
        }
    }
    EigenDecomposition out;
    out.basis = QMatrix(n, n);
    Index col = 0;
    for (const auto& [w, pw] : parts) {
        const auto cols = independent_columns(pw);
        out.multiplicities[w] = cols.size();
        for (Index c : cols) {
            out.basis.col(col++) = pw.col(c);
            out.exponents.push_back(w);
        }
    }
    return out;
}

FlexibilityReport flexibility_report(const SullivanPresentation& p, const OneParameterFamily& lambda) {
    if (!p.formal_dimension()) throw std::invalid_argument("flexibility report needs a declared formal_dimension");
    const int dim = *p.formal_dimension();
    if (dim > p.truncation_degree() - 1)
        throw std::out_of_range("formal dimension " + std::to_string(dim) + " exceeds the certified range (N - 1 = " +
                                std::to_string(p.truncation_degree() - 1) + ")");
    const auto report = cohomology(p, dim);
    FlexibilityReport out;
    out.formal_dimension = dim;
    out.top_betti = report.betti(dim);
    if (out.top_betti != 1)
        throw std::domain_error("top Betti number b_" + std::to_string(dim) + " = " + std::to_string(out.top_betti) +
                                ", expected 1");
    const LMatrix action = induced_action(report, lambda, dim);
    const auto mono = action(0, 0).as_t_monomial();
    if (!mono || !(mono->first == Rational(1)))
        throw std::domain_error("action on the top class is " + action(0, 0).to_string() + ", not a power of t");
    out.top_weight = mono->second;
    out.conclusion = "the family acts on H^" + std::to_string(dim) + " by t^" + std::to_string(out.top_weight) +
                     ": rational self-maps of degree t^" + std::to_string(out.top_weight) +
                     " exist for every rational t; integral realization is not certified here";
    return out;
}

json_io::Json laurent_matrix_json(const LMatrix& m) {
    json_io::Json rows = json_io::Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json_io::Json row = json_io::Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json_io::Json flexibility_json(const FlexibilityReport& r) {
    return json_io::Json{{"formal_dimension", r.formal_dimension},
                         {"top_betti", r.top_betti},
                         {"top_weight", r.top_weight},
                         {"conclusion", r.conclusion}};
}

}  // namespace rht
