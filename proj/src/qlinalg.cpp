#include "rht/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rht {

namespace {

// coeffs . lambda >= rhs
struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;
};

struct NormalizedKey {
    std::vector<Rational> coeffs;
    friend bool operator<(const NormalizedKey& a, const NormalizedKey& b) { return a.coeffs < b.coeffs; }
};

// Positive rescaling that makes the coefficient vector a primitive integer
// vector.  The all-zero vector keeps only the sign of the right-hand side.
Inequality normalize(Inequality ineq) {
    mpz_class lcm = 1;
    for (const auto& c : ineq.coeffs)
        if (!c.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class g = 0;
    for (const auto& c : ineq.coeffs) {
        if (c.is_zero()) continue;
        const mpz_class scaled = c.numerator() * (lcm / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) {
        ineq.rhs = Rational(ineq.rhs.sign());
        return ineq;
    }
    const Rational factor(lcm, g);
    for (auto& c : ineq.coeffs) c *= factor;
    ineq.rhs *= factor;
    return ineq;
}

// Drops duplicates and dominated rows (same left side, weaker bound) and
// trivially true constant rows.  Returns nullopt on a constant contradiction.
std::optional<std::vector<Inequality>> prune(std::vector<Inequality> system) {
    std::map<NormalizedKey, Rational> strongest;
    for (auto& raw : system) {
        Inequality ineq = normalize(std::move(raw));
        const bool constant = std::all_of(ineq.coeffs.begin(), ineq.coeffs.end(),
                                          [](const Rational& c) { return c.is_zero(); });
        if (constant) {
            if (ineq.rhs.sign() > 0) return std::nullopt;
            continue;
        }
        auto [it, inserted] = strongest.emplace(NormalizedKey{ineq.coeffs}, ineq.rhs);
        if (!inserted && it->second < ineq.rhs) it->second = ineq.rhs;
    }
    std::vector<Inequality> out;
    out.reserve(strongest.size());
    for (auto& [key, rhs] : strongest) out.push_back({key.coeffs, rhs});
    return out;
}

// Eliminates the last variable.
std::optional<std::vector<Inequality>> eliminate_last(const std::vector<Inequality>& system) {
    if (system.empty()) return system;
    const std::size_t v = system.front().coeffs.size() - 1;
    std::vector<Inequality> lower, upper, next;
    for (const auto& ineq : system) {
        const int s = ineq.coeffs[v].sign();
        if (s > 0) {
            lower.push_back(ineq);
        } else if (s < 0) {
            upper.push_back(ineq);
        } else {
            Inequality kept = ineq;
            kept.coeffs.pop_back();
            next.push_back(std::move(kept));
        }
    }
    for (const auto& lo : lower) {
        for (const auto& up : upper) {
            const Rational wl = -up.coeffs[v];
            const Rational wu = lo.coeffs[v];
            Inequality combined;
            combined.coeffs.resize(v);
            for (std::size_t j = 0; j < v; ++j) combined.coeffs[j] = wl * lo.coeffs[j] + wu * up.coeffs[j];
            combined.rhs = wl * lo.rhs + wu * up.rhs;
            next.push_back(std::move(combined));
        }
    }
    return prune(std::move(next));
}

// Strictly positive rational vector (every entry >= 1) in ker(a), if any.
std::optional<QVector> positive_point(const QMatrix& a) {
    const Index n = a.cols();
    if (n == 0) return QVector(0);
    const auto kernel = kernel_basis(a);
    const std::size_t m = kernel.size();
    if (m == 0) return std::nullopt;

    std::vector<std::vector<Inequality>> stages(m + 1);
    {
        std::vector<Inequality> initial;
        for (Index i = 0; i < n; ++i) {
            Inequality ineq;
            ineq.coeffs.reserve(m);
            for (const auto& k : kernel) ineq.coeffs.push_back(k(i));
            ineq.rhs = Rational(1);
            initial.push_back(std::move(ineq));
        }
        auto pruned = prune(std::move(initial));
        if (!pruned) return std::nullopt;
        stages[m] = std::move(*pruned);
    }
    for (std::size_t v = m; v > 0; --v) {
        auto next = eliminate_last(stages[v]);
        if (!next) return std::nullopt;
        stages[v - 1] = std::move(*next);
    }

    std::vector<Rational> lambda(m);
    for (std::size_t v = 0; v < m; ++v) {
        std::optional<Rational> lo, hi;
        for (const auto& ineq : stages[v + 1]) {
            const Rational& a_v = ineq.coeffs[v];
            if (a_v.is_zero()) continue;
            Rational rest = ineq.rhs;
            for (std::size_t j = 0; j < v; ++j) rest -= ineq.coeffs[j] * lambda[j];
            const Rational bound = rest / a_v;
            if (a_v.sign() > 0) {
                if (!lo || *lo < bound) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        Rational value(0);
        if (lo) {
            value = Rational(lo->ceil());
        } else if (hi) {
            value = Rational(hi->floor());
            if (Rational(0) < value) value = Rational(0);
        }
        if (hi && *hi < value) value = *lo;
        lambda[v] = value;
    }

    QVector x = QVector::Constant(n, Rational(0));
    for (std::size_t j = 0; j < m; ++j) x += kernel[j] * lambda[j];
    return x;
}

std::vector<Index> nonzero_columns(const QMatrix& a) {
    std::vector<Index> cols;
    for (Index j = 0; j < a.cols(); ++j) {
        bool any = false;
        for (Index i = 0; i < a.rows() && !any; ++i) any = !a(i, j).is_zero();
        if (any) cols.push_back(j);
    }
    return cols;
}

std::optional<std::vector<std::int64_t>> integer_solution(const QMatrix& a) {
    const auto constrained = nonzero_columns(a);
    QMatrix sub(a.rows(), static_cast<Index>(constrained.size()));
    for (std::size_t k = 0; k < constrained.size(); ++k) sub.col(static_cast<Index>(k)) = a.col(constrained[k]);
    const auto point = positive_point(sub);
    if (!point) return std::nullopt;

    mpz_class lcm = 1;
    for (Index i = 0; i < point->size(); ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*point)(i).denominator().get_mpz_t());
    std::vector<mpz_class> scaled;
    mpz_class g = 0;
    for (Index i = 0; i < point->size(); ++i) {
        scaled.push_back((*point)(i).numerator() * (lcm / (*point)(i).denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
    }
    std::vector<std::int64_t> solution(static_cast<std::size_t>(a.cols()), 1);
    for (std::size_t k = 0; k < constrained.size(); ++k)
        solution[static_cast<std::size_t>(constrained[k])] = to_int64(mpz_class(scaled[k] / g));
    return solution;
}

QMatrix select_rows(const QMatrix& a, const std::vector<std::size_t>& rows) {
    QMatrix out(static_cast<Index>(rows.size()), a.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Index>(k)) = a.row(static_cast<Index>(rows[k]));
    return out;
}

}  // namespace

FeasibilityResult positive_integer_kernel(const QMatrix& a) {
    FeasibilityResult result;
    result.solution = integer_solution(a);
    if (result.solution) return result;

    // Deletion filter: the remaining rows stay infeasible and dropping any
    // one of them makes the system feasible.
    std::vector<std::size_t> rows(static_cast<std::size_t>(a.rows()));
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    for (std::size_t k = 0; k < rows.size();) {
        std::vector<std::size_t> trial = rows;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (!integer_solution(select_rows(a, trial))) {
            rows = std::move(trial);
        } else {
            ++k;
        }
    }
    result.witness_rows = std::move(rows);
    return result;
}

bool satisfies(const QMatrix& a, const std::vector<std::int64_t>& n) {
    if (static_cast<Index>(n.size()) != a.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i) {
        Rational sum(0);
        for (Index j = 0; j < a.cols(); ++j) sum += a(i, j) * Rational(static_cast<long>(n[static_cast<std::size_t>(j)]));
        if (!sum.is_zero()) return false;
    }
    return true;
}

}  // namespace rht
