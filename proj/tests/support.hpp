#pragma once

#include "rht/cohomology.hpp"
#include "rht/families.hpp"
#include "rht/formal_model.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rht::test {

inline std::string corpus_path(const std::string& name) { return std::string(RHT_CORPUS_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_corpus(const std::string& name) { return read_file(corpus_path(name)); }

inline std::shared_ptr<const SullivanPresentation> load(const std::string& name) {
    return std::make_shared<const SullivanPresentation>(parse_presentation(read_corpus(name)));
}

inline GradedAlgebraTable load_table(const std::string& name) { return parse_algebra_table(read_corpus(name)); }

inline WeightAssignment load_weights(const SullivanPresentation& p, const std::string& name) {
    return parse_weights(p, read_corpus(name));
}

/// Presentation files of the corpus (excluding tables, weights and maps).
inline std::vector<std::string> corpus_presentations() {
    return {"s2.json",  "s3.json",  "s4.json",    "s5.json",    "s6.json",
            "s7.json",  "cp2.json", "cp3.json",   "cp4.json",   "s2xs3.json",
            "s2vs4.json", "infeasible-synthetic.json"};
}

inline std::vector<std::string> formal_presentations() {
    auto all = corpus_presentations();
    all.pop_back();
    return all;
}

/// Builds a presentation from (name, degree) and d given as text terms over
/// generator names: {gen, {{"coeff", {{name, exp}, ...}}, ...}}.
struct TermSpec {
    std::string coeff;
    std::vector<std::pair<std::string, int>> factors;
};

inline SullivanPresentation make_presentation(const std::vector<std::pair<std::string, int>>& gens,
                                              const std::vector<std::pair<std::string, std::vector<TermSpec>>>& diff,
                                              int truncation, std::optional<int> formal_dimension = std::nullopt) {
    const auto set = GeneratorSet::make(gens);
    std::vector<QElement> d(set->size(), QElement(set));
    for (const auto& [g, terms] : diff) {
        QElement e(set);
        for (const auto& t : terms) {
            std::vector<std::pair<int, int>> f;
            for (const auto& [n, k] : t.factors) f.emplace_back(set->id_of(n), k);
            const auto m = set->monomial_from_factors(f);
            const Rational c = Rational::parse(t.coeff);
            e.add(m->monomial, m->sign > 0 ? c : -c);
        }
        d[static_cast<std::size_t>(set->id_of(g))] = e;
    }
    return SullivanPresentation("test", set, std::move(d), truncation, formal_dimension);
}

inline Rational random_rational(std::mt19937& rng, int bound = 3) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng)) / Rational(den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int bound = 3) {
    Rational r;
    do r = random_rational(rng, bound);
    while (r.is_zero());
    return r;
}

template <class S>
Element<S> random_homogeneous(std::mt19937& rng, const GeneratorSetPtr& gens, int degree, int max_terms = 4) {
    Element<S> out(gens);
    const auto basis = gens->monomial_basis(degree);
    if (basis.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) out.add(basis[pick(rng)], S(random_rational(rng)));
    return out;
}

/// Random valid minimal presentation with up to max_gens generators: each
/// differential is a random combination of decomposable cocycles in the
/// earlier generators.
inline SullivanPresentation random_presentation(std::mt19937& rng, int max_gens = 5) {
    std::uniform_int_distribution<int> count(2, max_gens);
    std::uniform_int_distribution<int> low(2, 4);
    std::uniform_int_distribution<int> coin(0, 2);
    const int n = count(rng);
    // A few low generators, the rest one below the degree of a random
    // product of earlier ones so that decomposable cocycles are likely.
    std::vector<int> degrees{low(rng)};
    while (static_cast<int>(degrees.size()) < n) {
        if (coin(rng) == 0) {
            degrees.push_back(low(rng));
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
        const int d = degrees[pick(rng)] + degrees[pick(rng)] + (coin(rng) == 0 ? degrees[pick(rng)] : 0) - 1;
        degrees.push_back(d <= 9 ? d : low(rng));
    }
    std::sort(degrees.begin(), degrees.end());
    std::vector<std::pair<std::string, int>> decl;
    for (int k = 0; k < n; ++k) decl.emplace_back("g" + std::to_string(k), degrees[static_cast<std::size_t>(k)]);
    const auto gens = GeneratorSet::make(decl);

    std::vector<QElement> diff(gens->size(), QElement(gens));
    for (int k = 0; k < n; ++k) {
        const int target = degrees[static_cast<std::size_t>(k)] + 1;
        // Decomposables of degree target in generators 0..k-1.
        auto in_prefix = [&](const Monomial& m) {
            if (m.word_length() < 2) return false;
            for (const auto& [id, e] : gens->factors(m))
                if (id >= k) return false;
            return true;
        };
        std::vector<Monomial> src;
        for (const auto& m : gens->monomial_basis(target))
            if (in_prefix(m)) src.push_back(m);
        if (src.empty()) continue;
        const SullivanPresentation partial("partial", gens, diff, target + 2);
        const auto d = partial.derivation();
        std::map<Monomial, Index> row;
        std::vector<QElement> images;
        for (const auto& m : src) {
            images.push_back(d.apply(m));
            for (const auto& [mm, c] : images.back().terms()) row.emplace(mm, static_cast<Index>(row.size()));
        }
        QMatrix dm = QMatrix::Zero(static_cast<Index>(row.size()), static_cast<Index>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& [mm, c] : images[j].terms()) dm(row.at(mm), static_cast<Index>(j)) = c;
        const auto cocycles = kernel_basis(dm);
        if (cocycles.empty()) continue;
        QElement e(gens);
        std::uniform_int_distribution<int> small(-2, 2);
        for (const auto& v : cocycles) {
            const Rational c(small(rng));
            for (Index i = 0; i < v.size(); ++i) e.add(src[static_cast<std::size_t>(i)], c * v(i));
        }
        diff[static_cast<std::size_t>(k)] = e;
    }
    return SullivanPresentation("random", gens, std::move(diff), 8);
}

}  // namespace rht::test
