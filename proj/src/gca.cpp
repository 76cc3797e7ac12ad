#include "rht/gca.hpp"

#include <algorithm>
#include <numeric>

namespace rht {

int Monomial::word_length() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

GeneratorSet::GeneratorSet(const std::vector<std::pair<std::string, int>>& generators) {
    for (const auto& [name, degree] : generators) {
        const int id = static_cast<int>(generators_.size());
        if (!id_by_name_.emplace(name, id).second)
            throw std::invalid_argument("duplicate generator name '" + name + "'");
        generators_.push_back({id, name, degree});
    }
    id_of_rank_.resize(generators_.size());
    std::iota(id_of_rank_.begin(), id_of_rank_.end(), 0);
    std::stable_sort(id_of_rank_.begin(), id_of_rank_.end(), [this](int a, int b) {
        return generators_[static_cast<std::size_t>(a)].degree < generators_[static_cast<std::size_t>(b)].degree;
    });
    rank_of_id_.resize(generators_.size());
    degree_by_rank_.resize(generators_.size());
    for (std::size_t r = 0; r < id_of_rank_.size(); ++r) {
        rank_of_id_[static_cast<std::size_t>(id_of_rank_[r])] = static_cast<int>(r);
        degree_by_rank_[r] = generators_[static_cast<std::size_t>(id_of_rank_[r])].degree;
    }
}

const Generator& GeneratorSet::generator(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= generators_.size())
        throw std::out_of_range("unknown generator id " + std::to_string(id));
    return generators_[static_cast<std::size_t>(id)];
}

std::optional<int> GeneratorSet::find(const std::string& name) const {
    const auto it = id_by_name_.find(name);
    if (it == id_by_name_.end()) return std::nullopt;
    return it->second;
}

int GeneratorSet::id_of(const std::string& name) const {
    if (auto id = find(name)) return *id;
    throw std::out_of_range("unknown generator '" + name + "'");
}

int GeneratorSet::max_degree() const { return degree_by_rank_.empty() ? 0 : degree_by_rank_.back(); }

Monomial GeneratorSet::unit() const { return Monomial(std::vector<int>(generators_.size(), 0), 0); }

Monomial GeneratorSet::generator_monomial(int id) const {
    std::vector<int> e(generators_.size(), 0);
    e[static_cast<std::size_t>(rank_of(id))] = 1;
    return Monomial(std::move(e), generator(id).degree);
}

std::optional<SignedMonomial> GeneratorSet::monomial_from_factors(std::span<const std::pair<int, int>> factors) const {
    std::vector<int> word;
    for (const auto& [id, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        for (int k = 0; k < e; ++k) word.push_back(id);
    }
    return normalize_word(word);
}

std::optional<SignedMonomial> GeneratorSet::normalize_word(std::span<const int> word) const {
    std::vector<int> ranks;
    ranks.reserve(word.size());
    for (int id : word) {
        (void)generator(id);
        ranks.push_back(rank_of(id));
    }
    // Count inversions between odd letters; equal odd letters kill the word.
    int sign = 1;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (degree_by_rank_[static_cast<std::size_t>(ranks[i])] % 2 == 0) continue;
        for (std::size_t j = i + 1; j < ranks.size(); ++j) {
            if (degree_by_rank_[static_cast<std::size_t>(ranks[j])] % 2 == 0) continue;
            if (ranks[i] == ranks[j]) return std::nullopt;
            if (ranks[i] > ranks[j]) sign = -sign;
        }
    }
    std::vector<int> exps(generators_.size(), 0);
    int degree = 0;
    for (int r : ranks) {
        ++exps[static_cast<std::size_t>(r)];
        degree += degree_by_rank_[static_cast<std::size_t>(r)];
    }
    return SignedMonomial{sign, Monomial(std::move(exps), degree)};
}

std::optional<SignedMonomial> GeneratorSet::multiply(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<int> exps(generators_.size(), 0);
    int odd_b_below = 0;  // odd letters of b with rank < current rank
    int sign = 1;
    for (std::size_t r = 0; r < exps.size(); ++r) {
        exps[r] = ea[r] + eb[r];
        if (degree_by_rank_[r] % 2 == 0) continue;
        if (exps[r] > 1) return std::nullopt;
        if (ea[r] == 1 && odd_b_below % 2 == 1) sign = -sign;
        odd_b_below += eb[r];
    }
    return SignedMonomial{sign, Monomial(std::move(exps), a.degree() + b.degree())};
}

std::vector<Monomial> GeneratorSet::monomial_basis(int n) const {
    std::vector<Monomial> out;
    if (n < 0) return out;
    std::vector<int> exps(generators_.size(), 0);
    // Depth-first over ranks, largest exponent first: canonical order.
    auto rec = [&](auto&& self, std::size_t r, int remaining) -> void {
        if (r == exps.size()) {
            if (remaining == 0) out.emplace_back(exps, n);
            return;
        }
        const int deg = degree_by_rank_[r];
        int max_e = deg > 0 ? remaining / deg : 0;
        if (deg % 2 != 0) max_e = std::min(max_e, 1);
        for (int e = max_e; e >= 0; --e) {
            exps[r] = e;
            self(self, r + 1, remaining - e * deg);
        }
        exps[r] = 0;
    };
    rec(rec, 0, n);
    return out;
}

std::vector<std::pair<int, int>> GeneratorSet::factors(const Monomial& m) const {
    std::vector<std::pair<int, int>> out;
    const auto& e = m.exponents();
    for (std::size_t r = 0; r < e.size(); ++r)
        if (e[r] > 0) out.emplace_back(id_of_rank_[r], e[r]);
    return out;
}

std::vector<int> GeneratorSet::word(const Monomial& m) const {
    std::vector<int> out;
    for (const auto& [id, e] : factors(m))
        for (int k = 0; k < e; ++k) out.push_back(id);
    return out;
}

std::string GeneratorSet::format(const Monomial& m) const {
    const auto f = factors(m);
    if (f.empty()) return "1";
    std::string out;
    for (const auto& [id, e] : f) {
        if (!out.empty()) out += '*';
        out += generators_[static_cast<std::size_t>(id)].name;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace rht
