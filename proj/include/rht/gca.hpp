#pragma once

// Free graded-commutative algebra on finitely many generators of degree >= 2
// over an exact scalar ring.  Odd generators square to zero and anticommute;
// all signs come from the canonical generator order (degree, then id).

#include "rht/laurent.hpp"
#include "rht/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rht {

struct Generator {
    int id = 0;  // declaration order, 0-based
    std::string name;
    int degree = 0;

    [[nodiscard]] bool odd() const { return degree % 2 != 0; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// A canonical monomial: exponent per generator, indexed by canonical rank.
/// std::map<Monomial, ...> iterates in the canonical (graded word-lex) order,
/// and that is also the order used for serialization and bases.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> exponents_by_rank, int degree)
        : exponents_(std::move(exponents_by_rank)), degree_(degree) {}

    [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int word_length() const;
    [[nodiscard]] bool is_unit() const { return word_length() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents_ > b.exponents_; }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Signed monomial produced by normalizing a word or multiplying monomials.
struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

/// The ambient generator list of a free graded-commutative algebra.
class GeneratorSet {
public:
    /// (name, degree) pairs in declaration order.  Throws on duplicate names.
    explicit GeneratorSet(const std::vector<std::pair<std::string, int>>& generators);

    static std::shared_ptr<const GeneratorSet> make(const std::vector<std::pair<std::string, int>>& generators) {
        return std::make_shared<const GeneratorSet>(generators);
    }

    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
    [[nodiscard]] const Generator& generator(int id) const;
    [[nodiscard]] int rank_of(int id) const { return rank_of_id_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] int id_of_rank(int rank) const { return id_of_rank_.at(static_cast<std::size_t>(rank)); }
    [[nodiscard]] std::optional<int> find(const std::string& name) const;
    /// Throws std::out_of_range for unknown names.
    [[nodiscard]] int id_of(const std::string& name) const;
    [[nodiscard]] int max_degree() const;

    [[nodiscard]] Monomial unit() const;
    [[nodiscard]] Monomial generator_monomial(int id) const;
    /// Builds a monomial from (id, exponent) factors in any order; the
    /// factors must already commute without sign (use normalize_word for words).
    [[nodiscard]] std::optional<SignedMonomial> monomial_from_factors(std::span<const std::pair<int, int>> factors) const;

    /// Sorts a word of generator ids into canonical order.  The sign counts
    /// transpositions of two odd letters; nullopt if an odd letter repeats.
    /// Throws std::out_of_range on an unknown id.
    [[nodiscard]] std::optional<SignedMonomial> normalize_word(std::span<const int> word) const;
    /// Product of canonical monomials with its Koszul sign; nullopt if zero.
    [[nodiscard]] std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b) const;

    /// All canonical monomials of total degree exactly n, in canonical order.
    [[nodiscard]] std::vector<Monomial> monomial_basis(int n) const;

    /// (generator id, exponent) in canonical order.
    [[nodiscard]] std::vector<std::pair<int, int>> factors(const Monomial& m) const;
    /// Canonical word: each generator id repeated by its exponent.
    [[nodiscard]] std::vector<int> word(const Monomial& m) const;
    /// "x^2*y", or "1" for the unit.
    [[nodiscard]] std::string format(const Monomial& m) const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.generators_ == b.generators_; }

private:
    std::vector<Generator> generators_;
    std::vector<int> rank_of_id_;
    std::vector<int> id_of_rank_;
    std::vector<int> degree_by_rank_;
    std::unordered_map<std::string, int> id_by_name_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

inline std::string coefficient_string(const Rational& r) { return r.to_string(); }
inline bool coefficient_negative(const Rational& r) { return r.sign() < 0; }
inline bool coefficient_negative(const Laurent& l) {
    return l.terms().size() == 1 && l.terms().begin()->second.sign() < 0;
}
inline std::string coefficient_string(const Laurent& l) {
    if (l.terms().size() <= 1) return l.to_string();
    return "(" + l.to_string() + ")";
}

/// Sparse element of the free algebra.  Zero coefficients are never stored.
template <class S>
class Element {
public:
    using Scalar = S;
    using Terms = std::map<Monomial, S>;

    Element() = default;
    explicit Element(GeneratorSetPtr ambient) : ambient_(std::move(ambient)) {}

    static Element unit(GeneratorSetPtr ambient) {
        Element e(ambient);
        e.add(ambient->unit(), S(1));
        return e;
    }
    static Element generator(GeneratorSetPtr ambient, int id) {
        Element e(ambient);
        e.add(ambient->generator_monomial(id), S(1));
        return e;
    }
    static Element monomial(GeneratorSetPtr ambient, const Monomial& m, const S& c) {
        Element e(std::move(ambient));
        e.add(m, c);
        return e;
    }

    [[nodiscard]] const GeneratorSetPtr& ambient() const { return ambient_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] S coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add(const Monomial& m, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// True iff every term has degree n (the zero element qualifies).
    [[nodiscard]] bool is_homogeneous_of(int n) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != n) return false;
        return true;
    }
    /// Common degree of the terms; nullopt when zero or inhomogeneous.
    [[nodiscard]] std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        const int d = terms_.begin()->first.degree();
        return is_homogeneous_of(d) ? std::optional<int>(d) : std::nullopt;
    }

    Element& operator+=(const Element& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Element& operator*=(const S& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, x] : terms_) x = x * c;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) { return a * S(-1); }
    friend Element operator*(Element a, const S& c) { return a *= c; }
    friend Element operator*(const S& c, Element a) { return a *= c; }

    friend Element operator*(const Element& a, const Element& b) {
        const GeneratorSetPtr& amb = common_ambient(a, b);
        Element out(amb);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                if (auto p = amb->multiply(ma, mb)) out.add(p->monomial, p->sign > 0 ? ca * cb : -(ca * cb));
        return out;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    /// Applies f to every coefficient, producing an element over another ring.
    template <class F>
    [[nodiscard]] auto map_coefficients(F&& f) const -> Element<decltype(f(std::declval<const S&>()))> {
        using T = decltype(f(std::declval<const S&>()));
        Element<T> out(ambient_);
        for (const auto& [m, c] : terms_) out.add(m, f(c));
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, coeff] : terms_) {
            const bool negative = coefficient_negative(coeff);
            const S c = negative ? S(-coeff) : coeff;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            const std::string mono = ambient_->format(m);
            if (m.is_unit()) {
                out += coefficient_string(c);
            } else if (c == S(1)) {
                out += mono;
            } else {
                out += coefficient_string(c) + "*" + mono;
            }
        }
        return out;
    }

private:
    static const GeneratorSetPtr& common_ambient(const Element& a, const Element& b) {
        if (!a.ambient_) return b.ambient_;
        if (!b.ambient_ || a.ambient_ == b.ambient_ || *a.ambient_ == *b.ambient_) return a.ambient_;
        throw std::invalid_argument("elements live in different generator sets");
    }
    void adopt(const Element& o) { ambient_ = common_ambient(*this, o); }

    GeneratorSetPtr ambient_;
    Terms terms_;
};

using QElement = Element<Rational>;
using LElement = Element<Laurent>;

inline LElement to_laurent(const QElement& e) {
    return e.map_coefficients([](const Rational& c) { return Laurent(c); });
}

/// Leibniz extension of generator images to a degree +1 derivation.
template <class S>
class Derivation {
public:
    /// images[id] = d(generator id); each must be homogeneous of degree
    /// deg + 1.  Throws std::invalid_argument otherwise.
    Derivation(GeneratorSetPtr ambient, std::vector<Element<S>> images)
        : ambient_(std::move(ambient)), images_(std::move(images)) {
        if (images_.size() != ambient_->size()) throw std::invalid_argument("derivation: wrong number of images");
        for (const auto& g : ambient_->generators()) {
            auto& img = images_[static_cast<std::size_t>(g.id)];
            if (!img.ambient()) img = Element<S>(ambient_);
            if (!img.is_homogeneous_of(g.degree + 1))
                throw std::invalid_argument("derivation image of '" + g.name + "' is not homogeneous of degree " +
                                            std::to_string(g.degree + 1));
        }
    }

    [[nodiscard]] const GeneratorSetPtr& ambient() const { return ambient_; }
    [[nodiscard]] const Element<S>& image(int id) const { return images_.at(static_cast<std::size_t>(id)); }

    [[nodiscard]] Element<S> apply(const Monomial& m) const {
        std::map<Monomial, Element<S>> memo;
        return apply_memo(m, memo);
    }

    [[nodiscard]] Element<S> operator()(const Element<S>& x) const {
        Element<S> out(ambient_);
        std::map<Monomial, Element<S>> memo;
        for (const auto& [m, c] : x.terms()) out += apply_memo(m, memo) * c;
        return out;
    }

private:
    // d(f * rest) = d(f) * rest + (-1)^{deg f} f * d(rest), f the first letter.
    Element<S> apply_memo(const Monomial& m, std::map<Monomial, Element<S>>& memo) const {
        if (m.is_unit()) return Element<S>(ambient_);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        const auto& exps = m.exponents();
        std::size_t first = 0;
        while (exps[first] == 0) ++first;
        const int id = ambient_->id_of_rank(static_cast<int>(first));
        std::vector<int> rest_exps = exps;
        --rest_exps[first];
        const Monomial rest(rest_exps, m.degree() - ambient_->generator(id).degree);
        const Element<S> letter = Element<S>::generator(ambient_, id);
        const Element<S> rest_e = Element<S>::monomial(ambient_, rest, S(1));
        Element<S> out = image(id) * rest_e;
        Element<S> tail = letter * apply_memo(rest, memo);
        if (ambient_->generator(id).odd()) tail *= S(-1);
        out += tail;
        memo.emplace(m, out);
        return out;
    }

    GeneratorSetPtr ambient_;
    std::vector<Element<S>> images_;
};

/// Multiplicative linear extension of generator images (degree 0 map).  The
/// target may be a different generator set.
template <class S>
class AlgebraMap {
public:
    AlgebraMap(GeneratorSetPtr source, GeneratorSetPtr target, std::vector<Element<S>> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_->size()) throw std::invalid_argument("algebra map: wrong number of images");
        for (const auto& g : source_->generators()) {
            auto& img = images_[static_cast<std::size_t>(g.id)];
            if (!img.ambient()) img = Element<S>(target_);
            if (!img.is_homogeneous_of(g.degree))
                throw std::invalid_argument("algebra map image of '" + g.name + "' is not homogeneous of degree " +
                                            std::to_string(g.degree));
        }
    }
    AlgebraMap(GeneratorSetPtr ambient, std::vector<Element<S>> images)
        : AlgebraMap(ambient, ambient, std::move(images)) {}

    static AlgebraMap identity(GeneratorSetPtr ambient) {
        std::vector<Element<S>> images;
        for (const auto& g : ambient->generators()) images.push_back(Element<S>::generator(ambient, g.id));
        return AlgebraMap(ambient, std::move(images));
    }

    [[nodiscard]] const GeneratorSetPtr& source() const { return source_; }
    [[nodiscard]] const GeneratorSetPtr& target() const { return target_; }
    [[nodiscard]] const Element<S>& image(int id) const { return images_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] const std::vector<Element<S>>& images() const { return images_; }

    [[nodiscard]] Element<S> apply(const Monomial& m) const {
        Element<S> out = Element<S>::unit(target_);
        for (const auto& [id, e] : source_->factors(m))
            for (int k = 0; k < e; ++k) out = out * image(id);
        return out;
    }

    [[nodiscard]] Element<S> operator()(const Element<S>& x) const {
        Element<S> out(target_);
        for (const auto& [m, c] : x.terms()) out += apply(m) * c;
        return out;
    }

    /// (this o other): first other, then this.
    [[nodiscard]] AlgebraMap after(const AlgebraMap& other) const {
        std::vector<Element<S>> images;
        for (const auto& img : other.images_) images.push_back((*this)(img));
        return AlgebraMap(other.source_, target_, std::move(images));
    }

    friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.images_ == b.images_; }

private:
    GeneratorSetPtr source_;
    GeneratorSetPtr target_;
    std::vector<Element<S>> images_;
};

/// Derivation extending the given assignment (generator id -> image);
/// generators not listed map to zero.
template <class S>
Derivation<S> extend_derivation(const GeneratorSetPtr& ambient, const std::map<int, Element<S>>& assignment) {
    std::vector<Element<S>> images(ambient->size(), Element<S>(ambient));
    for (const auto& [id, img] : assignment) images.at(static_cast<std::size_t>(id)) = img;
    return Derivation<S>(ambient, std::move(images));
}

/// Algebra endomorphism extending the given assignment; generators not
/// listed are fixed.
template <class S>
AlgebraMap<S> extend_algebra_map(const GeneratorSetPtr& ambient, const std::map<int, Element<S>>& assignment) {
    std::vector<Element<S>> images;
    for (const auto& g : ambient->generators()) {
        const auto it = assignment.find(g.id);
        images.push_back(it == assignment.end() ? Element<S>::generator(ambient, g.id) : it->second);
    }
    return AlgebraMap<S>(ambient, std::move(images));
}

}  // namespace rht
