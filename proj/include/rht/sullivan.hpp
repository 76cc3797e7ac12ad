#pragma once

#include "rht/gca.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rht {

/// A truncated Sullivan minimal algebra (Lambda V, d) given by generators and
/// the differential on each generator.
class SullivanPresentation {
public:
    SullivanPresentation() = default;
    /// differential[id] = d(generator id); missing trailing entries are zero.
    SullivanPresentation(std::string name, GeneratorSetPtr generators, std::vector<QElement> differential,
                         int truncation_degree, std::optional<int> formal_dimension = std::nullopt);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const GeneratorSetPtr& generators() const { return generators_; }
    [[nodiscard]] std::size_t size() const { return generators_->size(); }
    [[nodiscard]] const QElement& d(int id) const { return differential_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] const std::vector<QElement>& differential() const { return differential_; }
    [[nodiscard]] int truncation_degree() const { return truncation_degree_; }
    [[nodiscard]] const std::optional<int>& formal_dimension() const { return formal_dimension_; }

    /// The Leibniz extension of d.  Throws if some d(x) is inhomogeneous of
    /// the wrong degree (validate reports this as a violation instead).
    [[nodiscard]] Derivation<Rational> derivation() const;
    [[nodiscard]] Derivation<Laurent> laurent_derivation() const;

    friend bool operator==(const SullivanPresentation& a, const SullivanPresentation& b);

private:
    std::string name_;
    GeneratorSetPtr generators_;
    std::vector<QElement> differential_;
    int truncation_degree_ = 2;
    std::optional<int> formal_dimension_;
};

struct Violation {
    enum class Kind { Degree, Homogeneity, Minimality, SquareZero, Truncation, Weight, ChainMap, Identity, GroupLaw };
    Kind kind;
    std::string generator;  // offending generator name, may be empty
    int degree = 0;         // offending degree where meaningful
    std::string message;
};

std::string to_string(Violation::Kind kind);
std::string to_string(const Violation& v);

/// Checks degrees >= 2, homogeneity of each d(x), decomposability of each
/// d(x), d(d(x)) = 0 and truncation_degree >= 2.
std::vector<Violation> validate(const SullivanPresentation& p);

/// Schema or consistency error in an input document; `path` is a JSON
/// pointer into the offending document (or a byte offset for syntax errors).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    std::string path_;
};

SullivanPresentation parse_presentation(const std::string& text);
/// Canonical JSON: sorted keys, generators in declaration order, terms in
/// canonical monomial order, coefficients as "p/q" strings.
std::string serialize(const SullivanPresentation& p);

}  // namespace rht
