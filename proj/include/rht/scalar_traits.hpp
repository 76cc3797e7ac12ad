#pragma once

// Eigen integration for the exact scalar types.  Only the container and
// arithmetic parts of Eigen are used with these scalars; nothing here relies
// on norms, tolerances or decompositions.

#include "rht/laurent.hpp"
#include "rht/rational.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<rht::Rational> : GenericNumTraits<rht::Rational> {
    using Real = rht::Rational;
    using NonInteger = rht::Rational;
    using Nested = rht::Rational;
    using Literal = rht::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<rht::Laurent> : GenericNumTraits<rht::Laurent> {
    using Real = rht::Laurent;
    using NonInteger = rht::Laurent;
    using Nested = rht::Laurent;
    using Literal = rht::Laurent;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace rht {

/// Dense matrix over an exact scalar.
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using LMatrix = Matrix<Laurent>;
using LVector = Vector<Laurent>;

/// Scalar types usable in the exact linear algebra below.
template <class S>
concept ExactRing = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

template <class S>
concept ExactField = ExactRing<S> && requires(S a, S b) {
    { a / b } -> std::convertible_to<S>;
    { a.inverse() } -> std::convertible_to<S>;
};

template <ExactRing S>
bool is_zero(const Matrix<S>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <ExactRing S>
bool is_zero(const Vector<S>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

}  // namespace rht
