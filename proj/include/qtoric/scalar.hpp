#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <iosfwd>
#include <string>

#include "qtoric/errors.hpp"

namespace qtoric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// The coordinate field of a computation: plain Q (d == 0) or the real
// quadratic extension Q(sqrt d) for a squarefree d >= 2.
struct FieldSpec {
    long long d = 0; // 0 marks the rational field

    bool isRational() const { return d == 0; }
    void validate() const;

    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// An exact element a + b*sqrt(d) of Q or Q(sqrt d).
//
// Canonical form: fractions are kept reduced with positive denominators by
// the underlying mpq representation, and the field tag collapses to
// rational (d = 0) whenever the sqrt part vanishes.  Equality is therefore
// structural.  Arithmetic promotes rationals into whichever quadratic field
// the other operand lives in; combining two distinct quadratic fields is an
// error.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : a_(v) {}
    Scalar(const Int& v) : a_(v) {}
    Scalar(const Rat& a) : a_(a) {}
    Scalar(const Rat& a, const Rat& b, const FieldSpec& field);

    const Rat& rationalPart() const { return a_; }
    const Rat& sqrtPart() const { return b_; }
    long long fieldD() const { return d_; }

    bool isZero() const { return a_ == 0 && b_ == 0; }
    bool isRationalValue() const { return b_ == 0; }
    bool isIntegerValue() const { return b_ == 0 && denominator(a_) == 1; }

    // Exact sign in {-1, 0, +1}, no floating point involved.
    int sign() const;

    // Exact floor; mod1() is the canonical representative in [0,1).
    Int floorInt() const;
    Scalar mod1() const;

    // Decimal approximation for display only.
    double approx() const;

    // exactnum grammar, e.g. "3", "-1/2", "1+2/3s".
    std::string str() const;
    static Scalar parse(const std::string& text, const FieldSpec& field);

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

private:
    // Field tags, 0 = rational.  Invariant: d_ == 0 iff b_ == 0.
    static long long joinFields(const Scalar& x, const Scalar& y);
    void normalizeTag() {
        if (b_ == 0) d_ = 0;
    }

    Rat a_;
    Rat b_;
    long long d_ = 0;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Coordinates of x in the Q-basis {1, sqrt d}; injective and Q-linear.
inline std::pair<Rat, Rat> rationalEmbedding(const Scalar& x) {
    return {x.rationalPart(), x.sqrtPart()};
}

using MatS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VecS = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace qtoric

namespace Eigen {

template <>
struct NumTraits<qtoric::Scalar> : GenericNumTraits<qtoric::Scalar> {
    using Real = qtoric::Scalar;
    using NonInteger = qtoric::Scalar;
    using Nested = qtoric::Scalar;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 100,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen
