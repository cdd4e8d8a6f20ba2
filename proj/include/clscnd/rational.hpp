#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace clscnd {

// Arbitrary-precision rational scalar for the exact LP flavor. Thin value
// wrapper around mpq_class that forces eager evaluation, since GMP's
// expression templates do not mix with Eigen's.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int x) : v_(x) {}
    Rational(long x) : v_(x) {}
    // Exact: every finite double is a binary fraction.
    explicit Rational(double x) { mpq_set_d(v_.get_mpq_t(), x); }
    explicit Rational(const mpq_class& v) : v_(v) {}

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Scalar-generic conversions used by the templated simplex.
inline double to_double(double x) { return x; }
inline double to_double(const Rational& r) { return r.to_double(); }

template <class Scalar>
Scalar scalar_from_double(double x);
template <>
inline double scalar_from_double<double>(double x) { return x; }
template <>
inline Rational scalar_from_double<Rational>(double x) { return Rational(x); }

}  // namespace clscnd

namespace Eigen {

template <>
struct NumTraits<clscnd::Rational> : GenericNumTraits<clscnd::Rational> {
    typedef clscnd::Rational Real;
    typedef clscnd::Rational NonInteger;
    typedef clscnd::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline Real epsilon() { return clscnd::Rational(0); }
    static inline Real dummy_precision() { return clscnd::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
