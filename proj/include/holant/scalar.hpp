#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>
#include <Eigen/Core>

#include "holant/common.hpp"

namespace holant {

using Rational = mpq_class;

/// Exact Gaussian-rational value, or a complex double compared with an
/// absolute tolerance. The two backends never mix implicitly: arithmetic
/// on mixed operands throws. Conversions are explicit via to_float().
class Scalar {
public:
    struct Exact {
        Rational re, im;
    };
    struct Approx {
        std::complex<double> v;
    };

    Scalar() : rep_(Exact{0, 0}) {}
    Scalar(int n) : rep_(Exact{Rational(n), 0}) {}
    Scalar(long n) : rep_(Exact{Rational(static_cast<long>(n)), 0}) {}
    explicit Scalar(const Rational& re) : rep_(Exact{re, 0}) {}
    Scalar(const Rational& re, const Rational& im) : rep_(Exact{re, im}) {}

    static Scalar approx(std::complex<double> v) { return Scalar(Approx{v}); }
    static Scalar approx(double re, double im = 0.0) { return Scalar(Approx{{re, im}}); }
    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    bool is_exact() const { return std::holds_alternative<Exact>(rep_); }

    const Rational& exact_re() const { return exact().re; }
    const Rational& exact_im() const { return exact().im; }
    std::complex<double> approx_value() const { return std::get<Approx>(rep_).v; }

    /// Absolute tolerance used by the float backend. Global, default 1e-9.
    static double tolerance() { return tol_; }
    static void set_tolerance(double t) { tol_ = t; }

    bool is_zero() const {
        if (is_exact()) return exact().re == 0 && exact().im == 0;
        auto v = approx_value();
        return std::abs(v.real()) <= tol_ && std::abs(v.imag()) <= tol_;
    }
    bool is_real() const {
        if (is_exact()) return exact().im == 0;
        return std::abs(approx_value().imag()) <= tol_;
    }
    bool is_one() const { return *this == Scalar(1); }

    std::complex<double> to_complex_double() const {
        if (is_exact()) return {exact().re.get_d(), exact().im.get_d()};
        return approx_value();
    }
    Scalar to_float() const { return approx(to_complex_double()); }

    Scalar conj() const {
        if (is_exact()) return Scalar(exact().re, Rational(-exact().im));
        return approx(std::conj(approx_value()));
    }
    /// Squared modulus; exact backend yields an exact real scalar.
    Scalar abs2() const {
        if (is_exact()) return Scalar(Rational(exact().re * exact().re + exact().im * exact().im));
        return approx(std::norm(approx_value()));
    }

    Scalar operator-() const {
        if (is_exact()) return Scalar(Rational(-exact().re), Rational(-exact().im));
        return approx(-approx_value());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact())
            return Scalar(Rational(a.exact().re + b.exact().re), Rational(a.exact().im + b.exact().im));
        require_same_backend(a, b, "+");
        return approx(a.approx_value() + b.approx_value());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) {
            const Rational& ar = a.exact().re;
            const Rational& ai = a.exact().im;
            const Rational& br = b.exact().re;
            const Rational& bi = b.exact().im;
            return Scalar(Rational(ar * br - ai * bi), Rational(ar * bi + ai * br));
        }
        require_same_backend(a, b, "*");
        return approx(a.approx_value() * b.approx_value());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw error("scalar division by zero");
        if (a.is_exact() && b.is_exact()) {
            Rational d = b.exact().re * b.exact().re + b.exact().im * b.exact().im;
            Scalar num = a * b.conj();
            return Scalar(Rational(num.exact().re / d), Rational(num.exact().im / d));
        }
        require_same_backend(a, b, "/");
        return approx(a.approx_value() / b.approx_value());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact())
            return a.exact().re == b.exact().re && a.exact().im == b.exact().im;
        require_same_backend(a, b, "==");
        auto d = a.approx_value() - b.approx_value();
        return std::abs(d.real()) <= tol_ && std::abs(d.imag()) <= tol_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Deterministic ordering used only for tie-breaking root choices.
    static bool lex_less(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) {
            if (a.exact().re != b.exact().re) return a.exact().re < b.exact().re;
            return a.exact().im < b.exact().im;
        }
        auto av = a.to_complex_double(), bv = b.to_complex_double();
        if (av.real() != bv.real()) return av.real() < bv.real();
        return av.imag() < bv.imag();
    }

    std::string str() const;
    static Scalar parse(const std::string& token);

private:
    explicit Scalar(Approx a) : rep_(a) {}
    const Exact& exact() const {
        if (!is_exact()) throw error("float-backend scalar used where exact required");
        return std::get<Exact>(rep_);
    }
    static void require_same_backend(const Scalar& a, const Scalar& b, const char* op) {
        if (a.is_exact() != b.is_exact())
            throw error(std::string("mixed exact/float scalar backends in '") + op + "'");
    }

    std::variant<Exact, Approx> rep_;
    static inline double tol_ = 1e-9;
};

/// sqrt of a rational when it is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Principal square root. Stays exact when the root lies in Q(i),
/// otherwise falls to the float backend (inputs converted explicitly).
Scalar sqrt_principal(const Scalar& z);

Scalar pow_int(Scalar base, long e);

std::string rational_str(const Rational& q);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

}  // namespace holant

namespace Eigen {
template <>
struct NumTraits<holant::Scalar> {
    typedef holant::Scalar Real;
    typedef holant::Scalar NonInteger;
    typedef holant::Scalar Literal;
    typedef holant::Scalar Nested;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 60
    };
    static inline Real epsilon() { return holant::Scalar(0); }
    static inline Real dummy_precision() { return holant::Scalar(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
