#include "holant/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace holant {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

static std::string double_str(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (is_exact()) {
        const Rational& re = exact_re();
        const Rational& im = exact_im();
        if (im == 0) return rational_str(re);
        os << rational_str(re);
        os << (im < 0 ? "-" : "+");
        os << rational_str(Rational(abs(im))) << "i";
        return os.str();
    }
    auto v = approx_value();
    if (v.imag() == 0.0) return double_str(v.real());
    os << double_str(v.real()) << (std::signbit(v.imag()) ? "-" : "+") << double_str(std::fabs(v.imag()))
       << "i";
    return os.str();
}

namespace {

bool looks_rational(const std::string& s) {
    if (s.empty()) return false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw parse_error("zero denominator: '" + s + "'");
    return q;
}

double parse_double(const std::string& s) {
    size_t pos = 0;
    double d;
    try {
        d = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad scalar: '" + s + "'");
    }
    if (pos != s.size()) throw parse_error("bad scalar: '" + s + "'");
    return d;
}

// Split "RE(+|-)IMi" at the sign that separates the two components.
// Returns npos if the token has a single component.
size_t split_point(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
    }
    return std::string::npos;
}

}  // namespace

Scalar Scalar::parse(const std::string& token) {
    std::string s = token;
    if (s.empty()) throw parse_error("empty scalar");
    bool imag_only = s.back() == 'i';

    std::string re_part, im_part;
    if (imag_only && split_point(s) == std::string::npos) {
        re_part = "0";
        im_part = s.substr(0, s.size() - 1);
        if (im_part.empty() || im_part == "+" || im_part == "-") im_part += "1";
    } else if (s.back() == 'i') {
        size_t sp = split_point(s);
        re_part = s.substr(0, sp);
        im_part = s.substr(sp, s.size() - sp - 1);
        if (im_part == "+" || im_part == "-") im_part += "1";
    } else {
        re_part = s;
        im_part = "0";
    }

    if (looks_rational(re_part) && looks_rational(im_part))
        return Scalar(parse_rational(re_part), parse_rational(im_part));
    return Scalar::approx(parse_double(re_part), parse_double(im_part));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

Scalar sqrt_principal(const Scalar& z) {
    if (z.is_exact()) {
        const Rational& a = z.exact_re();
        const Rational& b = z.exact_im();
        if (b == 0) {
            if (a >= 0) {
                if (auto r = rational_sqrt(a)) return Scalar(*r);
            } else {
                if (auto r = rational_sqrt(Rational(-a))) return Scalar(Rational(0), *r);
            }
        } else {
            // w = x+yi with x^2 = (a+|z|)/2, y = b/(2x); needs |z| rational.
            Rational n2 = a * a + b * b;
            if (auto mod = rational_sqrt(n2)) {
                Rational x2 = (a + *mod) / 2;
                if (auto x = rational_sqrt(x2)) {
                    if (*x != 0) {
                        Rational y = b / (2 * (*x));
                        Scalar w(*x, y);
                        if (w * w == z) return w;
                    }
                }
            }
        }
    }
    std::complex<double> w = std::sqrt(z.to_complex_double());
    // principal branch: Re >= 0, ties broken toward Im >= 0
    if (w.real() < 0 || (w.real() == 0 && w.imag() < 0)) w = -w;
    return Scalar::approx(w);
}

Scalar pow_int(Scalar base, long e) {
    if (e < 0) return Scalar(1) / pow_int(base, -e);
    Scalar acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace holant
