#include "toeplitz/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

namespace toeplitz {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw SingularError("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexFloat& ComplexFloat::operator/=(const ComplexFloat& o) {
    if (o.is_zero()) throw SingularError("division by zero");
    v_ /= o.v_;
    check();
    return *this;
}

GaussianRational conj(const GaussianRational& x) { return GaussianRational(x.re(), -x.im()); }
ComplexFloat conj(const ComplexFloat& x) { return ComplexFloat(std::conj(x.value())); }

GaussianRational abs2(const GaussianRational& x) { return GaussianRational(x.norm()); }
ComplexFloat abs2(const ComplexFloat& x) { return ComplexFloat(std::norm(x.value()), 0.0); }

GaussianRational inv(const GaussianRational& x) { return GaussianRational(1) / x; }
ComplexFloat inv(const ComplexFloat& x) { return ComplexFloat(1.0) / x; }

double modulus(const ComplexFloat& x) { return std::abs(x.value()); }

std::complex<double> to_complex(const GaussianRational& x) {
    return {x.re().get_d(), x.im().get_d()};
}

namespace {

[[noreturn]] void malformed(std::string_view text, const char* why) {
    throw ValidationError("malformed scalar '" + std::string(text) + "': " + why);
}

// Unsigned rational literal: "p", "p/q", or a decimal "12.5", "1e-3".
mpq_class parse_unsigned(std::string_view body, std::string_view whole) {
    if (body.empty()) malformed(whole, "missing number");
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char ch : s)
                if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
            return true;
        };
        if (!digits(num) || !digits(den)) malformed(whole, "expected p/q with decimal digits");
        mpz_class p(std::string(num), 10);
        mpz_class q(std::string(den), 10);
        if (q == 0) malformed(whole, "zero denominator");
        mpq_class r(p, q);
        r.canonicalize();
        return r;
    }
    // decimal with optional fraction and exponent, converted exactly
    std::size_t pos = 0;
    std::string mantissa;
    long scale = 0;
    bool any_digit = false;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
        mantissa += body[pos++];
        any_digit = true;
    }
    if (pos < body.size() && body[pos] == '.') {
        ++pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
            mantissa += body[pos++];
            --scale;
            any_digit = true;
        }
    }
    if (!any_digit) malformed(whole, "expected digits");
    if (pos < body.size() && (body[pos] == 'e' || body[pos] == 'E')) {
        ++pos;
        bool neg = false;
        if (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) neg = body[pos++] == '-';
        long exp = 0;
        bool exp_digit = false;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
            exp = exp * 10 + (body[pos++] - '0');
            exp_digit = true;
            if (exp > 4000) malformed(whole, "exponent out of range");
        }
        if (!exp_digit) malformed(whole, "empty exponent");
        scale += neg ? -exp : exp;
    }
    if (pos != body.size()) malformed(whole, "unexpected character");
    mpz_class m(mantissa, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class r = scale < 0 ? mpq_class(m, ten_pow) : mpq_class(m * ten_pow);
    r.canonicalize();
    return r;
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) malformed(text, "empty");

    // split into signed terms; a sign right after an exponent marker stays inside
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            terms.push_back(s.substr(start, p - start));
            start = p;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) malformed(text, "too many terms");

    mpq_class re = 0, im = 0;
    bool have_re = false, have_im = false;
    for (const auto& term : terms) {
        std::string_view body(term);
        bool negative = false;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            negative = body[0] == '-';
            body.remove_prefix(1);
        }
        if (body.find_first_of("+-") == 0) malformed(text, "repeated sign");
        const auto ipos = body.find('i');
        mpq_class value;
        if (ipos == std::string_view::npos) {
            if (have_re) malformed(text, "two real parts");
            value = parse_unsigned(body, text);
            re = negative ? mpq_class(-value) : value;
            have_re = true;
            continue;
        }
        if (body.find('i', ipos + 1) != std::string_view::npos) malformed(text, "repeated 'i'");
        if (have_im) malformed(text, "two imaginary parts");
        if (ipos == 0) {
            // "i", "i/q"
            const auto rest = body.substr(1);
            if (rest.empty()) {
                value = 1;
            } else {
                if (rest[0] != '/') malformed(text, "expected i/q");
                value = parse_unsigned("1" + std::string(rest), text);
            }
        } else {
            if (ipos + 1 != body.size()) malformed(text, "'i' must be leading or trailing");
            auto coeff = body.substr(0, ipos);
            if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
            value = parse_unsigned(coeff, text);
        }
        im = negative ? mpq_class(-value) : value;
        have_im = true;
    }
    if (terms.size() == 2 && !(have_re && have_im)) malformed(text, "expected real part followed by imaginary part");
    return GaussianRational(re, im);
}

namespace {

std::string imag_text(const mpq_class& magnitude) {
    if (magnitude == 1) return "i";
    return magnitude.get_str() + "i";
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string to_string(const GaussianRational& x) {
    const int si = sgn(x.im());
    if (si == 0) return x.re().get_str();
    const mpq_class mag = si < 0 ? mpq_class(-x.im()) : x.im();
    if (sgn(x.re()) == 0) return (si < 0 ? "-" : "") + imag_text(mag);
    return x.re().get_str() + (si < 0 ? "-" : "+") + imag_text(mag);
}

std::string to_string(const ComplexFloat& x) {
    if (x.im() == 0.0) return format_double(x.re());
    const double mag = std::abs(x.im());
    const std::string im = format_double(mag) + "i";
    if (x.re() == 0.0) return (x.im() < 0 ? "-" : "") + im;
    return format_double(x.re()) + (x.im() < 0 ? "-" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const ComplexFloat& x) { return os << to_string(x); }

}  // namespace toeplitz
