#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchlab {

using Rational = mpq_class;

/// Exact Gaussian rational a + b i.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(const Rational& r) : re_(r) {}
    Scalar(Rational r, Rational i) : re_(std::move(r)), im_(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }
    bool is_gaussian_integer() const { return re_.get_den() == 1 && im_.get_den() == 1; }

    /// Integer value; throws if the scalar is not a real integer or does not fit.
    long to_long() const {
        if (!is_integer() || !re_.get_num().fits_slong_p())
            throw std::domain_error("scalar is not a machine integer: " + to_string());
        return re_.get_num().get_si();
    }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (o.is_real()) {
            re_ /= o.re_;
            if (sgn(im_) != 0) im_ /= o.re_;
            return *this;
        }
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for canonical sorting (real part first).
    friend bool canonical_less(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// "p/q" for reals, "a+bi" otherwise.
    std::string to_string() const {
        if (is_real()) return re_.get_str();
        std::string s;
        if (sgn(re_) != 0) s = re_.get_str();
        Rational b = im_;
        if (sgn(re_) != 0) s += sgn(b) < 0 ? "-" : "+";
        else if (sgn(b) < 0) s += "-";
        b = abs(b);
        if (b != 1) s += b.get_str();
        s += "i";
        return s;
    }

    /// Parses the output of to_string, plus plain "i" and "-i".
    static Scalar parse(const std::string& text) {
        std::string t;
        for (char c : text)
            if (c != ' ') t += c;
        if (t.empty()) throw std::invalid_argument("empty scalar");
        if (t.back() != 'i') return Scalar(parse_rational(t));
        std::string body = t.substr(0, t.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;)
            if (body[k] == '+' || body[k] == '-') {
                split = k;
                break;
            }
        std::string re_part, im_part;
        if (split == std::string::npos) {
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);
        }
        if (im_part.empty() || im_part == "+") im_part = "1";
        else if (im_part == "-") im_part = "-1";
        else if (im_part[0] == '+') im_part = im_part.substr(1);
        Rational r = re_part.empty() ? Rational(0) : parse_rational(re_part);
        return Scalar(r, parse_rational(im_part));
    }

    std::size_t hash() const {
        return std::hash<std::string>()(re_.get_str()) * 31u + std::hash<std::string>()(im_.get_str());
    }

private:
    static Rational parse_rational(const std::string& s) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        r.canonicalize();
        return r;
    }

    Rational re_{0};
    Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool canonical_less(const Scalar& a, const Scalar& b);

using IntVec = std::vector<long>;
using IntMatrix = std::vector<IntVec>;

} // namespace branchlab
