#pragma once

// Exact rational arithmetic for exponents, orders and numeric coefficients.
// Thin value wrapper over boost::multiprecision::cpp_rational plus the
// handful of helpers the series code needs (gcd of rationals, exact integer
// powers, perfect roots, p/q parsing).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pkx {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}                   // NOLINT
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static std::optional<Rational> from_string(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_positive() const { return v_ > 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q = numerator() / denominator();
        if (v_ < 0 && q * denominator() != numerator()) --q;
        return q;
    }

    Rational pow_int(long long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: zero to negative power");
            return Rational(0);
        }
        BigInt n = numerator(), d = denominator();
        bool neg = e < 0;
        unsigned long long k = neg ? static_cast<unsigned long long>(-e)
                                   : static_cast<unsigned long long>(e);
        BigInt rn = boost::multiprecision::pow(n, static_cast<unsigned>(k));
        BigInt rd = boost::multiprecision::pow(d, static_cast<unsigned>(k));
        return neg ? Rational(rd, rn) : Rational(rn, rd);
    }

    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline std::optional<Rational> Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') return std::nullopt;
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

// gcd of two reduced fractions: gcd of the numerators over the lcm of the
// denominators. gcd(x, 0) = |x|.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    BigInt gn = boost::multiprecision::gcd(a.numerator(), b.numerator());
    BigInt ld = boost::multiprecision::lcm(a.denominator(), b.denominator());
    if (gn < 0) gn = -gn;
    return Rational(gn, ld);
}

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Exact n-th root of a non-negative integer, if one exists.
inline std::optional<BigInt> nth_root_exact(const BigInt& x, unsigned n) {
    if (x < 0 || n == 0) return std::nullopt;
    if (x == 0 || x == 1 || n == 1) return x;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, n) < x) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= x) lo = mid; else hi = mid - 1;
    }
    return boost::multiprecision::pow(lo, n) == x ? std::optional<BigInt>(lo) : std::nullopt;
}

// Trial-division factorization; gives up (nullopt) if a cofactor above the
// bound squared remains composite-or-unknown.
inline std::optional<std::vector<std::pair<BigInt, unsigned>>>
factor_integer(BigInt x, unsigned long long bound = 1000000) {
    if (x <= 0) return std::nullopt;
    std::vector<std::pair<BigInt, unsigned>> out;
    auto push = [&](const BigInt& p) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    };
    for (BigInt p = 2; p <= bound && p * p <= x; p += (p == 2 ? 1 : 2)) {
        while (x % p == 0) { push(p); x /= p; }
    }
    if (x == 1) return out;
    if (x <= BigInt(bound) * BigInt(bound)) { push(x); return out; }  // remaining cofactor is prime
    return std::nullopt;
}

// A rational extended with +infinity and -infinity, used for dominant
// exponents (zero series -> +inf), degrees (zero series -> -inf) and
// order-term exponents (exact <-> +inf).
class ExtRational {
public:
    ExtRational() : kind_(Kind::Finite) {}
    ExtRational(Rational r) : kind_(Kind::Finite), r_(std::move(r)) {}  // NOLINT
    ExtRational(long long n) : ExtRational(Rational(n)) {}              // NOLINT

    static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
    static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    const Rational& finite() const {
        if (!is_finite()) throw std::logic_error("ExtRational: not finite");
        return r_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.r_ == b.r_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.r_ < b.r_;
        if (a.kind_ == Kind::NegInf) return true;
        if (b.kind_ == Kind::NegInf) return false;
        return b.kind_ == Kind::PosInf;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }

    // Shift by a finite amount; infinities absorb.
    ExtRational operator+(const Rational& d) const {
        return is_finite() ? ExtRational(r_ + d) : *this;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::PosInf: return "inf";
            case Kind::NegInf: return "-inf";
            default: return r_.to_string();
        }
    }

private:
    enum class Kind { Finite, PosInf, NegInf };
    explicit ExtRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational r_;
};

inline ExtRational ext_min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }

}  // namespace pkx
