#pragma once

// Exact arithmetic for sub-polynomial series coefficients: quotients of
// polynomials in a finite set of multiplicatively independent atoms (ln z,
// exp(1), named constants, prime radicals, opaque sub-expressions) with
// rational exponents, over the Gaussian rationals. Zero testing is decidable
// by normalization under the algebraic-independence assumption; the one
// built-in relation is exp(q) = E^q for rational q.

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pkx/errors.hpp"
#include "pkx/expr.hpp"
#include "pkx/rational.hpp"

namespace pkx {

// The reserved internal expansion variable. User expressions are rewritten
// onto it by the expansion-point transforms; the name cannot collide with a
// parsed symbol, and rendering substitutes it away before display.
inline const std::string& internal_variable_name() {
    static const std::string name = "$z";
    return name;
}
inline const ExprPtr& internal_symbol() {
    static const ExprPtr z = make_symbol(internal_variable_name());
    return z;
}
inline ExprPtr log_of_internal() {
    static const ExprPtr l = make_apply(Func::Ln, internal_symbol());
    return l;
}

// ---------------------------------------------------------------------------
// GaussianRational

struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return im.is_zero() && re == Rational(1); }
    bool is_rational() const { return im.is_zero(); }

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero())
            throw Error(ErrorKind::DivisionByZeroCoefficient, "division by zero coefficient");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussianRational pow_int(long long e) const {
        if (e == 0) return GaussianRational(Rational(1));
        GaussianRational base = *this;
        bool neg = e < 0;
        unsigned long long k = neg ? -static_cast<unsigned long long>(e) : e;
        GaussianRational acc{Rational(1)};
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return neg ? GaussianRational(Rational(1)) / acc : acc;
    }
};

// ---------------------------------------------------------------------------
// Atom

class Atom {
public:
    enum class Kind { LogVar, ExpUnit, NamedConst, Prime, Opaque };

    static Atom log_var() { return Atom(Kind::LogVar); }
    static Atom exp_unit() { return Atom(Kind::ExpUnit); }
    static Atom named(std::string name) {
        Atom a(Kind::NamedConst);
        a.name_ = std::move(name);
        return a;
    }
    static Atom prime(BigInt p) {
        Atom a(Kind::Prime);
        a.prime_ = std::move(p);
        return a;
    }
    // expr must be canonical and in terms of the internal variable (only via
    // sub-polynomial shapes such as ln $z).
    static Atom opaque(ExprPtr expr) {
        Atom a(Kind::Opaque);
        a.expr_ = std::move(expr);
        return a;
    }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const BigInt& prime_value() const { return prime_; }
    const ExprPtr& expr() const { return expr_; }

    bool contains_internal_variable() const {
        return kind_ == Kind::LogVar ||
               (kind_ == Kind::Opaque && contains_symbol(expr_, internal_variable_name()));
    }

    ExprPtr to_expr(const ExprPtr& var_replacement) const {
        switch (kind_) {
            case Kind::LogVar: return make_apply(Func::Ln, var_replacement);
            case Kind::ExpUnit: return make_apply(Func::Exp, make_rational(Rational(1)));
            case Kind::NamedConst: return make_symbol(name_);
            case Kind::Prime: return make_rational(Rational(prime_));
            case Kind::Opaque:
                return substitute(expr_, internal_variable_name(), var_replacement);
        }
        return nullptr;
    }

    friend int compare(const Atom& a, const Atom& b) {
        if (a.kind_ != b.kind_)
            return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
        switch (a.kind_) {
            case Kind::LogVar:
            case Kind::ExpUnit:
                return 0;
            case Kind::NamedConst: {
                int c = a.name_.compare(b.name_);
                return c < 0 ? -1 : (c > 0 ? 1 : 0);
            }
            case Kind::Prime:
                if (a.prime_ == b.prime_) return 0;
                return a.prime_ < b.prime_ ? -1 : 1;
            case Kind::Opaque:
                return expr_compare(a.expr_, b.expr_);
        }
        return 0;
    }
    friend bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
    friend bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

private:
    explicit Atom(Kind k) : kind_(k) {}
    Kind kind_;
    std::string name_;
    BigInt prime_;
    ExprPtr expr_;
};

// ---------------------------------------------------------------------------
// PowerProduct: sorted association atom -> nonzero rational exponent.

class PowerProduct {
public:
    PowerProduct() = default;
    PowerProduct(Atom a, Rational e) {
        if (!e.is_zero()) factors_.emplace_back(std::move(a), std::move(e));
    }

    bool empty() const { return factors_.empty(); }
    const std::vector<std::pair<Atom, Rational>>& factors() const { return factors_; }

    Rational exponent_of(const Atom& a) const {
        for (const auto& [atom, e] : factors_)
            if (atom == a) return e;
        return Rational(0);
    }

    friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
        PowerProduct out;
        auto ia = a.factors_.begin(), ib = b.factors_.begin();
        while (ia != a.factors_.end() || ib != b.factors_.end()) {
            if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
                out.factors_.push_back(*ia++);
            } else if (ia == a.factors_.end() || ib->first < ia->first) {
                out.factors_.push_back(*ib++);
            } else {
                Rational e = ia->second + ib->second;
                if (!e.is_zero()) out.factors_.emplace_back(ia->first, e);
                ++ia, ++ib;
            }
        }
        return out;
    }

    PowerProduct inverse() const { return pow(Rational(-1)); }

    PowerProduct pow(const Rational& q) const {
        PowerProduct out;
        if (q.is_zero()) return out;
        out.factors_ = factors_;
        for (auto& [atom, e] : out.factors_) e *= q;
        return out;
    }

    friend int compare(const PowerProduct& a, const PowerProduct& b) {
        std::size_t n = std::min(a.factors_.size(), b.factors_.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(a.factors_[i].first, b.factors_[i].first);
            if (c != 0) return c;
            if (a.factors_[i].second != b.factors_[i].second)
                return a.factors_[i].second < b.factors_[i].second ? -1 : 1;
        }
        if (a.factors_.size() != b.factors_.size())
            return a.factors_.size() < b.factors_.size() ? -1 : 1;
        return 0;
    }
    friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
        return compare(a, b) == 0;
    }
    friend bool operator<(const PowerProduct& a, const PowerProduct& b) {
        return compare(a, b) < 0;
    }

private:
    std::vector<std::pair<Atom, Rational>> factors_;
    friend class Coefficient;
};

// ---------------------------------------------------------------------------
// Polynomials in atoms: sorted term lists with nonzero coefficients.

struct CoeffTerm {
    GaussianRational c;
    PowerProduct mono;
};

using CoeffPoly = std::vector<CoeffTerm>;

namespace detail {

inline void poly_canonicalize(CoeffPoly& p) {
    std::sort(p.begin(), p.end(), [](const CoeffTerm& a, const CoeffTerm& b) {
        return a.mono < b.mono;
    });
    CoeffPoly out;
    for (auto& t : p) {
        if (!out.empty() && out.back().mono == t.mono) out.back().c = out.back().c + t.c;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const CoeffTerm& t) { return t.c.is_zero(); }),
              out.end());
    p = std::move(out);
}

inline CoeffPoly poly_add(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly out = a;
    out.insert(out.end(), b.begin(), b.end());
    poly_canonicalize(out);
    return out;
}

inline CoeffPoly poly_neg(CoeffPoly p) {
    for (auto& t : p) t.c = -t.c;
    return p;
}

inline CoeffPoly poly_mul(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a)
        for (const auto& tb : b)
            out.push_back({ta.c * tb.c, ta.mono * tb.mono});
    poly_canonicalize(out);
    return out;
}

inline CoeffPoly poly_one() { return {CoeffTerm{GaussianRational(Rational(1)), {}}}; }

inline CoeffPoly poly_div_mono(CoeffPoly p, const CoeffTerm& m) {
    PowerProduct inv = m.mono.inverse();
    for (auto& t : p) {
        t.c = t.c / m.c;
        t.mono = t.mono * inv;
    }
    return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coefficient

class Coefficient {
public:
    Coefficient() : num_(), den_(detail::poly_one()) {}  // zero

    static Coefficient zero() { return Coefficient(); }
    static Coefficient one() { return from_rational(Rational(1)); }
    static Coefficient from_rational(Rational r) {
        return from_gaussian(GaussianRational(std::move(r)));
    }
    static Coefficient from_gaussian(GaussianRational g) {
        Coefficient c;
        if (!g.is_zero()) c.num_ = {CoeffTerm{std::move(g), {}}};
        return c;
    }
    static Coefficient imaginary_unit() { return from_gaussian(GaussianRational::i()); }
    static Coefficient from_atom(Atom a, Rational exponent = Rational(1)) {
        Coefficient c;
        c.num_ = {CoeffTerm{GaussianRational(Rational(1)),
                            PowerProduct(std::move(a), std::move(exponent))}};
        return c;
    }
    static Coefficient log_var() { return from_atom(Atom::log_var()); }
    static Coefficient exp_unit(Rational q = Rational(1)) {
        if (q.is_zero()) return one();
        return from_atom(Atom::exp_unit(), std::move(q));
    }
    static Coefficient from_parts(CoeffPoly num, CoeffPoly den) {
        Coefficient c;
        c.num_ = std::move(num);
        c.den_ = std::move(den);
        c.normalize();
        return c;
    }

    const CoeffPoly& numerator() const { return num_; }
    const CoeffPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const {
        return num_.size() == 1 && den_.size() == 1 && num_[0].c.is_one() &&
               num_[0].mono.empty() && den_[0].c.is_one() && den_[0].mono.empty();
    }

    // Pure rational constant, if this is one.
    std::optional<Rational> as_rational() const {
        auto g = as_gaussian();
        if (g && g->is_rational()) return g->re;
        return std::nullopt;
    }
    std::optional<GaussianRational> as_gaussian() const {
        if (den_.size() != 1 || !den_[0].c.is_one() || !den_[0].mono.empty()) return std::nullopt;
        if (num_.empty()) return GaussianRational();
        if (num_.size() == 1 && num_[0].mono.empty()) return num_[0].c;
        return std::nullopt;
    }
    // Single-term numerator over denominator 1.
    std::optional<CoeffTerm> as_monomial() const {
        if (den_.size() != 1 || !den_[0].c.is_one() || !den_[0].mono.empty()) return std::nullopt;
        if (num_.size() != 1) return std::nullopt;
        return num_[0];
    }

    Coefficient operator-() const {
        Coefficient out = *this;
        out.num_ = detail::poly_neg(std::move(out.num_));
        return out;
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Coefficient out;
        if (a.den_ == b.den_) {
            out.num_ = detail::poly_add(a.num_, b.num_);
            out.den_ = a.den_;
        } else {
            out.num_ = detail::poly_add(detail::poly_mul(a.num_, b.den_),
                                        detail::poly_mul(b.num_, a.den_));
            out.den_ = detail::poly_mul(a.den_, b.den_);
        }
        out.normalize();
        return out;
    }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        Coefficient out;
        out.num_ = detail::poly_mul(a.num_, b.num_);
        out.den_ = detail::poly_mul(a.den_, b.den_);
        out.normalize();
        return out;
    }

    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZeroCoefficient, "division by zero coefficient");
        if (a.is_zero()) return zero();
        Coefficient out;
        out.num_ = detail::poly_mul(a.num_, b.den_);
        out.den_ = detail::poly_mul(a.den_, b.num_);
        out.normalize();
        return out;
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return (a - b).is_zero();
    }

    Coefficient pow_int(long long e) const {
        if (e == 0) return one();
        if (is_zero()) {
            if (e < 0)
                throw Error(ErrorKind::DivisionByZeroCoefficient, "0 raised to negative power");
            return zero();
        }
        Coefficient base = *this;
        bool neg = e < 0;
        unsigned long long k = neg ? -static_cast<unsigned long long>(e) : e;
        Coefficient acc = one();
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return neg ? one() / acc : acc;
    }

    // x^q. Integer q is always exact. Non-integer q is exact when the value is
    // a monomial whose scalar part has an expressible root (prime radicals and
    // the built-in exp(1)/atom exponent scaling); anything else becomes a
    // single opaque atom pow(x, q).
    Coefficient pow(const Rational& q) const;

    // Formal derivative with respect to L = ln z; every other atom is constant.
    Coefficient d_dL() const {
        Coefficient n = Coefficient::from_parts(num_, detail::poly_one());
        Coefficient d = Coefficient::from_parts(den_, detail::poly_one());
        Coefficient np = poly_d_dL(num_);
        Coefficient dp = poly_d_dL(den_);
        // (N/D)' = (N'D - ND')/D^2
        return (np * d - n * dp) / (d * d);
    }

    bool contains_log() const {
        auto poly_has = [](const CoeffPoly& p) {
            for (const auto& t : p)
                for (const auto& [atom, e] : t.mono.factors())
                    if (atom.contains_internal_variable()) return true;
            return false;
        };
        return poly_has(num_) || poly_has(den_);
    }

    // Highest explicit power of L in a polynomial part (0 when absent).
    static Rational poly_log_degree(const CoeffPoly& p) {
        Rational deg(0);
        for (const auto& t : p) {
            Rational e = t.mono.exponent_of(Atom::log_var());
            if (e > deg) deg = e;
        }
        return deg;
    }
    // True when any atom other than an explicit L power mentions the variable
    // (e.g. an opaque arcsin(ln z)).
    static bool poly_has_opaque_log(const CoeffPoly& p) {
        for (const auto& t : p)
            for (const auto& [atom, e] : t.mono.factors())
                if (atom.kind() == Atom::Kind::Opaque && atom.contains_internal_variable())
                    return true;
        return false;
    }

    // Bounded as |L| -> inf along rays: explicit-L degree of the numerator no
    // larger than the denominator's, and no L hiding inside opaque atoms.
    bool log_fraction_bounded() const {
        if (poly_has_opaque_log(num_) || poly_has_opaque_log(den_)) return false;
        return poly_log_degree(num_) <= poly_log_degree(den_);
    }

    // Decompose as q*L + s with rational q and s free of explicit L powers.
    std::optional<std::pair<Rational, Coefficient>> split_log_linear() const;

    ExprPtr to_expr(const ExprPtr& var_replacement) const {
        ExprPtr n = poly_to_expr(num_, var_replacement);
        if (den_.size() == 1 && den_[0].c.is_one() && den_[0].mono.empty()) return n;
        return make_product({n, make_power(poly_to_expr(den_, var_replacement), Rational(-1))});
    }

private:
    CoeffPoly num_, den_;

    static Coefficient poly_d_dL(const CoeffPoly& p) {
        static const Atom L = Atom::log_var();
        CoeffPoly out;
        for (const auto& t : p) {
            Rational e = t.mono.exponent_of(L);
            if (e.is_zero()) continue;
            CoeffTerm d;
            d.c = t.c * GaussianRational(e);
            d.mono = t.mono * PowerProduct(L, Rational(-1));
            out.push_back(std::move(d));
        }
        detail::poly_canonicalize(out);
        return Coefficient::from_parts(std::move(out), detail::poly_one());
    }

    static ExprPtr gaussian_to_expr(const GaussianRational& g) {
        std::vector<ExprPtr> parts;
        if (!g.re.is_zero()) parts.push_back(make_rational(g.re));
        if (!g.im.is_zero())
            parts.push_back(make_product({make_rational(g.im), make_imaginary_unit()}));
        if (parts.empty()) return make_rational(Rational(0));
        return make_sum(std::move(parts));
    }

    static ExprPtr poly_to_expr(const CoeffPoly& p, const ExprPtr& var_replacement) {
        if (p.empty()) return make_rational(Rational(0));
        std::vector<ExprPtr> terms;
        for (const auto& t : p) {
            std::vector<ExprPtr> factors;
            if (!(t.c.is_one() && !t.mono.empty())) factors.push_back(gaussian_to_expr(t.c));
            for (const auto& [atom, e] : t.mono.factors())
                factors.push_back(make_power(atom.to_expr(var_replacement), e));
            terms.push_back(make_product(std::move(factors)));
        }
        return make_sum(std::move(terms));
    }

    void normalize() {
        detail::poly_canonicalize(num_);
        detail::poly_canonicalize(den_);
        if (den_.empty())
            throw Error(ErrorKind::DivisionByZeroCoefficient, "zero denominator");
        if (num_.empty()) {
            den_ = detail::poly_one();
            return;
        }
        strip_common_monomial();
        if (reduce_proportional()) return;
        if (den_.size() == 1) {
            num_ = detail::poly_div_mono(std::move(num_), den_[0]);
            den_ = detail::poly_one();
            return;
        }
        // Leading denominator term gets coefficient 1.
        GaussianRational lead = den_[0].c;
        if (!lead.is_one()) {
            for (auto& t : num_) t.c = t.c / lead;
            for (auto& t : den_) t.c = t.c / lead;
        }
    }

    // Divides numerator and denominator by the per-atom minimum exponent over
    // every term (absence counts as exponent 0), so each atom touches
    // exponent zero somewhere in the fraction.
    void strip_common_monomial() {
        std::vector<Atom> universe;
        auto collect = [&](const CoeffPoly& p) {
            for (const auto& t : p)
                for (const auto& [atom, e] : t.mono.factors()) {
                    auto it = std::lower_bound(universe.begin(), universe.end(), atom);
                    if (it == universe.end() || !(*it == atom)) universe.insert(it, atom);
                }
        };
        collect(num_);
        collect(den_);
        if (universe.empty()) return;
        PowerProduct content;
        for (const auto& atom : universe) {
            std::optional<Rational> m;
            auto scan = [&](const CoeffPoly& p) {
                for (const auto& t : p) {
                    Rational e = t.mono.exponent_of(atom);
                    if (!m || e < *m) m = e;
                }
            };
            scan(num_);
            scan(den_);
            if (m && !m->is_zero()) content = content * PowerProduct(atom, *m);
        }
        if (content.empty()) return;
        PowerProduct inv = content.inverse();
        for (auto& t : num_) t.mono = t.mono * inv;
        for (auto& t : den_) t.mono = t.mono * inv;
    }

    // num == q * den structurally -> reduce to the scalar q.
    bool reduce_proportional() {
        if (num_.size() != den_.size()) return false;
        for (std::size_t i = 0; i < num_.size(); ++i)
            if (!(num_[i].mono == den_[i].mono)) return false;
        GaussianRational q = num_[0].c / den_[0].c;
        for (std::size_t i = 1; i < num_.size(); ++i)
            if (!(num_[i].c == den_[i].c * q)) return false;
        *this = from_gaussian(q);
        return true;
    }
};

inline bool coeff_is_zero(const Coefficient& c) { return c.is_zero(); }
inline bool coeff_equals(const Coefficient& a, const Coefficient& b) { return a == b; }

namespace detail {

// (p/r)^q for positive rational p/r: exact rational part plus prime-radical
// atoms for the fractional leftovers. Fails (nullopt) when the base cannot be
// factored within bounds.
inline std::optional<Coefficient> positive_rational_power(const Rational& base,
                                                          const Rational& q) {
    assert(base.is_positive());
    auto fn = factor_integer(base.numerator());
    auto fd = factor_integer(base.denominator());
    if (!fn || !fd) return std::nullopt;
    Rational scalar(1);
    PowerProduct radicals;
    auto accumulate = [&](const std::vector<std::pair<BigInt, unsigned>>& factors, int sign) {
        for (const auto& [p, e] : factors) {
            Rational ex = Rational(static_cast<long long>(e) * sign) * q;
            BigInt whole = ex.floor();
            Rational frac = ex - Rational(whole);
            if (whole != 0) scalar *= Rational(p).pow_int(static_cast<long long>(whole));
            if (!frac.is_zero()) radicals = radicals * PowerProduct(Atom::prime(p), frac);
        }
    };
    accumulate(*fn, 1);
    accumulate(*fd, -1);
    CoeffPoly num = {CoeffTerm{GaussianRational(scalar), radicals}};
    return Coefficient::from_parts(std::move(num), poly_one());
}

}  // namespace detail

inline Coefficient Coefficient::pow(const Rational& q) const {
    if (q.is_integer()) {
        BigInt n = q.numerator();
        return pow_int(static_cast<long long>(n));
    }
    if (is_zero()) {
        if (q.is_negative())
            throw Error(ErrorKind::DivisionByZeroCoefficient, "0 raised to negative power");
        return zero();
    }
    if (auto m = as_monomial()) {
        const GaussianRational& g = m->c;
        PowerProduct scaled = m->mono.pow(q);
        std::optional<Coefficient> scalar_part;
        if (g.is_one()) {
            scalar_part = one();
        } else if (g.is_rational() && g.re.is_positive()) {
            scalar_part = detail::positive_rational_power(g.re, q);
        } else if (g.is_rational() && g.re.is_negative() && q.denominator() == 2) {
            // (-p)^(a/2) = p^(a/2) * i^a
            auto mag = detail::positive_rational_power(-g.re, q);
            if (mag) {
                BigInt a = q.numerator();
                GaussianRational unit = GaussianRational::i().pow_int(static_cast<long long>(a));
                scalar_part = *mag * from_gaussian(unit);
            }
        }
        if (scalar_part) {
            CoeffPoly pp = {CoeffTerm{GaussianRational(Rational(1)), scaled}};
            return *scalar_part * Coefficient::from_parts(std::move(pp), detail::poly_one());
        }
    }
    // Opaque fallback: a single atom pow(x, q), carried in the power product
    // so that like bases combine by exponent arithmetic.
    ExprPtr base = to_expr(internal_symbol());
    return from_atom(Atom::opaque(std::move(base)), q);
}

inline std::optional<std::pair<Rational, Coefficient>> Coefficient::split_log_linear() const {
    static const Atom L = Atom::log_var();
    if (!poly_log_degree(den_).is_zero() || poly_has_opaque_log(den_)) return std::nullopt;
    CoeffPoly linear, rest;
    for (const auto& t : num_) {
        Rational e = t.mono.exponent_of(L);
        if (e.is_zero()) {
            rest.push_back(t);
        } else if (e == Rational(1)) {
            CoeffTerm stripped{t.c, t.mono * PowerProduct(L, Rational(-1))};
            linear.push_back(std::move(stripped));
        } else {
            return std::nullopt;
        }
    }
    Coefficient qc = Coefficient::from_parts(std::move(linear), den_);
    auto q = qc.as_rational();
    if (!q) return std::nullopt;
    Coefficient s = Coefficient::from_parts(std::move(rest), den_);
    return std::make_pair(*q, std::move(s));
}

// Structural real-sign detection for dominant-direction decisions: known only
// for single-term fractions of real scalars and positive atoms.
inline std::optional<int> coefficient_real_sign(const Coefficient& c) {
    if (c.is_zero()) return 0;
    auto poly_sign = [](const CoeffPoly& p) -> std::optional<int> {
        if (p.size() != 1) return std::nullopt;
        const CoeffTerm& t = p[0];
        if (!t.c.is_rational()) return std::nullopt;
        for (const auto& [atom, e] : t.mono.factors()) {
            switch (atom.kind()) {
                case Atom::Kind::ExpUnit:
                case Atom::Kind::Prime:
                    break;  // positive real
                case Atom::Kind::NamedConst:
                    if (atom.name() != "pi") return std::nullopt;
                    break;
                default:
                    return std::nullopt;
            }
        }
        return t.c.re.sign();
    };
    auto sn = poly_sign(c.numerator());
    auto sd = poly_sign(c.denominator());
    if (!sn || !sd) return std::nullopt;
    return *sn * *sd;
}

}  // namespace pkx
