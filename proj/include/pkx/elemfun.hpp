#pragma once

// Elementary functions of a series argument, each to an absolute little-o
// target k. exp handles the interaction between logarithmic degree-0
// coefficients and the exponent grid (exp of q*ln z contributes z^q); the
// trig/hyperbolic family uses angle-sum splits around the degree-0 term; the
// inverse functions classify regular points, branch points and infinite
// arguments, expanding branch cases through exact ln/sqrt identities.

#include <optional>
#include <utility>
#include <vector>

#include "pkx/arith.hpp"
#include "pkx/errors.hpp"
#include "pkx/eval.hpp"

namespace pkx {

namespace detail {

// Splits u (dominant exponent >= 0) into its degree-0 coefficient and the
// positive-exponent remainder.
inline std::pair<Coefficient, SeriesRep> split_degree0(const SeriesRep& u) {
    Coefficient t0 = Coefficient::zero();
    std::vector<std::pair<Rational, Coefficient>> rest;
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        Rational e = u.exponent_at(j);
        if (e.is_zero()) t0 = u.coeffs()[j];
        else rest.emplace_back(std::move(e), u.coeffs()[j]);
    }
    return {std::move(t0), series_from_terms(std::move(rest), u.order())};
}

inline ComposeSpec exp_spec() {
    return {[](unsigned j) {
                Rational f(1);
                for (unsigned i = 2; i <= j; ++i) f *= Rational(i);
                return Coefficient::from_rational(Rational(1) / f);
            },
            [](unsigned j) { return std::optional<unsigned>(j); },
            true};
}

inline ComposeSpec log1p_spec() {
    return {[](unsigned j) {
                if (j == 0) return Coefficient::zero();
                return Coefficient::from_rational(Rational(j % 2 ? 1 : -1) /
                                                  Rational(static_cast<long long>(j)));
            },
            [](unsigned j) { return std::optional<unsigned>(j < 1 ? 1 : j); },
            true};
}

inline Rational factorial(unsigned j) {
    Rational f(1);
    for (unsigned i = 2; i <= j; ++i) f *= Rational(i);
    return f;
}

// sin/cos/sinh/cosh Maclaurin generators.
inline ComposeSpec circular_spec(bool odd, bool hyperbolic) {
    return {[odd, hyperbolic](unsigned j) {
                if ((j % 2 == 1) != odd) return Coefficient::zero();
                Rational c = Rational(1) / factorial(j);
                if (!hyperbolic && ((j / 2) % 2 == 1)) c = -c;
                return Coefficient::from_rational(c);
            },
            [odd](unsigned j) {
                unsigned t = j;
                if ((t % 2 == 1) != odd) ++t;
                return std::optional<unsigned>(t);
            },
            true};
}

// A coefficient fit to sit under exp/sin/...: constants, rational multiples
// of L (handled by the caller), bounded log fractions. Anything whose
// magnitude can outgrow every power of z is refused.
inline void require_subexponential_safe(const Coefficient& c, const char* fn) {
    if (!c.contains_log()) return;
    if (c.split_log_linear() || c.log_fraction_bounded()) return;
    throw Error(ErrorKind::EssentialSingularity,
                std::string(fn) + " of a coefficient growing like a power of ln z");
}

}  // namespace detail

inline SeriesRep series_exp(const SeriesRep& u, const Rational& k) {
    if (u.has_terms() && u.alpha().is_negative())
        throw Error(ErrorKind::EssentialSingularity,
                    "exp of a series with negative dominant exponent");
    auto [t0, w] = detail::split_degree0(u);
    Rational q(0);
    Coefficient factor = Coefficient::one();
    if (!t0.is_zero()) {
        Coefficient s = t0;
        if (t0.contains_log()) {
            if (auto split = t0.split_log_linear()) {
                q = split->first;
                s = split->second;
            } else if (!t0.log_fraction_bounded()) {
                throw Error(ErrorKind::EssentialSingularity,
                            "exp of a coefficient growing like a power of ln z");
            }
            if (s.contains_log() && !s.log_fraction_bounded())
                throw Error(ErrorKind::EssentialSingularity,
                            "exp of a coefficient growing like a power of ln z");
        }
        factor = apply_function_to_constant(Func::Exp, s);
    }
    SeriesRep unit = detail::compose_unit(detail::exp_spec(), w, k - q);
    return series_shift_scale(unit, factor, q);
}

inline SeriesRep series_log(const SeriesRep& u, const Rational& k) {
    if (!u.has_terms()) {
        if (u.is_exact_zero())
            throw Error(ErrorKind::DivisionByZeroSeries, "ln of the zero series");
        throw Error(ErrorKind::InsufficientOrder, "ln: dominant term unknown at this order");
    }
    auto [c, alpha, w] = detail::unit_split(u);
    Coefficient head = log_constant(c);
    if (!alpha.is_zero())
        head = head + Coefficient::from_rational(alpha) * Coefficient::log_var();
    SeriesRep tail = detail::compose_unit(detail::log1p_spec(), w, k);
    return series_add(SeriesRep::constant(std::move(head), OrderTerm::exact()), tail);
}

namespace detail {

// sin/cos/sinh/cosh via the angle-sum split around the degree-0 term.
inline SeriesRep circular(const SeriesRep& u, const Rational& k, Func f) {
    if (u.has_terms() && u.alpha().is_negative())
        throw Error(ErrorKind::EssentialSingularity,
                    std::string(func_name(f)) + " of a series with negative dominant exponent");
    bool hyper = f == Func::Sinh || f == Func::Cosh;
    bool odd_f = f == Func::Sin || f == Func::Sinh;
    auto [t0, w] = split_degree0(u);
    SeriesRep odd_part = compose_unit(circular_spec(true, hyper), w, k);
    SeriesRep even_part = compose_unit(circular_spec(false, hyper), w, k);
    if (t0.is_zero()) return odd_f ? odd_part : even_part;
    require_subexponential_safe(t0, func_name(f));
    Coefficient sin0 = apply_function_to_constant(hyper ? Func::Sinh : Func::Sin, t0);
    Coefficient cos0 = apply_function_to_constant(hyper ? Func::Cosh : Func::Cos, t0);
    if (odd_f) {
        // sin(t0 + w) = sin t0 cos w + cos t0 sin w (and the sinh analogue)
        return series_add(series_scale(even_part, sin0), series_scale(odd_part, cos0));
    }
    // cos(t0 + w) = cos t0 cos w -/+ sin t0 sin w (cosh uses +)
    SeriesRep second = series_scale(odd_part, sin0);
    if (!hyper) second = series_neg(second);
    return series_add(series_scale(even_part, cos0), second);
}

}  // namespace detail

inline SeriesRep series_sin(const SeriesRep& u, const Rational& k) {
    return detail::circular(u, k, Func::Sin);
}
inline SeriesRep series_cos(const SeriesRep& u, const Rational& k) {
    return detail::circular(u, k, Func::Cos);
}
inline SeriesRep series_sinh(const SeriesRep& u, const Rational& k) {
    return detail::circular(u, k, Func::Sinh);
}
inline SeriesRep series_cosh(const SeriesRep& u, const Rational& k) {
    return detail::circular(u, k, Func::Cosh);
}
inline SeriesRep series_tan(const SeriesRep& u, const Rational& k) {
    return series_div(series_sin(u, k), series_cos(u, k), k);
}
inline SeriesRep series_tanh(const SeriesRep& u, const Rational& k) {
    return series_div(series_sinh(u, k), series_cosh(u, k), k);
}

// ---------------------------------------------------------------------------
// Inverse trigonometric / hyperbolic functions.

namespace detail {

// Taylor coefficients of the inverse functions about a regular point v, from
// the defining linear ODEs with quadratic coefficients. First-order family:
// P(x) y' = 1 (arctan, arctanh); second-order: P(x) y'' + Q(x) y' = 0 with
// Q = P'/2 up to sign handled via the explicit coefficients.
struct TaylorChain {
    std::vector<Coefficient> c;  // c[0..J]
    bool parity_tail = false;    // odd-series tail knowledge at v = 0
};

inline TaylorChain inverse_chain(Func f, const Coefficient& v, unsigned J) {
    TaylorChain out;
    Coefficient one = Coefficient::one();
    Coefficient v2 = v * v;
    auto R = [](long long n, long long d = 1) { return Coefficient::from_rational(Rational(n, d)); };
    Coefficient y0 = apply_function_to_constant(f, v);
    switch (f) {
        case Func::Arctan:
        case Func::Arctanh: {
            // P = 1 +/- x^2
            bool plus = f == Func::Arctan;
            Coefficient P0 = plus ? one + v2 : one - v2;
            Coefficient P1 = plus ? R(2) * v : R(-2) * v;
            Coefficient P2 = plus ? one : -one;
            if (P0.is_zero())
                throw Error(ErrorKind::Unsupported, "interior branch point in Taylor chain");
            out.c = {y0, one / P0};
            for (unsigned j = 1; out.c.size() <= J; ++j) {
                // (j+1) P0 c_{j+1} + j P1 c_j + (j-1) P2 c_{j-1} = 0
                Coefficient cj = out.c[j];
                Coefficient cjm1 = out.c[j - 1];
                Coefficient next = -(R(j) * P1 * cj + R(j - 1) * P2 * cjm1) / (R(j + 1) * P0);
                out.c.push_back(std::move(next));
            }
            break;
        }
        default: {
            // arcsin: (1-x^2) y'' - x y' = 0, y' = (1-v^2)^(-1/2)
            // arccos: same ODE, y' negated
            // arcsinh: (1+x^2) y'' + x y' = 0, y' = (1+v^2)^(-1/2)
            // arccosh: (x^2-1) y'' + x y' = 0, y' = 1/(sqrt(v-1) sqrt(v+1))
            Coefficient P0, P1, P2, Q0, Q1, y1;
            if (f == Func::Arcsin || f == Func::Arccos) {
                P0 = one - v2; P1 = R(-2) * v; P2 = -one;
                Q0 = -v; Q1 = -one;
                y1 = (one - v2).pow(Rational(-1, 2));
                if (f == Func::Arccos) y1 = -y1;
            } else if (f == Func::Arcsinh) {
                P0 = one + v2; P1 = R(2) * v; P2 = one;
                Q0 = v; Q1 = one;
                y1 = (one + v2).pow(Rational(-1, 2));
            } else {  // Arccosh
                P0 = v2 - one; P1 = R(2) * v; P2 = one;
                Q0 = v; Q1 = one;
                y1 = (v - one).pow(Rational(-1, 2)) * (v + one).pow(Rational(-1, 2));
            }
            if (P0.is_zero())
                throw Error(ErrorKind::Unsupported, "interior branch point in Taylor chain");
            out.c = {y0, y1};
            for (unsigned j = 0; out.c.size() <= J; ++j) {
                // (j+2)(j+1) P0 c_{j+2} + (j+1)j P1 c_{j+1} + j(j-1) P2 c_j
                //   + (j+1) Q0 c_{j+1} + j Q1 c_j = 0
                Coefficient cj = out.c[j];
                Coefficient cj1 = out.c[j + 1];
                Coefficient num = R((j + 1) * j) * P1 * cj1 + R(j * (j >= 1 ? j - 1 : 0)) * P2 * cj +
                                  R(j + 1) * Q0 * cj1 + R(j) * Q1 * cj;
                Coefficient next = -num / (R((j + 2) * (j + 1)) * P0);
                out.c.push_back(std::move(next));
            }
            break;
        }
    }
    out.parity_tail = v.is_zero();
    return out;
}

// Composes an inverse function's Taylor expansion at v with the offset series
// w (dominant exponent > 0), to o(z^k).
inline SeriesRep inverse_taylor(Func f, const Coefficient& v, const SeriesRep& w,
                                const Rational& k) {
    if (!w.has_terms()) {
        Coefficient y0 = apply_function_to_constant(f, v);
        if (w.order().is_exact()) return SeriesRep::constant(std::move(y0), OrderTerm::exact());
        return SeriesRep::constant(std::move(y0), w.order());  // chain derivative is nonzero
    }
    Rational d = w.alpha();
    long long J = static_cast<long long>((k / d).floor());
    if (J < 0) J = 0;
    TaylorChain chain = inverse_chain(f, v, static_cast<unsigned>(J));
    bool parity = chain.parity_tail;
    ComposeSpec spec{
        [cs = std::move(chain.c)](unsigned j) {
            return j < cs.size() ? cs[j] : Coefficient::zero();
        },
        [parity](unsigned j) -> std::optional<unsigned> {
            if (!parity) return j;
            return j % 2 ? j : j + 1;  // odd series about 0
        },
        parity};
    return compose_unit(spec, w, k);
}

inline SeriesRep one_series() { return SeriesRep::constant(Coefficient::one()); }
inline SeriesRep constant_series(Coefficient c) {
    return SeriesRep::constant(std::move(c), OrderTerm::exact());
}

inline SeriesRep add_constant(const SeriesRep& s, const Coefficient& c) {
    return series_add(s, constant_series(c));
}

inline Coefficient i_coeff() { return Coefficient::imaginary_unit(); }
inline Coefficient half() { return Coefficient::from_rational(Rational(1, 2)); }

inline SeriesRep sqrt_series(const SeriesRep& s, const Rational& k) {
    return series_pow(s, Rational(1, 2), k);
}

}  // namespace detail

inline SeriesRep series_atan(const SeriesRep& u, const Rational& k);
inline SeriesRep series_atanh(const SeriesRep& u, const Rational& k);
inline SeriesRep series_asin(const SeriesRep& u, const Rational& k);
inline SeriesRep series_acos(const SeriesRep& u, const Rational& k);
inline SeriesRep series_asinh(const SeriesRep& u, const Rational& k);
inline SeriesRep series_acosh(const SeriesRep& u, const Rational& k);

namespace detail {

// Shared skeleton: pick the regular / branch / infinite-argument route.
template <typename Regular, typename Branch, typename Infinite>
SeriesRep inverse_dispatch(Func f, const SeriesRep& u, const Rational& k,
                           const std::vector<Coefficient>& branch_points, Regular regular,
                           Branch branch, Infinite infinite) {
    if (!u.has_terms()) {
        return inverse_taylor(f, Coefficient::zero(), u, k);
    }
    if (u.alpha().is_negative()) return infinite();
    if (u.alpha().is_zero()) {
        Coefficient t0 = u.coeffs().front();
        for (const auto& b : branch_points)
            if (t0 == b) return branch(b);
        auto [v, w] = split_degree0(u);
        return regular(v, w);
    }
    return regular(Coefficient::zero(), u);
}

// For the ln-based identities: a + b where (a+b)(a-b) equals the constant
// `prod`. When the direct sum loses its dominant term to cancellation, the
// conjugate form prod/(a-b) gives the same value without cancellation.
inline SeriesRep sum_or_conjugate(const SeriesRep& a, const SeriesRep& b,
                                  const Coefficient& prod, const Rational& target) {
    SeriesRep direct = series_add(a, b);
    if (direct.has_terms() || direct.is_exact_zero()) return direct;
    SeriesRep conj = series_sub(a, b);
    return series_scale(series_reciprocal(conj, target), prod);
}

}  // namespace detail

inline SeriesRep series_atan(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    return inverse_dispatch(
        Func::Arctan, u, k, {i_coeff(), -i_coeff()},
        [&](const Coefficient& v, const SeriesRep& w) {
            return inverse_taylor(Func::Arctan, v, w, k);
        },
        [&](const Coefficient&) {
            // arctan u = -(i/2) [ln(1 + iu) - ln(1 - iu)]
            SeriesRep iu = series_scale(u, i_coeff());
            SeriesRep a = series_log(add_constant(iu, Coefficient::one()), k);
            SeriesRep b = series_log(add_constant(series_neg(iu), Coefficient::one()), k);
            return series_scale(series_sub(a, b), -i_coeff() * half());
        },
        [&]() {
            auto sign = coefficient_real_sign(u.coeffs().front());
            if (!sign || *sign == 0)
                throw Error(ErrorKind::ResourceExhausted,
                            "arctan at an infinite argument with undecidable direction");
            // arctan u = sign * pi/2 - arctan(1/u)
            SeriesRep inner = series_atan(series_reciprocal(u, k), k);
            Coefficient c = pi_coefficient() * half() * Coefficient::from_rational(Rational(*sign));
            return add_constant(series_neg(inner), c);
        });
}

inline SeriesRep series_atanh(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    Coefficient one = Coefficient::one();
    return inverse_dispatch(
        Func::Arctanh, u, k, {one, -one},
        [&](const Coefficient& v, const SeriesRep& w) {
            return inverse_taylor(Func::Arctanh, v, w, k);
        },
        [&](const Coefficient&) {
            // arctanh u = (1/2) [ln(1 + u) - ln(1 - u)]
            SeriesRep a = series_log(add_constant(u, Coefficient::one()), k);
            SeriesRep b = series_log(add_constant(series_neg(u), Coefficient::one()), k);
            return series_scale(series_sub(a, b), half());
        },
        [&]() {
            auto sign = coefficient_real_sign(u.coeffs().front());
            if (!sign || *sign == 0)
                throw Error(ErrorKind::ResourceExhausted,
                            "arctanh at an infinite argument with undecidable direction");
            // arctanh u = arctanh(1/u) + i pi/2 along real approaches
            SeriesRep inner = series_atanh(series_reciprocal(u, k), k);
            return add_constant(inner, i_coeff() * pi_coefficient() * half());
        });
}

inline SeriesRep series_asin(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    Coefficient one = Coefficient::one();
    return inverse_dispatch(
        Func::Arcsin, u, k, {one, -one},
        [&](const Coefficient& v, const SeriesRep& w) {
            return inverse_taylor(Func::Arcsin, v, w, k);
        },
        [&](const Coefficient&) {
            // arcsin u = -i ln(iu + sqrt(1 - u^2))
            SeriesRep one_minus = series_sub(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_minus, k);
            SeriesRep arg = series_add(series_scale(u, i_coeff()), root);
            return series_scale(series_log(arg, k), -i_coeff());
        },
        [&]() {
            // arcsin u = -i ln(iu + sqrt(1 - u^2)) holds at infinite arguments
            // too; (iu + s)(iu - s) = -1 covers the cancelling principal side.
            SeriesRep one_minus = series_sub(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_minus, k - u.alpha());
            SeriesRep arg = sum_or_conjugate(series_scale(u, i_coeff()), root,
                                             -Coefficient::one(), k);
            return series_scale(series_log(arg, k), -i_coeff());
        });
}

inline SeriesRep series_acos(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    Coefficient one = Coefficient::one();
    return inverse_dispatch(
        Func::Arccos, u, k, {one, -one},
        [&](const Coefficient& v, const SeriesRep& w) {
            // arccos = pi/2 - arcsin, sharing one Taylor chain
            SeriesRep asin_part = inverse_taylor(Func::Arcsin, v, w, k);
            return add_constant(series_neg(asin_part), pi_coefficient() * half());
        },
        [&](const Coefficient&) {
            // arccos u = -i ln(u + i sqrt(1 - u^2))
            SeriesRep one_minus = series_sub(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_minus, k);
            SeriesRep arg = series_add(u, series_scale(root, i_coeff()));
            return series_scale(series_log(arg, k), -i_coeff());
        },
        [&]() {
            // (u + is)(u - is) = 1 with s = sqrt(1 - u^2)
            SeriesRep one_minus = series_sub(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_minus, k - u.alpha());
            SeriesRep arg =
                sum_or_conjugate(u, series_scale(root, i_coeff()), Coefficient::one(), k);
            return series_scale(series_log(arg, k), -i_coeff());
        });
}

inline SeriesRep series_asinh(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    return inverse_dispatch(
        Func::Arcsinh, u, k, {i_coeff(), -i_coeff()},
        [&](const Coefficient& v, const SeriesRep& w) {
            return inverse_taylor(Func::Arcsinh, v, w, k);
        },
        [&](const Coefficient&) {
            // arcsinh u = ln(u + sqrt(1 + u^2))
            SeriesRep one_plus = series_add(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_plus, k);
            return series_log(series_add(u, root), k);
        },
        [&]() {
            // arcsinh u = ln(u + sqrt(1 + u^2)); (u + s)(u - s) = -1 covers
            // the side where the principal sqrt cancels u.
            SeriesRep one_plus = series_add(one_series(), series_mul(u, u));
            SeriesRep root = sqrt_series(one_plus, k - u.alpha());
            SeriesRep arg = sum_or_conjugate(u, root, -Coefficient::one(), k);
            return series_log(arg, k);
        });
}

inline SeriesRep series_acosh(const SeriesRep& u, const Rational& k) {
    using namespace detail;
    Coefficient one = Coefficient::one();
    auto ln_form = [&](const Rational& root_cap) {
        // arccosh u = ln(u + sqrt(u - 1) sqrt(u + 1)), principal everywhere;
        // (u + r)(u - r) = 1.
        SeriesRep um1 = add_constant(u, -one);
        SeriesRep up1 = add_constant(u, one);
        SeriesRep root = series_mul(sqrt_series(um1, root_cap), sqrt_series(up1, root_cap));
        SeriesRep arg = sum_or_conjugate(u, root, Coefficient::one(), k);
        return series_log(arg, k);
    };
    return inverse_dispatch(
        Func::Arccosh, u, k, {one, -one},
        [&](const Coefficient& v, const SeriesRep& w) {
            return inverse_taylor(Func::Arccosh, v, w, k);
        },
        [&](const Coefficient&) { return ln_form(k); },
        [&]() { return ln_form(k + (-u.alpha())); });
}

}  // namespace pkx
