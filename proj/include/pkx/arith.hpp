#pragma once

// Series ring operations and calculus on the dense representation: addition,
// multiplication, division via reciprocal recurrence, rational powers via the
// binomial series, derivative and antiderivative. Every operation carries the
// error order along.

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pkx/errors.hpp"
#include "pkx/seriesrep.hpp"

namespace pkx {

inline SeriesRep series_neg(const SeriesRep& u) {
    std::vector<Coefficient> cs;
    cs.reserve(u.coeffs().size());
    for (const auto& c : u.coeffs()) cs.push_back(-c);
    return SeriesRep::make(u.alpha(), u.inc(), std::move(cs), u.order());
}

inline SeriesRep series_add(const SeriesRep& u, const SeriesRep& v) {
    OrderTerm ord = combine_orders(u.order(), v.order());
    std::vector<std::pair<Rational, Coefficient>> terms;
    terms.reserve(u.coeffs().size() + v.coeffs().size());
    for (std::size_t j = 0; j < u.coeffs().size(); ++j)
        terms.emplace_back(u.exponent_at(j), u.coeffs()[j]);
    for (std::size_t j = 0; j < v.coeffs().size(); ++j)
        terms.emplace_back(v.exponent_at(j), v.coeffs()[j]);
    return series_from_terms(std::move(terms), std::move(ord));
}

inline SeriesRep series_sub(const SeriesRep& u, const SeriesRep& v) {
    return series_add(u, series_neg(v));
}

// Multiplication by a nonzero constant: the order exponent is unaffected.
inline SeriesRep series_scale(const SeriesRep& u, const Coefficient& c) {
    if (c.is_zero()) return SeriesRep::zero(OrderTerm::exact());
    std::vector<Coefficient> cs;
    cs.reserve(u.coeffs().size());
    for (const auto& x : u.coeffs()) cs.push_back(x * c);
    return SeriesRep::make(u.alpha(), u.inc(), std::move(cs), u.order());
}

// Multiplication by an exact monomial c*z^d.
inline SeriesRep series_shift_scale(const SeriesRep& u, const Coefficient& c, const Rational& d) {
    if (c.is_zero()) return SeriesRep::zero(OrderTerm::exact());
    std::vector<Coefficient> cs;
    cs.reserve(u.coeffs().size());
    for (const auto& x : u.coeffs()) cs.push_back(x * c);
    return SeriesRep::make(u.alpha() + d, u.inc(), std::move(cs), shift_order(u.order(), d));
}

inline SeriesRep series_mul(const SeriesRep& u, const SeriesRep& v) {
    // Error bookkeeping: P_u*E_v at alpha_u + nu_v, P_v*E_u at alpha_v + nu_u,
    // and the error product.
    OrderTerm ord = multiply_orders(u.order(), v.order());
    if (u.has_terms() && !v.order().is_exact())
        ord = join_product_contributions(ord, shift_order(v.order(), u.alpha()));
    if (v.has_terms() && !u.order().is_exact())
        ord = join_product_contributions(ord, shift_order(u.order(), v.alpha()));

    std::vector<std::pair<Rational, Coefficient>> terms;
    terms.reserve(u.coeffs().size() * v.coeffs().size());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
            if (v.coeffs()[j].is_zero()) continue;
            Rational e = u.exponent_at(i) + v.exponent_at(j);
            // Terms at or above the error bound fold away anyway.
            if (!ord.admits_degree(e)) continue;
            terms.emplace_back(std::move(e), u.coeffs()[i] * v.coeffs()[j]);
        }
    }
    return series_from_terms(std::move(terms), std::move(ord));
}

namespace detail {

// One elementary power-series composition kernel: sum_j gen(j) * w^j for a
// unit-offset argument w (dominant exponent > 0), truncated at relative order
// o(z^rel_cap), with the omitted tail folded into the order term.
struct ComposeSpec {
    std::function<Coefficient(unsigned)> coeff;
    // Smallest index >= j whose coefficient is (generically) nonzero, or
    // nullopt when the generator has no further nonzero entries.
    std::function<std::optional<unsigned>(unsigned)> next_nonzero;
    // Whether an omitted tail coefficient is known nonzero (true for the
    // fixed Maclaurin families; false for computed derivative chains).
    bool tail_known_nonzero = true;
};

inline SeriesRep compose_unit(const ComposeSpec& spec, const SeriesRep& w,
                              const Rational& rel_cap) {
    if (!w.has_terms()) {
        Coefficient c0 = spec.coeff(0);
        if (w.order().is_exact())
            return SeriesRep::constant(std::move(c0), OrderTerm::exact());
        auto j0 = spec.next_nonzero(1);
        if (!j0) return SeriesRep::constant(std::move(c0), OrderTerm::exact());
        // f(0 + e) - f(0) scales like e^(j0).
        OrderTerm ord = w.order();
        Rational nu = ord.nu.finite() * Rational(static_cast<long long>(*j0));
        ord.nu = ExtRational(std::move(nu));
        return SeriesRep::constant(std::move(c0), std::move(ord));
    }
    const Rational d = w.alpha();
    assert(d.is_positive());
    long long terms_included = static_cast<long long>((rel_cap / d).floor());
    SeriesRep sum = SeriesRep::zero(OrderTerm::exact());
    SeriesRep power = SeriesRep::constant(Coefficient::one());
    for (long long j = 0; j <= terms_included; ++j) {
        Coefficient g = spec.coeff(static_cast<unsigned>(j));
        if (!g.is_zero()) sum = series_add(sum, series_scale(power, g));
        if (j < terms_included) power = series_mul(power, w);
    }
    unsigned after = terms_included < 0 ? 0u : static_cast<unsigned>(terms_included + 1);
    if (auto t = spec.next_nonzero(after)) {
        Rational tail_e = Rational(static_cast<long long>(*t)) * d;
        OrderTerm ord = spec.tail_known_nonzero
                            ? fold_known_term(tail_e, sum.order())
                            : combine_orders(OrderTerm::big_o(tail_e), sum.order());
        return sum.with_order(std::move(ord));
    }
    return sum;
}

inline Coefficient rational_coeff(long long n, long long d = 1) {
    return Coefficient::from_rational(Rational(n, d));
}

inline ComposeSpec geometric_spec() {
    return {[](unsigned j) { return rational_coeff(j % 2 ? -1 : 1); },
            [](unsigned j) { return std::optional<unsigned>(j); },
            true};
}

inline Coefficient binomial_coefficient(const Rational& gamma, unsigned j) {
    Rational acc(1);
    for (unsigned i = 0; i < j; ++i)
        acc = acc * (gamma - Rational(i)) / Rational(static_cast<long long>(i) + 1);
    return Coefficient::from_rational(acc);
}

inline ComposeSpec binomial_spec(Rational gamma) {
    bool finite = gamma.is_integer() && !gamma.is_negative();
    long long top = finite ? static_cast<long long>(gamma.numerator()) : 0;
    return {[gamma](unsigned j) { return binomial_coefficient(gamma, j); },
            [finite, top](unsigned j) -> std::optional<unsigned> {
                if (finite && static_cast<long long>(j) > top) return std::nullopt;
                return j;
            },
            true};
}

// Splits a nonzero-dominant series as c * z^beta * (1 + w): returns the
// dominant coefficient, dominant exponent and the relative offset series w
// (dominant exponent > 0, order shifted to the relative scale).
struct UnitSplit {
    Coefficient lead;
    Rational beta;
    SeriesRep w;
};

inline UnitSplit unit_split(const SeriesRep& v) {
    assert(v.has_terms());
    const Coefficient& c = v.coeffs().front();
    std::vector<std::pair<Rational, Coefficient>> terms;
    for (std::size_t j = 1; j < v.coeffs().size(); ++j) {
        if (v.coeffs()[j].is_zero()) continue;
        terms.emplace_back(v.exponent_at(j) - v.alpha(), v.coeffs()[j] / c);
    }
    OrderTerm rel_ord = shift_order(v.order(), -v.alpha());
    return {c, v.alpha(), series_from_terms(std::move(terms), std::move(rel_ord))};
}

// Relative little-o cap available/required for a unit-series expansion whose
// input knowledge ends at rel_ord.nu; target_rel supplies the cap when the
// input is exact.
inline Rational relative_cap(const OrderTerm& rel_ord, const std::optional<Rational>& target_rel,
                             const char* what) {
    if (!rel_ord.is_exact()) {
        Rational cap = rel_ord.nu.finite();
        if (target_rel && *target_rel < cap) cap = *target_rel;
        return cap;
    }
    if (target_rel) return *target_rel;
    throw Error(ErrorKind::InsufficientOrder,
                std::string(what) + ": exact operand needs an explicit target order");
}

}  // namespace detail

// Reciprocal of a series with a visible dominant term. target is the absolute
// little-o order wanted for the reciprocal (required when v is exact and not
// a monomial).
inline SeriesRep series_reciprocal(const SeriesRep& v,
                                   std::optional<Rational> target = std::nullopt) {
    if (!v.has_terms()) {
        if (v.is_exact_zero())
            throw Error(ErrorKind::DivisionByZeroSeries, "division by exact zero series");
        throw Error(ErrorKind::InsufficientOrder,
                    "division: denominator dominant term unknown at this order");
    }
    auto [c, beta, w] = detail::unit_split(v);
    if (!w.has_terms() && w.order().is_exact()) {
        // Exact monomial.
        return SeriesRep::monomial(Coefficient::one() / c, -beta, OrderTerm::exact());
    }
    std::optional<Rational> target_rel;
    if (target) target_rel = *target + beta;  // (1+w)^-1 needed to o(z^(target+beta))
    Rational cap = detail::relative_cap(w.order(), target_rel, "series_reciprocal");
    SeriesRep unit = detail::compose_unit(detail::geometric_spec(), w, cap);
    return series_shift_scale(unit, Coefficient::one() / c, -beta);
}

inline SeriesRep series_div(const SeriesRep& u, const SeriesRep& v,
                            std::optional<Rational> target = std::nullopt) {
    // A quotient of one value by itself is exactly 1 whatever the common
    // error term hides.
    if (u.alpha() == v.alpha() && u.inc() == v.inc() && u.order() == v.order() &&
        u.coeffs().size() == v.coeffs().size() && u.has_terms()) {
        bool same = true;
        for (std::size_t j = 0; same && j < u.coeffs().size(); ++j)
            same = u.coeffs()[j] == v.coeffs()[j];
        if (same) return SeriesRep::constant(Coefficient::one());
    }
    if (!v.has_terms()) {
        if (v.is_exact_zero())
            throw Error(ErrorKind::DivisionByZeroSeries, "division by exact zero series");
        throw Error(ErrorKind::InsufficientOrder,
                    "division: denominator dominant term unknown at this order");
    }
    if (!u.has_terms() && !u.order().is_exact()) {
        // 0 + o(z^m) divided by c z^beta (1 + ...).
        return SeriesRep::zero(shift_order(u.order(), -v.alpha()));
    }
    if (u.is_exact_zero()) return SeriesRep::zero(OrderTerm::exact());
    std::optional<Rational> recip_target;
    if (target) recip_target = *target - u.alpha();
    SeriesRep r = series_reciprocal(v, recip_target);
    return series_mul(u, r);
}

// u^gamma for rational gamma, principal branch on the dominant coefficient.
inline SeriesRep series_pow(const SeriesRep& u, const Rational& gamma,
                            std::optional<Rational> target = std::nullopt) {
    if (gamma.is_zero()) return SeriesRep::constant(Coefficient::one());
    if (!u.has_terms()) {
        if (u.is_exact_zero()) {
            if (gamma.is_negative())
                throw Error(ErrorKind::DivisionByZeroSeries, "zero series to a negative power");
            return SeriesRep::zero(OrderTerm::exact());
        }
        throw Error(ErrorKind::InsufficientOrder,
                    "power: dominant term unknown at this order");
    }
    auto [c, alpha, w] = detail::unit_split(u);
    Coefficient lead = c.pow(gamma);
    Rational shifted = gamma * alpha;
    if (!w.has_terms() && w.order().is_exact())
        return SeriesRep::monomial(std::move(lead), std::move(shifted), OrderTerm::exact());
    std::optional<Rational> target_rel;
    if (target) target_rel = *target - shifted;
    Rational cap = detail::relative_cap(w.order(), target_rel, "series_pow");
    SeriesRep unit = detail::compose_unit(detail::binomial_spec(gamma), w, cap);
    return series_shift_scale(unit, lead, shifted);
}

namespace detail {

// Coefficient as a polynomial in L with integer exponents: map from L-power
// to the L-free cofactor. Fails on fractional/negative L powers, L in the
// denominator, or L hidden inside opaque atoms.
inline std::optional<std::map<long long, Coefficient>> as_log_polynomial(const Coefficient& c) {
    static const Atom L = Atom::log_var();
    if (!Coefficient::poly_log_degree(c.denominator()).is_zero() ||
        Coefficient::poly_has_opaque_log(c.denominator()) ||
        Coefficient::poly_has_opaque_log(c.numerator()))
        return std::nullopt;
    std::map<long long, CoeffPoly> groups;
    for (const auto& t : c.numerator()) {
        Rational e = t.mono.exponent_of(L);
        if (!e.is_integer() || e.is_negative()) return std::nullopt;
        CoeffTerm stripped{t.c, t.mono * PowerProduct(L, -e)};
        groups[static_cast<long long>(e.numerator())].push_back(std::move(stripped));
    }
    std::map<long long, Coefficient> out;
    for (auto& [q, poly] : groups)
        out.emplace(q, Coefficient::from_parts(std::move(poly), c.denominator()));
    return out;
}

inline Coefficient from_log_polynomial(const std::map<long long, Coefficient>& pieces) {
    Coefficient acc = Coefficient::zero();
    for (const auto& [q, piece] : pieces)
        acc = acc + piece * Coefficient::log_var().pow_int(q);
    return acc;
}

}  // namespace detail

// d/dz [ c(L) z^e ] = (e c(L) + c'(L)) z^(e-1), where L = ln z.
inline SeriesRep series_diff(const SeriesRep& u) {
    std::vector<std::pair<Rational, Coefficient>> terms;
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        const Coefficient& c = u.coeffs()[j];
        if (c.is_zero()) continue;
        Rational e = u.exponent_at(j);
        Coefficient d = Coefficient::from_rational(e) * c + c.d_dL();
        if (!d.is_zero()) terms.emplace_back(e - Rational(1), std::move(d));
    }
    OrderTerm ord = u.order();
    if (!ord.is_exact()) {
        // An omitted constant-exponent term with a log-bearing coefficient
        // can differentiate onto exponent -1, so Theta/O at 0 weaken.
        if (ord.nu == ExtRational(Rational(0)) && ord.kind != OrderKind::LittleO)
            ord = OrderTerm::big_o(Rational(-1));
        else
            ord = {ord.kind, ord.nu + Rational(-1)};
    }
    return series_from_terms(std::move(terms), std::move(ord));
}

// Termwise antiderivative with integration constant 0. For e != -1 solves
// (e+1) d + d' = c in descending L-degree; for e = -1 integrates the L
// polynomial directly. Coefficients must be polynomials in L.
inline SeriesRep series_integrate(const SeriesRep& u) {
    std::vector<std::pair<Rational, Coefficient>> terms;
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        const Coefficient& c = u.coeffs()[j];
        if (c.is_zero()) continue;
        Rational e = u.exponent_at(j);
        auto pieces = detail::as_log_polynomial(c);
        if (!pieces)
            throw Error(ErrorKind::NonElementaryIntegral,
                        "integral: coefficient is not a polynomial in ln z");
        if (e == Rational(-1)) {
            std::map<long long, Coefficient> anti;
            for (const auto& [q, piece] : *pieces)
                anti[q + 1] = piece / Coefficient::from_rational(Rational(q + 1));
            terms.emplace_back(Rational(0), detail::from_log_polynomial(anti));
        } else {
            Rational e1 = e + Rational(1);
            std::map<long long, Coefficient> sol;
            long long top = pieces->empty() ? 0 : pieces->rbegin()->first;
            Coefficient carry = Coefficient::zero();
            for (long long q = top; q >= 0; --q) {
                Coefficient cq = Coefficient::zero();
                auto it = pieces->find(q);
                if (it != pieces->end()) cq = it->second;
                // (e+1) d_q + (q+1) d_{q+1} = c_q
                Coefficient dq = (cq - carry) / Coefficient::from_rational(e1);
                carry = Coefficient::from_rational(Rational(q)) * dq;  // feeds q-1 via d' term
                sol[q] = std::move(dq);
            }
            terms.emplace_back(std::move(e1), detail::from_log_polynomial(sol));
        }
    }
    OrderTerm ord = u.order();
    if (!ord.is_exact()) ord = {ord.kind, ord.nu + Rational(1)};
    return series_from_terms(std::move(terms), std::move(ord));
}

}  // namespace pkx
