#pragma once

// The frugal dense truncated-series representation: dominant exponent alpha,
// implicit exponent increment (the gcd of the spacings between nonzero
// terms), the trimmed coefficient list, and the attached error-order term.
// Index j stores the coefficient of z^(alpha + j*inc).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pkx/coeff.hpp"
#include "pkx/frame.hpp"
#include "pkx/orderterm.hpp"
#include "pkx/rational.hpp"

namespace pkx {

namespace detail {

// High-water mark of stored coefficient-list sizes, for the cheapness checks
// around tiny fractional-order requests.
inline thread_local std::size_t coeff_list_high_water = 0;
inline void note_coeff_list_size(std::size_t n) {
    if (n > coeff_list_high_water) coeff_list_high_water = n;
}
inline void reset_coeff_list_high_water() { coeff_list_high_water = 0; }

}  // namespace detail

class SeriesRep {
public:
    SeriesRep() : alpha_(0), inc_(0), order_(OrderTerm::exact()) {}

    static SeriesRep zero(OrderTerm order) {
        SeriesRep s;
        s.order_ = std::move(order);
        return s;
    }

    static SeriesRep monomial(Coefficient c, Rational exponent,
                              OrderTerm order = OrderTerm::exact()) {
        return make(std::move(exponent), Rational(0), {std::move(c)}, std::move(order));
    }

    static SeriesRep constant(Coefficient c, OrderTerm order = OrderTerm::exact()) {
        return monomial(std::move(c), Rational(0), std::move(order));
    }

    // The canonicalizing constructor: trims zero coefficients, re-derives the
    // gcd increment, and folds any stored term the order term does not admit.
    static SeriesRep make(Rational alpha, Rational inc, std::vector<Coefficient> coeffs,
                          OrderTerm order);

    const Rational& alpha() const { return alpha_; }
    const Rational& inc() const { return inc_; }
    const std::vector<Coefficient>& coeffs() const { return coeffs_; }
    const OrderTerm& order() const { return order_; }

    bool has_terms() const { return !coeffs_.empty(); }
    bool is_zero_series() const { return coeffs_.empty(); }
    bool is_exact_zero() const { return coeffs_.empty() && order_.is_exact(); }

    Rational exponent_at(std::size_t j) const { return alpha_ + Rational((long long)j) * inc_; }

    ExtRational dominant_exponent() const {
        return has_terms() ? ExtRational(alpha_) : ExtRational::pos_inf();
    }
    std::optional<std::pair<Coefficient, Rational>> dominant_term() const {
        if (!has_terms()) return std::nullopt;
        return std::make_pair(coeffs_.front(), alpha_);
    }
    ExtRational degree() const {
        return has_terms() ? ExtRational(exponent_at(coeffs_.size() - 1))
                           : ExtRational::neg_inf();
    }

    SeriesRep with_order(OrderTerm order) const {
        return make(alpha_, inc_, coeffs_, std::move(order));
    }

    // Grid-aligned copy used by addition: same increment, alpha shifted onto
    // the common grid, interior zeros padded. Bypasses re-normalization by
    // design; alpha remains this series' own dominant exponent.
    SeriesRep regrid(const Rational& new_inc) const;

private:
    Rational alpha_, inc_;
    std::vector<Coefficient> coeffs_;
    OrderTerm order_;
};

inline SeriesRep SeriesRep::make(Rational alpha, Rational inc, std::vector<Coefficient> coeffs,
                                 OrderTerm order) {
    detail::note_coeff_list_size(coeffs.size());
    for (;;) {
        // Trim leading/trailing zeros.
        std::size_t first = 0, last = coeffs.size();
        while (first < last && coeffs[first].is_zero()) ++first;
        while (last > first && coeffs[last - 1].is_zero()) --last;
        if (first == last) {
            SeriesRep s;
            s.order_ = std::move(order);
            return s;
        }
        alpha += Rational((long long)first) * inc;
        coeffs.erase(coeffs.begin() + last, coeffs.end());
        coeffs.erase(coeffs.begin(), coeffs.begin() + first);

        // Drop (fold) stored terms the order term does not admit.
        std::size_t keep = coeffs.size();
        while (keep > 0) {
            Rational e = alpha + Rational((long long)(keep - 1)) * inc;
            if (coeffs[keep - 1].is_zero() || order.admits_degree(e)) break;
            order = fold_known_term(e, order);
            --keep;
        }
        if (keep != coeffs.size()) {
            coeffs.erase(coeffs.begin() + keep, coeffs.end());
            continue;  // re-trim: the fold may expose trailing zeros
        }

        // Re-derive the gcd increment from the nonzero-term spacings.
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!coeffs[j].is_zero()) nz.push_back(j);
        Rational g(0);
        for (std::size_t t = 1; t < nz.size(); ++t)
            g = rational_gcd(g, Rational((long long)(nz[t] - nz[t - 1])) * inc);
        if (nz.size() < 2) {
            SeriesRep s;
            s.alpha_ = std::move(alpha);
            s.inc_ = Rational(0);
            s.coeffs_ = {coeffs[nz.front()]};
            s.order_ = std::move(order);
            return s;
        }
        if (g != inc) {
            std::vector<Coefficient> packed;
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (coeffs[j].is_zero()) continue;
                Rational offset = Rational((long long)j) * inc;
                Rational steps = offset / g;  // exact by gcd construction
                std::size_t idx = static_cast<std::size_t>((long long)steps.numerator());
                if (packed.size() <= idx) packed.resize(idx + 1);
                packed[idx] = coeffs[j];
            }
            coeffs = std::move(packed);
            inc = g;
            detail::note_coeff_list_size(coeffs.size());
        }
        SeriesRep s;
        s.alpha_ = std::move(alpha);
        s.inc_ = std::move(inc);
        s.coeffs_ = std::move(coeffs);
        s.order_ = std::move(order);
        return s;
    }
}

inline SeriesRep SeriesRep::regrid(const Rational& new_inc) const {
    SeriesRep out;
    out.order_ = order_;
    out.alpha_ = alpha_;
    if (!has_terms()) {
        out.inc_ = Rational(0);
        return out;
    }
    if (new_inc.is_zero()) {
        out.inc_ = Rational(0);
        out.coeffs_ = coeffs_;
        return out;
    }
    out.inc_ = new_inc;
    Rational span = degree().finite() - alpha_;
    Rational steps = new_inc.is_zero() ? Rational(0) : span / new_inc;
    std::size_t n = static_cast<std::size_t>((long long)steps.numerator()) + 1;
    out.coeffs_.assign(n, Coefficient::zero());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        Rational off = Rational((long long)j) * inc_;
        Rational idx = off / new_inc;
        out.coeffs_[static_cast<std::size_t>((long long)idx.numerator())] = coeffs_[j];
    }
    detail::note_coeff_list_size(out.coeffs_.size());
    return out;
}

inline SeriesRep normalize(const SeriesRep& s) {
    return SeriesRep::make(s.alpha(), s.inc(), s.coeffs(), s.order());
}

// Builds a series from loose (exponent, coefficient) terms: the grid is the
// gcd of the exponent offsets from the smallest one.
inline SeriesRep series_from_terms(std::vector<std::pair<Rational, Coefficient>> terms,
                                   OrderTerm order) {
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const auto& t) { return t.second.is_zero(); }),
                terms.end());
    if (terms.empty()) return SeriesRep::zero(std::move(order));
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Combine duplicate exponents.
    std::vector<std::pair<Rational, Coefficient>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second = merged.back().second + t.second;
        else
            merged.push_back(std::move(t));
    }
    Rational alpha = merged.front().first;
    Rational g(0);
    for (const auto& [e, c] : merged) g = rational_gcd(g, e - alpha);
    if (g.is_zero()) {
        return SeriesRep::make(alpha, Rational(0), {merged.front().second}, std::move(order));
    }
    Rational span = (merged.back().first - alpha) / g;
    std::size_t n = static_cast<std::size_t>((long long)span.numerator()) + 1;
    std::vector<Coefficient> coeffs(n, Coefficient::zero());
    for (auto& [e, c] : merged) {
        Rational idx = (e - alpha) / g;
        coeffs[static_cast<std::size_t>((long long)idx.numerator())] = std::move(c);
    }
    return SeriesRep::make(std::move(alpha), std::move(g), std::move(coeffs), std::move(order));
}

// Common-grid copies for addition: shared increment (gcd of the increments
// and of the alpha difference), each operand keeping its own dominant
// exponent on that grid.
inline std::pair<SeriesRep, SeriesRep> align(const SeriesRep& u, const SeriesRep& v) {
    if (!u.has_terms() || !v.has_terms()) return {u, v};
    Rational g = rational_gcd(rational_gcd(u.inc(), v.inc()), u.alpha() - v.alpha());
    if (g.is_zero()) return {u, v};  // identical single-term grid
    return {u.regrid(g), v.regrid(g)};
}

// Removes every term with exponent > k. Discarded terms fold into the order
// term (they are known), so e.g. dropping a known z^3 against an o(z^5) tail
// reports Theta(z^3); with nothing to drop the series is returned unchanged.
inline SeriesRep truncate(const SeriesRep& s, const Rational& k) {
    if (!s.has_terms() || s.degree() <= ExtRational(k)) return s;
    std::vector<Coefficient> kept;
    OrderTerm ord = s.order();
    // Fold from the smallest discarded exponent upward.
    std::vector<Rational> folded;
    for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
        Rational e = s.exponent_at(j);
        if (e <= k) {
            kept.push_back(s.coeffs()[j]);
        } else if (!s.coeffs()[j].is_zero()) {
            folded.push_back(e);
        }
    }
    for (const auto& e : folded) ord = fold_known_term(e, ord);
    return SeriesRep::make(s.alpha(), s.inc(), std::move(kept), std::move(ord));
}

inline ExtRational dominant_exponent(const SeriesRep& s) { return s.dominant_exponent(); }
inline ExtRational degree(const SeriesRep& s) { return s.degree(); }

// A finished expansion: the internal-variable series plus the frame that maps
// it back to the user's variable for display.
struct SeriesResult {
    SeriesRep body;
    ExpansionFrame frame;
};

}  // namespace pkx
