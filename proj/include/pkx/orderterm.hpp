#pragma once

// Error-order descriptors o/O/Theta/exact and their algebra. Operational
// semantics are exponent-wise: littleO(v) promises every omitted term has
// exponent > v, bigO(v) and theta(v) promise >= v (theta with a generically
// present term at v), exact promises nothing is omitted (rendered
// Theta(z^inf)).

#include <string>

#include "pkx/rational.hpp"

namespace pkx {

enum class OrderKind { LittleO, BigO, Theta, Exact };

struct OrderTerm {
    OrderKind kind = OrderKind::Exact;
    ExtRational nu = ExtRational::pos_inf();  // exact <=> nu = +inf

    static OrderTerm exact() { return {OrderKind::Exact, ExtRational::pos_inf()}; }
    static OrderTerm little_o(Rational v) { return {OrderKind::LittleO, ExtRational(std::move(v))}; }
    static OrderTerm big_o(Rational v) { return {OrderKind::BigO, ExtRational(std::move(v))}; }
    static OrderTerm theta(Rational v) { return {OrderKind::Theta, ExtRational(std::move(v))}; }

    bool is_exact() const { return kind == OrderKind::Exact; }

    // Largest exponent a stored term may have under this order.
    bool admits_degree(const Rational& e) const {
        if (is_exact()) return true;
        ExtRational ee{e};
        return kind == OrderKind::LittleO ? ee <= nu : ee < nu;
    }

    friend bool operator==(const OrderTerm& a, const OrderTerm& b) {
        return a.kind == b.kind && a.nu == b.nu;
    }

    std::string to_string(const std::string& var = "z") const {
        const char* k = kind == OrderKind::LittleO ? "o"
                       : kind == OrderKind::BigO    ? "O"
                                                    : "Theta";
        return std::string(k) + "(" + var + "^" +
               (nu.is_finite() && nu.finite().is_integer() && !nu.finite().is_negative()
                    ? nu.to_string()
                    : "(" + nu.to_string() + ")") +
               ")";
    }
};

// Sum-of-errors propagation: exact is the identity, a strictly lower exponent
// dominates outright, and equal exponents join by the published rules
// (Theta+Theta -> O because the unknown parts may cancel, Theta+o -> Theta,
// anything with O -> O).
inline OrderTerm combine_orders(const OrderTerm& a, const OrderTerm& b) {
    if (a.is_exact()) return b;
    if (b.is_exact()) return a;
    if (a.nu < b.nu) return a;
    if (b.nu < a.nu) return b;
    OrderKind k;
    if (a.kind == OrderKind::BigO || b.kind == OrderKind::BigO) k = OrderKind::BigO;
    else if (a.kind == OrderKind::Theta && b.kind == OrderKind::Theta) k = OrderKind::BigO;
    else if (a.kind == OrderKind::Theta || b.kind == OrderKind::Theta) k = OrderKind::Theta;
    else k = OrderKind::LittleO;
    return {k, a.nu};
}

// Folding a discarded stored term (known nonzero coefficient) at exponent e
// into an order term. Unlike combine_orders, a tie against Theta stays Theta:
// the folded coefficient is known and generically does not cancel the error's
// dominant part.
inline OrderTerm fold_known_term(const Rational& e, const OrderTerm& ord) {
    if (ord.is_exact()) return OrderTerm::theta(e);
    ExtRational ee{e};
    if (ee < ord.nu) return OrderTerm::theta(e);
    if (ee > ord.nu) return ord;
    switch (ord.kind) {
        case OrderKind::LittleO: return OrderTerm::theta(e);  // the term now leads the omissions
        case OrderKind::Theta: return OrderTerm::theta(e);
        default: return ord;  // BigO stays BigO
    }
}

// Shift by a rational exponent (multiplying by a known monomial z^d).
inline OrderTerm shift_order(const OrderTerm& ord, const Rational& d) {
    if (ord.is_exact()) return ord;
    return {ord.kind, ord.nu + d};
}

// Error-times-error contribution in a product; exact absorbs (no cross term).
inline OrderTerm multiply_orders(const OrderTerm& a, const OrderTerm& b) {
    if (a.is_exact() || b.is_exact()) return OrderTerm::exact();
    ExtRational nu = a.nu.is_finite() && b.nu.is_finite()
                         ? ExtRational(a.nu.finite() + b.nu.finite())
                         : ExtRational::pos_inf();
    OrderKind k;
    if (a.kind == OrderKind::LittleO || b.kind == OrderKind::LittleO) k = OrderKind::LittleO;
    else if (a.kind == OrderKind::BigO || b.kind == OrderKind::BigO) k = OrderKind::BigO;
    else k = OrderKind::Theta;
    return {k, nu};
}

// Joining the independent contributions to a product's error. Same as
// combine_orders except that two Theta contributions tying at one exponent
// stay Theta: in an integral coefficient domain the generic position is that
// the known dominant factors do not conspire to cancel.
inline OrderTerm join_product_contributions(const OrderTerm& a, const OrderTerm& b) {
    if (a.is_exact()) return b;
    if (b.is_exact()) return a;
    if (a.nu != b.nu) return a.nu < b.nu ? a : b;
    if (a.kind == OrderKind::Theta && b.kind == OrderKind::Theta) return a;
    return combine_orders(a, b);
}

}  // namespace pkx
