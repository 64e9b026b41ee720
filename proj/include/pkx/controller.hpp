#pragma once

// The as-requested-order driver. expand() walks the expression, asks the
// operand-order table what each sub-expression must deliver, seeds unknown
// dominant exponents from the guess heuristics, and iterates (doubling the
// increment) whenever a guess falls short. Every sub-result is finalized to
// the little-o contract: degree <= k, order o(z^k) unless proven exact.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkx/elemfun.hpp"
#include "pkx/errors.hpp"
#include "pkx/frame.hpp"
#include "pkx/guess.hpp"
#include "pkx/parser.hpp"

namespace pkx {

struct Budget {
    int iterations_per_node = 24;
    std::optional<Rational> max_order_span;  // default 4|k| + 64
};

struct ExpandStats {
    long long re_requests = 0;   // confirming or corrective re-expansions
    long long expansions = 0;    // sub-requests issued
    Rational max_requested_order{0};
};

struct OrderRequest {
    Rational k;
    Budget budget;
};

// ---------------------------------------------------------------------------
// Requested operand orders for a result of order o(z^k) (the operand-order
// table). DominantInfo carries whichever dominants the row consumes.

enum class TableOp {
    Add, Mul, Div, Pow,
    Exp, Cos, Cosh, Sin, Tan, Sinh, Tanh, Ln,
    Arctanh, Arctan, Arcsinh, Arcsin, Arccos, Arccosh,
};

struct DominantInfo {
    std::optional<Rational> alpha;  // u's dominant exponent
    std::optional<Rational> beta;   // v's dominant exponent (binary rows)
    std::optional<Rational> sigma;  // offset of the next term past a branch value
    bool branch_point = false;      // c z^alpha sits at the row's branch value
    Rational gamma;                 // power-row exponent
};

struct OperandOrders {
    std::optional<Rational> m, n;
    bool essential = false;
};

inline OperandOrders required_operand_orders(TableOp op, const Rational& k,
                                             const DominantInfo& d) {
    auto alpha = [&] { return d.alpha.value_or(Rational(0)); };
    auto beta = [&] { return d.beta.value_or(Rational(0)); };
    switch (op) {
        case TableOp::Add:
            return {k, k, false};
        case TableOp::Mul:
            return {k - beta(), k - alpha(), false};
        case TableOp::Div:
            return {k + beta(), k - alpha() + Rational(2) * beta(), false};
        case TableOp::Pow:
            return {k + (Rational(1) - d.gamma) * alpha(), std::nullopt, false};
        case TableOp::Exp:
        case TableOp::Cos:
        case TableOp::Cosh:
        case TableOp::Sin:
        case TableOp::Tan:
        case TableOp::Sinh:
        case TableOp::Tanh:
            if (alpha().is_negative()) return {std::nullopt, std::nullopt, true};
            return {k, std::nullopt, false};
        case TableOp::Ln:
            return {k + alpha(), std::nullopt, false};
        case TableOp::Arctan:
        case TableOp::Arctanh:
            if (d.branch_point) return {k + d.sigma.value_or(Rational(0)), std::nullopt, false};
            if (alpha().is_negative()) return {k + Rational(2) * alpha(), std::nullopt, false};
            return {k, std::nullopt, false};
        case TableOp::Arcsin:
        case TableOp::Arcsinh:
        case TableOp::Arccos:
        case TableOp::Arccosh:
            if (d.branch_point)
                return {k + d.sigma.value_or(Rational(0)) / Rational(2), std::nullopt, false};
            if (alpha().is_negative()) return {k + alpha(), std::nullopt, false};
            return {k, std::nullopt, false};
    }
    return {k, std::nullopt, false};
}

inline TableOp table_op_for(Func f) {
    switch (f) {
        case Func::Exp: return TableOp::Exp;
        case Func::Ln: return TableOp::Ln;
        case Func::Sin: return TableOp::Sin;
        case Func::Cos: return TableOp::Cos;
        case Func::Tan: return TableOp::Tan;
        case Func::Sinh: return TableOp::Sinh;
        case Func::Cosh: return TableOp::Cosh;
        case Func::Tanh: return TableOp::Tanh;
        case Func::Arcsin: return TableOp::Arcsin;
        case Func::Arccos: return TableOp::Arccos;
        case Func::Arctan: return TableOp::Arctan;
        case Func::Arcsinh: return TableOp::Arcsinh;
        case Func::Arccosh: return TableOp::Arccosh;
        case Func::Arctanh: return TableOp::Arctanh;
    }
    return TableOp::Exp;
}

// ---------------------------------------------------------------------------

namespace detail {

// Doubling increments seeded from guessInc, with the 0 -> 1 floor.
struct DeltaIter {
    std::optional<Rational> delta;
    Rational next(const ExprPtr& e) {
        if (!delta) {
            Rational g = guess_inc(e).value;
            delta = g.is_zero() ? Rational(1) : g;
        } else {
            *delta = *delta * Rational(2);
        }
        return *delta;
    }
};

inline bool delivered(const SeriesRep& s, const Rational& k) {
    if (s.order().is_exact()) return true;
    ExtRational kk{k};
    if (s.order().nu > kk) return true;
    return s.order().nu == kk && s.order().kind == OrderKind::LittleO;
}

inline std::size_t nonzero_count(const SeriesRep& s) {
    std::size_t n = 0;
    for (const auto& c : s.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}

}  // namespace detail

class Expander {
public:
    Expander(const Budget& budget, const Rational& top_k, ExpandStats* stats)
        : budget_(budget), stats_(stats) {
        span_limit_ = budget.max_order_span
                          ? *budget.max_order_span
                          : Rational(4) * top_k.abs() + Rational(64);
    }

    // As-requested result: degree <= k, order littleO(k) unless proven exact.
    SeriesRep expand(const ExprPtr& u, const Rational& k) {
        note_request(k);
        SeriesRep raw = compute(u, k);
        SeriesRep cut = truncate(raw, k);
        if (!detail::delivered(cut, k))
            throw Error(ErrorKind::ResourceExhausted,
                        "could not certify the requested order o(z^" + k.to_string() + ")");
        if (!cut.order().is_exact()) return cut.with_order(OrderTerm::little_o(k));
        return cut;
    }

    std::pair<SeriesRep, SeriesRep> product_operands(const ExprPtr& u_expr,
                                                     const ExprPtr& v_expr, const Rational& k);

private:
    Budget budget_;
    ExpandStats* stats_;
    Rational span_limit_;

    void note_request(const Rational& k) {
        if (stats_) {
            ++stats_->expansions;
            if (k.abs() > stats_->max_requested_order) stats_->max_requested_order = k.abs();
        }
        if (k.abs() > span_limit_)
            throw Error(ErrorKind::ResourceExhausted,
                        "requested order span exceeded (order " + k.to_string() + ")");
    }
    void note_iteration() {
        if (stats_) ++stats_->re_requests;
    }
    [[noreturn]] void exhausted(const char* what) {
        throw Error(ErrorKind::ResourceExhausted,
                    std::string("iteration budget exhausted in ") + what +
                        " (essential singularity, hidden constancy or insufficient"
                        " simplification?)");
    }

    SeriesRep compute(const ExprPtr& u, const Rational& k) {
        switch (u->kind()) {
            case Expr::Kind::Rational:
                return SeriesRep::constant(Coefficient::from_rational(u->rational()));
            case Expr::Kind::ImaginaryUnit:
                return SeriesRep::constant(Coefficient::imaginary_unit());
            case Expr::Kind::Symbol:
                if (u->symbol() == internal_variable_name())
                    return SeriesRep::monomial(Coefficient::one(), Rational(1));
                return SeriesRep::constant(Coefficient::from_atom(Atom::named(u->symbol())));
            case Expr::Kind::Sum:
                return compute_sum(u, k);
            case Expr::Kind::Product:
                return compute_product(u->operands(), k);
            case Expr::Kind::Power: {
                if (auto q = power_rational_exponent(u)) return compute_pow(u->base(), *q, k);
                // b^e with symbolic exponent: exp(e ln b)
                ExprPtr rewritten = make_apply(
                    Func::Exp, make_product({u->exponent(), make_apply(Func::Ln, u->base())}));
                return compute(rewritten, k);
            }
            case Expr::Kind::Apply:
                return compute_apply(u->func(), u->argument(), k);
        }
        throw Error(ErrorKind::ResourceExhausted, "unreachable expression kind");
    }

    // --- sums ---------------------------------------------------------------

    SeriesRep compute_sum(const ExprPtr& u, const Rational& k) {
        const auto& ops = u->operands();
        auto sum_at = [&](const Rational& kk, ExtRational* min_alpha, bool* all_exact) {
            SeriesRep acc = SeriesRep::zero(OrderTerm::exact());
            for (const auto& op : ops) {
                SeriesRep s = expand(op, kk);
                if (min_alpha) *min_alpha = ext_min(*min_alpha, s.dominant_exponent());
                if (all_exact && !s.order().is_exact()) *all_exact = false;
                acc = series_add(acc, s);
            }
            return acc;
        };
        ExtRational min_alpha = ExtRational::pos_inf();
        bool all_exact = true;
        SeriesRep acc = sum_at(k, &min_alpha, &all_exact);
        // When the operands' leading terms cancelled (the sum's dominant
        // exponent exceeds the smallest operand dominant), re-request once
        // past the gap to confirm what the cancellation exposed; keep
        // doubling while the head stays empty. Exact operands hide nothing.
        if (all_exact || acc.dominant_exponent() == min_alpha) return acc;
        detail::DeltaIter delta;
        Rational gap = acc.has_terms() && min_alpha.is_finite()
                           ? acc.alpha() - min_alpha.finite()
                           : delta.next(u);
        Rational k2 = k + gap;
        for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
            note_iteration();
            SeriesRep wide = sum_at(k2, nullptr, nullptr);
            if (wide.has_terms() || wide.order().is_exact()) return wide;
            k2 = k + delta.next(u);
        }
        return acc;  // nothing surfaced: 0 + o(z^k) is still a valid answer
    }

    // --- products -----------------------------------------------------------

    SeriesRep compute_product(const std::vector<ExprPtr>& factors, const Rational& k);

    // --- powers ---------------------------------------------------------------

    SeriesRep compute_pow(const ExprPtr& base, const Rational& gamma, const Rational& k);

    // --- function applications ------------------------------------------------

    SeriesRep compute_apply(Func f, const ExprPtr& arg, const Rational& k);

    SeriesRep apply_kernel(Func f, const SeriesRep& a, const Rational& k) {
        switch (f) {
            case Func::Exp: return series_exp(a, k);
            case Func::Ln: return series_log(a, k);
            case Func::Sin: return series_sin(a, k);
            case Func::Cos: return series_cos(a, k);
            case Func::Tan: return series_tan(a, k);
            case Func::Sinh: return series_sinh(a, k);
            case Func::Cosh: return series_cosh(a, k);
            case Func::Tanh: return series_tanh(a, k);
            case Func::Arcsin: return series_asin(a, k);
            case Func::Arccos: return series_acos(a, k);
            case Func::Arctan: return series_atan(a, k);
            case Func::Arcsinh: return series_asinh(a, k);
            case Func::Arccosh: return series_acosh(a, k);
            case Func::Arctanh: return series_atanh(a, k);
        }
        throw Error(ErrorKind::ResourceExhausted, "unreachable function");
    }

    // Branch values whose presence switches the operand-order row.
    static std::vector<Coefficient> branch_values(Func f) {
        switch (f) {
            case Func::Arctan:
            case Func::Arcsinh:
                return {Coefficient::imaginary_unit(), -Coefficient::imaginary_unit()};
            case Func::Arcsin:
            case Func::Arccos:
            case Func::Arctanh:
            case Func::Arccosh:
                return {Coefficient::one(), -Coefficient::one()};
            default:
                return {};
        }
    }

    // Dominant offset sigma of (arg - branch value); nullopt when the
    // difference is identically zero.
    std::optional<Rational> discover_branch_offset(const ExprPtr& arg, const Coefficient& b) {
        ExprPtr diff = expr_sub(arg, b.to_expr(internal_symbol()));
        Rational kk = rational_max(guess_de(diff).value, Rational(0));
        detail::DeltaIter delta;
        for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
            SeriesRep s = expand(diff, kk);
            if (s.has_terms()) return s.alpha();
            if (s.order().is_exact()) return std::nullopt;
            note_iteration();
            kk = kk + delta.next(diff);
        }
        exhausted("branch-offset discovery");
    }
};

template <typename SumAt>
SeriesRep Expander::confirm_sum(const ExprPtr& u, SeriesRep acc, const Rational& k,
                                SumAt sum_at) {
    // Operand dominants for the cancellation test come from the guesses'
    // certain side: recompute cheaply from the accumulated value instead.
    // A sum whose operands were all exact cannot hide anything.
    bool all_exact_children = true;
    ExtRational min_alpha = ExtRational::pos_inf();
    for (const auto& op : u->operands()) {
        SeriesRep s = expand(op, k);
        if (!s.order().is_exact()) all_exact_children = false;
        min_alpha = ext_min(min_alpha, s.dominant_exponent());
    }
    if (all_exact_children || acc.dominant_exponent() == min_alpha) return acc;

    // Dominant terms cancelled: one confirming re-request past the gap; for a
    // fully cancelled head, keep doubling until a term shows up or the budget
    // ends (an empty result is still a valid o(z^k) answer).
    detail::DeltaIter delta;
    Rational gap = acc.has_terms() && min_alpha.is_finite()
                       ? acc.alpha() - min_alpha.finite()
                       : delta.next(u);
    Rational k2 = k + gap;
    for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
        note_iteration();
        SeriesRep wide = sum_at(k2);
        if (wide.has_terms() || wide.order().is_exact()) return wide;
        k2 = k + delta.next(u);
    }
    return acc;  // nothing surfaced: 0 + o(z^k) is the honest answer
}

inline std::pair<SeriesRep, SeriesRep> Expander::product_operands(const ExprPtr& u_expr,
                                                                  const ExprPtr& v_expr,
                                                                  const Rational& k) {
    GuessReport ga = guess_de(u_expr);
    GuessReport gb = guess_de(v_expr);
    Rational alpha = ga.value, beta = gb.value;
    detail::DeltaIter du, dv;
    Rational m0 = k - beta, n0 = k - alpha;
    Rational m = m0, n = n0;
    SeriesRep U = SeriesRep::zero(OrderTerm::little_o(m));
    SeriesRep V = SeriesRep::zero(OrderTerm::little_o(n));
    for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
        U = expand(u_expr, m);
        if (U.has_terms()) {
            alpha = U.alpha();
            n = k - alpha;
            V = expand(v_expr, n);
            if (!V.has_terms()) return {U, V};
            beta = V.alpha();
            if (m == k - beta) return {U, V};
            if (m > k - beta) return {truncate(U, k - beta), V};
            note_iteration();
            return {expand(u_expr, k - beta), V};
        }
        V = expand(v_expr, n);
        if (V.has_terms()) {
            beta = V.alpha();
            m = k - beta;
            note_iteration();
            U = expand(u_expr, m);
            if (!U.has_terms()) return {U, V};
            alpha = U.alpha();
            if (n == k - alpha) return {U, V};
            if (n > k - alpha) return {U, truncate(V, k - alpha)};
            note_iteration();
            return {U, expand(v_expr, k - alpha)};
        }
        if (U.order().is_exact() && V.order().is_exact()) return {U, V};  // genuine zeros
        if (m + n >= k) return {U, V};
        note_iteration();
        m = rational_min(m0 + du.next(u_expr), k - n);
        n = rational_min(n0 + dv.next(v_expr), k - m);
    }
    exhausted("product iteration");
}

inline SeriesRep Expander::compute_product(const std::vector<ExprPtr>& factors,
                                           const Rational& k) {
    if (factors.size() == 1) return expand(factors[0], k);
    ExprPtr u_expr = factors[0];
    ExprPtr v_expr = factors.size() == 2
                         ? factors[1]
                         : make_product(std::vector<ExprPtr>(factors.begin() + 1, factors.end()));
    GuessReport gu = guess_de(u_expr);
    GuessReport gv = guess_de(v_expr);
    // Fast path: certainly-nonnegative lower bounds already push the product
    // past k, so it is 0 + o(z^k) without expanding anything.
    bool gu_trusted = gu.status == GuessStatus::Exact || gu.status == GuessStatus::LowerBound;
    bool gv_trusted = gv.status == GuessStatus::Exact || gv.status == GuessStatus::LowerBound;
    if (gu_trusted && gv_trusted && gu.value + gv.value > k)
        return SeriesRep::zero(OrderTerm::little_o(k));
    // Prefer as v the factor whose dominant-exponent guess is most reliable.
    if (gu.status == GuessStatus::Exact && gv.status != GuessStatus::Exact)
        std::swap(u_expr, v_expr);
    auto [U, V] = product_operands(u_expr, v_expr, k);
    return series_mul(U, V);
}

inline SeriesRep Expander::compute_pow(const ExprPtr& base, const Rational& gamma,
                                       const Rational& k) {
    if (gamma.is_zero()) return SeriesRep::constant(Coefficient::one());
    GuessReport g = guess_de(base);
    Rational m = required_operand_orders(TableOp::Pow, k, {g.value, {}, {}, false, gamma}).m
                     .value();
    detail::DeltaIter delta;
    for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
        SeriesRep B = expand(base, m);
        if (B.has_terms()) {
            Rational m_exact =
                required_operand_orders(TableOp::Pow, k, {B.alpha(), {}, {}, false, gamma}).m
                    .value();
            if (m < m_exact) {
                note_iteration();
                m = m_exact;
                continue;
            }
            return series_pow(B, gamma, k);
        }
        if (B.order().is_exact()) {
            if (gamma.is_negative())
                throw Error(ErrorKind::DivisionByZeroSeries, "zero series to a negative power");
            return SeriesRep::zero(OrderTerm::exact());
        }
        // Dominant unknown. For positive gamma, u in o(z^m) implies
        // u^gamma in o(z^(gamma m)); otherwise keep digging.
        if (gamma.is_positive() && gamma * m >= k)
            return SeriesRep::zero(OrderTerm::little_o(gamma * m));
        note_iteration();
        m = m + delta.next(base);
    }
    exhausted("power iteration");
}

inline SeriesRep Expander::compute_apply(Func f, const ExprPtr& arg, const Rational& k) {
    TableOp op = table_op_for(f);
    DominantInfo info;
    info.alpha = guess_de(arg).value;

    bool inverse_family = op == TableOp::Arcsin || op == TableOp::Arccos ||
                          op == TableOp::Arctan || op == TableOp::Arcsinh ||
                          op == TableOp::Arccosh || op == TableOp::Arctanh;
    if (inverse_family) {
        ExtendedValue v0 = eval_at_zero(arg);
        if (v0.is_finite()) {
            info.alpha = v0.value.is_zero() ? info.alpha : Rational(0);
            for (const auto& b : branch_values(f)) {
                if (v0.value == b) {
                    info.branch_point = true;
                    info.sigma = discover_branch_offset(arg, b, k);
                    if (!info.sigma) {
                        // argument identically the branch constant
                        return apply_kernel(f, SeriesRep::constant(b), k);
                    }
                    break;
                }
            }
            if (!info.branch_point && !v0.value.is_zero()) info.alpha = Rational(0);
        }
        // Infinite or indeterminate u(0): the guess decides (>= 0 requests
        // o(z^k) optimistically, negative goes through the alpha < 0 row).
    }

    OperandOrders oo = required_operand_orders(op, k, info);
    Rational m = oo.essential ? k : *oo.m;
    if (oo.essential) m = rational_max(k, Rational(0));  // classify before refusing

    detail::DeltaIter delta;
    Rational m_base = m;
    for (int iter = 0; iter < budget_.iterations_per_node; ++iter) {
        SeriesRep A = expand(arg, m);
        bool needs_alpha_gate = op == TableOp::Exp || op == TableOp::Cos || op == TableOp::Cosh ||
                                op == TableOp::Sin || op == TableOp::Tan ||
                                op == TableOp::Sinh || op == TableOp::Tanh;
        if (!A.has_terms() && !A.order().is_exact() && needs_alpha_gate && m.is_negative()) {
            // Hidden terms could still carry negative exponents; push the
            // window up to certify alpha >= 0 or expose a term.
            note_iteration();
            m = rational_max(Rational(0), m_base + delta.next(arg));
            continue;
        }
        if (A.has_terms()) {
            // Re-check the table with the revealed dominant exponent.
            DominantInfo seen = info;
            seen.alpha = A.alpha();
            OperandOrders again = required_operand_orders(op, k, seen);
            if (again.essential)
                throw Error(ErrorKind::EssentialSingularity,
                            std::string(func_name(f)) +
                                " of a series with negative dominant exponent: essential"
                                " singularity at the expansion point");
            if (*again.m > m) {
                note_iteration();
                m = *again.m;
                continue;
            }
        }
        SeriesRep result;
        try {
            result = apply_kernel(f, A, k);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InsufficientOrder) throw;
            note_iteration();
            m = m + delta.next(arg);
            continue;
        }
        if (detail::delivered(result, k)) return result;
        note_iteration();
        m = m + delta.next(arg);
    }
    exhausted(func_name(f));
}

// Offset sigma of the first term of (arg - branch_value), or nullopt when the
// difference is exactly zero.
inline std::optional<Rational> discover_branch_offset(const ExprPtr&, const Coefficient&,
                                                      const Rational&);

// ---------------------------------------------------------------------------
// Public driver API.

inline SeriesRep expand(const ExprPtr& internal_expr, const OrderRequest& req,
                        ExpandStats* stats = nullptr) {
    Expander ex(req.budget, req.k, stats);
    return ex.expand(internal_expr, req.k);
}

inline std::pair<SeriesRep, SeriesRep> product_operands(const ExprPtr& u, const ExprPtr& v,
                                                        const OrderRequest& req,
                                                        ExpandStats* stats = nullptr) {
    Expander ex(req.budget, req.k, stats);
    return ex.product_operands(u, v, req.k);
}

inline ExprPtr prepare_internal(const ExprPtr& user_expr, const ExpansionFrame& frame) {
    return collect_exponentials(to_internal(user_expr, frame), frame);
}

inline SeriesResult expand_expr(const ExprPtr& user_expr, const ExpansionFrame& frame,
                                const Rational& k, const Budget& budget = {},
                                ExpandStats* stats = nullptr) {
    SeriesRep body = expand(prepare_internal(user_expr, frame), {k, budget}, stats);
    return {std::move(body), frame};
}

inline SeriesResult expand_expr(const std::string& text, const ExpansionFrame& frame,
                                const Rational& k, const Budget& budget = {},
                                ExpandStats* stats = nullptr) {
    return expand_expr(parse(text), frame, k, budget, stats);
}

// Keeps the first n nonzero terms; the window then promises nothing past the
// n-th term's exponent.
inline SeriesRep truncate_to_terms(const SeriesRep& s, std::size_t n) {
    std::vector<std::pair<Rational, Coefficient>> kept;
    std::optional<Rational> last;
    for (std::size_t j = 0; j < s.coeffs().size() && kept.size() < n; ++j) {
        if (s.coeffs()[j].is_zero()) continue;
        kept.emplace_back(s.exponent_at(j), s.coeffs()[j]);
        last = s.exponent_at(j);
    }
    if (detail::nonzero_count(s) <= n && s.order().is_exact())
        return s;  // exact with no excess terms keeps its Theta(z^inf) marker
    OrderTerm ord = last ? OrderTerm::little_o(*last) : s.order();
    return series_from_terms(std::move(kept), std::move(ord));
}

inline SeriesResult n_terms(const ExprPtr& user_expr, const ExpansionFrame& frame,
                            std::size_t n, const Budget& budget = {},
                            ExpandStats* stats = nullptr) {
    if (n == 0) throw Error(ErrorKind::ResourceExhausted, "nterms: n must be positive");
    ExprPtr internal = prepare_internal(user_expr, frame);
    Rational k = guess_de(internal).value +
                 Rational(static_cast<long long>(n - 1)) * guess_inc(internal).value;
    Rational delta = guess_inc_top(internal);
    for (int iter = 0; iter < budget.iterations_per_node; ++iter) {
        SeriesRep s = expand(internal, {k, budget}, stats);
        std::size_t have = detail::nonzero_count(s);
        if (s.order().is_exact() && have <= n) return {s, frame};
        if (have >= n) return {truncate_to_terms(s, n), frame};
        if (stats) ++stats->re_requests;
        k += Rational(static_cast<long long>(n)) * delta;
        delta *= Rational(2);
    }
    throw Error(ErrorKind::ResourceExhausted,
                "nterms: could not expose the requested number of terms within budget");
}

inline SeriesResult dominant_term_of(const ExprPtr& user_expr, const ExpansionFrame& frame,
                                     const Budget& budget = {}, ExpandStats* stats = nullptr) {
    return n_terms(user_expr, frame, 1, budget, stats);
}

}  // namespace pkx
