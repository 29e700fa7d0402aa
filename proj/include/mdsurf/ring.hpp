// The two coefficient rings of the engine: exact rationals and multivariate
// integer polynomials. Algorithms are templated on the element type and use
// RingOps<R> for the handful of operations whose spelling differs.
#pragma once

#include <string>

#include <gmpxx.h>

#include "mdsurf/error.hpp"
#include "mdsurf/poly.hpp"
#include "mdsurf/weight.hpp"

namespace mdsurf {

template <class R>
struct RingOps;

template <>
struct RingOps<mpq_class> {
    static constexpr bool is_field = true;
    static const char* name() { return "rational"; }

    static mpq_class zero() { return mpq_class(0); }
    static mpq_class one() { return mpq_class(1); }
    static mpq_class from_int(long n) { return mpq_class(n); }
    static bool is_zero(const mpq_class& x) { return x == 0; }

    static mpq_class from_weight(const Weight& w, const SymbolTable& symbols) {
        if (w.is_symbol())
            throw input_error("symbolic weight '" + symbols.name(*w.sym) +
                              "' requires the polynomial ring");
        return w.value;
    }

    static mpq_class div(const mpq_class& a, const mpq_class& b) { return a / b; }

    // |x|, plus the "all counts nonnegative" sanity of the theorem's sign
    // normalization (trivial for a number).
    static mpq_class abs_normalize(const mpq_class& x) { return abs(x); }
    static bool all_nonnegative(const mpq_class& x) { return x >= 0; }

    // Exact division by 2^g. For integer values this asserts integer
    // divisibility (any remainder means an upstream orientation bug);
    // genuine non-integer rationals divide exactly anyway.
    static mpq_class div_pow2_exact(const mpq_class& x, unsigned g) {
        if (x.get_den() == 1) {
            mpz_class num = x.get_num();
            check(mpz_divisible_2exp_p(num.get_mpz_t(), g) != 0,
                  "integer value not divisible by 2^genus");
        }
        mpq_class d;
        mpz_class two_g;
        mpz_ui_pow_ui(two_g.get_mpz_t(), 2, g);
        d = mpq_class(two_g);
        return x / d;
    }

    static std::string to_string(const mpq_class& x, const SymbolTable&) {
        return x.get_str();
    }
};

template <>
struct RingOps<Poly> {
    static constexpr bool is_field = false;
    static const char* name() { return "polynomial"; }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly::constant(1); }
    static Poly from_int(long n) { return Poly::constant(mpz_class(n)); }
    static bool is_zero(const Poly& x) { return x.is_zero(); }

    static Poly from_weight(const Weight& w, const SymbolTable& symbols) {
        if (w.is_symbol()) return Poly::variable(*w.sym);
        if (w.value.get_den() != 1)
            throw input_error("weight " + w.value.get_str() +
                              " is not an integer; the polynomial ring has "
                              "integer coefficients (use --ring rational)");
        return Poly::constant(w.value.get_num());
    }

    static Poly div(const Poly&, const Poly&) {
        throw invariant_error("polynomial ring does not support division");
    }

    static Poly abs_normalize(const Poly& x) {
        return x.least_term_sign() < 0 ? -x : x;
    }
    static bool all_nonnegative(const Poly& x) {
        return x.all_coefficients_nonnegative();
    }

    static Poly div_pow2_exact(const Poly& x, unsigned g) {
        return x.div_pow2_exact(g);
    }

    static std::string to_string(const Poly& x, const SymbolTable& symbols) {
        return x.to_string(symbols);
    }
};

} // namespace mdsurf
