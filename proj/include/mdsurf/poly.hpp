// Multivariate polynomials with arbitrary-precision integer coefficients.
//
// Terms are kept in a canonical order: ascending total degree, ties broken
// so that the monomial with the higher power of the earliest variable comes
// first (a*b before a*d before b*c). The printer walks terms in storage
// order, so printed output is canonical too.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mdsurf/symbols.hpp"

namespace mdsurf {

struct Monomial {
    // (variable, exponent) pairs, sorted by variable id, exponents > 0.
    std::vector<std::pair<SymbolId, std::uint32_t>> factors;

    static Monomial one() { return {}; }
    static Monomial var(SymbolId v) { return Monomial{{{v, 1}}}; }

    unsigned total_degree() const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    Monomial operator*(const Monomial& o) const;
};

// Canonical term order described above. A strict total order.
bool monomial_less(const Monomial& a, const Monomial& b);

class Poly {
public:
    Poly() = default; // zero
    explicit Poly(long c) { *this = constant(mpz_class(c)); }

    static Poly constant(const mpz_class& c);
    static Poly variable(SymbolId v);
    static Poly term(const mpz_class& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const; // 0 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Sign of the coefficient of the canonically-least term; 0 if zero.
    int least_term_sign() const;
    bool all_coefficients_nonnegative() const;

    // Divides every coefficient by 2^g; throws invariant_error if not exact.
    Poly div_pow2_exact(unsigned g) const;

    // Substitutes values[v] for each variable v. Every variable that occurs
    // must have an entry.
    mpq_class evaluate(const std::vector<mpq_class>& values) const;

    std::string to_string(const SymbolTable& symbols) const;

    const std::vector<std::pair<Monomial, mpz_class>>& terms() const {
        return terms_;
    }

private:
    // Sorted by monomial_less; no zero coefficients.
    std::vector<std::pair<Monomial, mpz_class>> terms_;
};

} // namespace mdsurf
