#include "mdsurf/poly.hpp"

#include <algorithm>
#include <map>

#include "mdsurf/error.hpp"

namespace mdsurf {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() ||
            (i < factors.size() && factors[i].first < o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            r.factors.push_back(o.factors[j++]);
        } else {
            r.factors.emplace_back(factors[i].first,
                                   factors[i].second + o.factors[j].second);
            ++i, ++j;
        }
    }
    return r;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: the first variable (lowest id) where exponents differ
    // decides; the higher exponent sorts first.
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first < b.factors[j].first) return true;  // a has it, b has 0
        if (b.factors[j].first < a.factors[i].first) return false;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second;
        ++i, ++j;
    }
    // One ran out; the one still holding a variable has positive exponent
    // on an earlier slot only if the other is exhausted.
    return i < a.factors.size();
}

Poly Poly::constant(const mpz_class& c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(Monomial::one(), c);
    return p;
}

Poly Poly::variable(SymbolId v) {
    Poly p;
    p.terms_.emplace_back(Monomial::var(v), mpz_class(1));
    return p;
}

Poly Poly::term(const mpz_class& c, const Monomial& m) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

unsigned Poly::degree() const {
    return terms_.empty() ? 0 : terms_.back().first.total_degree();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && monomial_less(terms_[i].first, o.terms_[j].first))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() ||
                   monomial_less(o.terms_[j].first, terms_[i].first)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    auto cmp = [](const Monomial& a, const Monomial& b) {
        return monomial_less(a, b);
    };
    std::map<Monomial, mpz_class, decltype(cmp)> acc(cmp);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    Poly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, c);
    return r;
}

int Poly::least_term_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.front().second);
}

bool Poly::all_coefficients_nonnegative() const {
    for (auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

Poly Poly::div_pow2_exact(unsigned g) const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) {
        check(mpz_divisible_2exp_p(c.get_mpz_t(), g) != 0,
              "coefficient not divisible by 2^genus");
        mpz_class q;
        mpz_fdiv_q_2exp(q.get_mpz_t(), c.get_mpz_t(), g);
        c = std::move(q);
    }
    return r;
}

mpq_class Poly::evaluate(const std::vector<mpq_class>& values) const {
    mpq_class total = 0;
    for (auto& [m, c] : terms_) {
        mpq_class t(c);
        for (auto& [v, e] : m.factors) {
            check(v < values.size(), "evaluate: missing variable value");
            for (std::uint32_t k = 0; k < e; ++k) t *= values[v];
        }
        total += t;
    }
    return total;
}

std::string Poly::to_string(const SymbolTable& symbols) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        bool need_star = false;
        if (a != 1 || m.factors.empty()) {
            out += a.get_str();
            need_star = true;
        }
        for (auto& [v, e] : m.factors) {
            if (need_star) out += "*";
            out += symbols.name(v);
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
    }
    return out;
}

} // namespace mdsurf
