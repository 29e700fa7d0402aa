// Labelled skew-symmetric matrices and exact Pfaffians.
//
// Three evaluation routes:
//   pfaffian_definition — signed sum over perfect matchings of indices; the
//                         reference oracle, cost (n-1)!!, guarded small.
//   pfaffian            — fast path. Fields: skew elimination, O(n^3).
//                         Non-fields (polynomials): Laplace expansion along
//                         the first live row, memoized on index subsets.
//   determinant         — subset DP (division-free), for Pf^2 = det checks.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdsurf/error.hpp"
#include "mdsurf/ring.hpp"

namespace mdsurf {

template <class R>
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t n)
        : n_(n), a_(n * n, RingOps<R>::zero()) {
        labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<int>(i);
    }

    std::size_t size() const { return n_; }

    const R& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    // Sets entry (i, j) and mirrors -value into (j, i).
    void set(std::size_t i, std::size_t j, const R& v) {
        check(i != j || RingOps<R>::is_zero(v), "nonzero diagonal in skew matrix");
        a_[i * n_ + j] = v;
        if (i != j) a_[j * n_ + i] = -v;
    }

    void add(std::size_t i, std::size_t j, const R& v) {
        check(i != j, "cannot add to a skew diagonal entry");
        a_[i * n_ + j] += v;
        a_[j * n_ + i] -= v;
    }

    std::vector<int>& labels() { return labels_; }
    const std::vector<int>& labels() const { return labels_; }

    bool is_skew() const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!RingOps<R>::is_zero(at(i, i))) return false;
            for (std::size_t j = i + 1; j < n_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        }
        return true;
    }

    // Swaps rows i,j and columns i,j (negates the Pfaffian).
    void swap_index_pair(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t t = 0; t < n_; ++t) std::swap(a_[i * n_ + t], a_[j * n_ + t]);
        for (std::size_t t = 0; t < n_; ++t) std::swap(a_[t * n_ + i], a_[t * n_ + j]);
        std::swap(labels_[i], labels_[j]);
    }

    // Returns the matrix with rows/columns `i` and `j` removed.
    SkewMatrix minor_pair(std::size_t i, std::size_t j) const {
        check(i != j && i < n_ && j < n_, "bad minor indices");
        SkewMatrix m(n_ - 2);
        std::vector<std::size_t> keep;
        keep.reserve(n_ - 2);
        for (std::size_t t = 0; t < n_; ++t)
            if (t != i && t != j) keep.push_back(t);
        for (std::size_t p = 0; p < keep.size(); ++p) {
            m.labels_[p] = labels_[keep[p]];
            for (std::size_t q = 0; q < keep.size(); ++q)
                m.a_[p * m.n_ + q] = at(keep[p], keep[q]);
        }
        return m;
    }

private:
    std::size_t n_;
    std::vector<R> a_; // row-major
    std::vector<int> labels_;
};

// E A E^T for E = I + lambda e_dst e_src^T: adds lambda * (row src) to row
// dst and the same for columns. Preserves skew-symmetry and the Pfaffian.
template <class R>
void add_scaled_row_col(SkewMatrix<R>& a, std::size_t src, std::size_t dst,
                        const R& lambda) {
    require(src != dst, "add_scaled_row_col: src and dst must differ");
    std::size_t n = a.size();
    std::vector<R> row_src(n);
    for (std::size_t t = 0; t < n; ++t) row_src[t] = a.at(src, t);
    // set() mirrors -v into the transposed slot, so one pass over row dst
    // performs the row and column operation together; the diagonal entry
    // (dst, dst) is skipped — its net change lambda^2 * a[src][src] is zero.
    for (std::size_t t = 0; t < n; ++t) {
        if (t == dst) continue;
        a.set(dst, t, a.at(dst, t) + lambda * row_src[t]);
    }
}

// Signed sum over perfect matchings of {0..n-1}; the sign is the parity of
// the number of crossing pairs. Reference implementation, small n only.
template <class R>
R pfaffian_definition(const SkewMatrix<R>& a) {
    std::size_t n = a.size();
    require(n <= 12, "pfaffian_definition guarded to n <= 12");
    if (n % 2 != 0) return RingOps<R>::zero();
    if (n == 0) return RingOps<R>::one();

    R total = RingOps<R>::zero();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(n, false);

    auto crossings = [&]() {
        int c = 0;
        for (std::size_t s = 0; s < pairs.size(); ++s)
            for (std::size_t t = s + 1; t < pairs.size(); ++t) {
                auto [p, q] = pairs[s];
                auto [r, u] = pairs[t]; // p < r by construction
                if (p < r && r < q && q < u) ++c;
            }
        return c;
    };

    auto rec = [&](auto&& self) -> void {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            R prod = RingOps<R>::one();
            for (auto [p, q] : pairs) prod *= a.at(p, q);
            if (crossings() % 2 != 0) prod = -prod;
            total += prod;
            return;
        }
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            pairs.emplace_back(i, j);
            self(self);
            pairs.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    rec(rec);
    return total;
}

namespace detail {

// Pfaffian by skew-symmetric elimination (field rings). O(n^3).
template <class R>
R pfaffian_elimination(SkewMatrix<R> a) {
    std::size_t n = a.size();
    if (n % 2 != 0) return RingOps<R>::zero();
    R pf = RingOps<R>::one();
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k;
        for (std::size_t j = k + 1; j < n; ++j)
            if (!RingOps<R>::is_zero(a.at(k, j))) {
                piv = j;
                break;
            }
        if (piv == k) return RingOps<R>::zero(); // row k identically zero
        if (piv != k + 1) {
            a.swap_index_pair(piv, k + 1);
            pf = -pf;
        }
        pf *= a.at(k, k + 1);
        for (std::size_t i = k + 2; i < n; ++i) {
            if (RingOps<R>::is_zero(a.at(k, i))) continue;
            R lambda = -RingOps<R>::div(a.at(k, i), a.at(k, k + 1));
            add_scaled_row_col(a, k + 1, i, lambda);
        }
    }
    return pf;
}

// Pfaffian by Laplace expansion along the first live index, memoized on the
// set of live indices. Division-free; meant for polynomial entries, n <= ~24.
template <class R>
class PfaffianMemo {
public:
    explicit PfaffianMemo(const SkewMatrix<R>& a) : a_(a) {
        require(a.size() <= 24,
                "matrix too large for the polynomial-ring pfaffian (24 rows "
                "max); the rational ring has no such cap");
    }

    R run() {
        std::size_t n = a_.size();
        if (n % 2 != 0) return RingOps<R>::zero();
        return eval((1u << n) - 1);
    }

private:
    R eval(std::uint32_t mask) {
        if (mask == 0) return RingOps<R>::one();
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;

        std::uint32_t rest = mask;
        std::size_t first = static_cast<std::size_t>(__builtin_ctz(rest));
        rest &= rest - 1;

        R total = RingOps<R>::zero();
        int pos = 0; // 0-based position of j among the indices after `first`
        for (std::uint32_t m = rest; m != 0; m &= m - 1, ++pos) {
            std::size_t j = static_cast<std::size_t>(__builtin_ctz(m));
            const R& entry = a_.at(first, j);
            if (RingOps<R>::is_zero(entry)) continue;
            R sub = eval(mask & ~(1u << first) & ~(1u << j));
            if (RingOps<R>::is_zero(sub)) continue;
            R term = entry * sub;
            // Expansion along the first row of the live submatrix: the term
            // for the (pos+2)-th live column carries sign (-1)^(pos).
            if (pos % 2 != 0) term = -term;
            total += term;
        }
        memo_.emplace(mask, total);
        return total;
    }

    const SkewMatrix<R>& a_;
    std::unordered_map<std::uint32_t, R> memo_;
};

} // namespace detail

template <class R>
R pfaffian(const SkewMatrix<R>& a) {
    if constexpr (RingOps<R>::is_field) {
        return detail::pfaffian_elimination(a);
    } else {
        detail::PfaffianMemo<R> memo(a);
        return memo.run();
    }
}

// Division-free determinant: row-by-row expansion DP over column subsets.
template <class R>
R determinant(const SkewMatrix<R>& a) {
    std::size_t n = a.size();
    require(n <= 20, "subset determinant guarded to n <= 20");
    if (n == 0) return RingOps<R>::one();
    std::unordered_map<std::uint32_t, R> memo;
    std::uint32_t full = (1u << n) - 1;

    auto rec = [&](auto&& self, std::uint32_t cols) -> R {
        if (cols == 0) return RingOps<R>::one();
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
        R total = RingOps<R>::zero();
        int pos = 0;
        for (std::uint32_t m = cols; m != 0; m &= m - 1, ++pos) {
            std::size_t c = static_cast<std::size_t>(__builtin_ctz(m));
            const R& entry = a.at(row, c);
            if (!RingOps<R>::is_zero(entry)) {
                R term = entry * self(self, cols & ~(1u << c));
                if (pos % 2 != 0) term = -term;
                total += term;
            }
        }
        memo.emplace(cols, total);
        return total;
    };
    return rec(rec, full);
}

// One Laplace term of the expansion of Pf(A) along row i.
template <class R>
struct LaplaceTerm {
    int sign; // +1 or -1
    R entry;
    SkewMatrix<R> minor;
};

// Pf(A) = sum over j != i of sign(i,j) * a_ij * Pf(A with i,j removed),
// where sign(i,j) = (-1)^(i + j + 1 + [i > j]) for 1-based i, j.
template <class R>
std::vector<LaplaceTerm<R>> laplace_expand(const SkewMatrix<R>& a, std::size_t i) {
    std::size_t n = a.size();
    require(n >= 2 && n % 2 == 0, "laplace_expand needs even size >= 2");
    require(i < n, "laplace_expand: row out of range");
    std::vector<LaplaceTerm<R>> terms;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        int theta = (i > j) ? 1 : 0; // Heaviside of (i - j), i != j
        int sign = ((i + 1) + (j + 1) + 1 + theta) % 2 == 0 ? 1 : -1;
        terms.push_back({sign, a.at(i, j), a.minor_pair(i, j)});
    }
    return terms;
}

// Evaluates a polynomial matrix at a rational point (for cross-validation of
// the two Pfaffian routes).
inline SkewMatrix<mpq_class> evaluate_matrix(const SkewMatrix<Poly>& a,
                                             const std::vector<mpq_class>& values) {
    SkewMatrix<mpq_class> r(a.size());
    r.labels() = a.labels();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            r.set(i, j, a.at(i, j).evaluate(values));
    return r;
}

} // namespace mdsurf
