#pragma once

#include "modulilab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modulilab::algebra {

using Exponents = std::vector<unsigned>;

// Graded lexicographic, highest term first, so map iteration starts at the
// leading term and equal polynomials compare equal structurally.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over an exact coefficient ring R (Rat or
// FpElem). Immutable value semantics: every operation returns a new value.
// Two polynomials interoperate only over the identical ordered variable list.
template <class R>
class MPoly {
public:
    using TermMap = std::map<Exponents, R, GradedLexDesc>;

    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const R& c) {
        MPoly p(std::move(vars));
        if (!is_zero(c)) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    static MPoly variable(const std::vector<std::string>& vars, const std::string& name, const R& one) {
        const auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::invalid_argument("unknown variable: " + name);
        MPoly p(vars);
        Exponents e(vars.size(), 0);
        e[static_cast<size_t>(it - vars.begin())] = 1;
        p.terms_.emplace(std::move(e), one);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned t = 0;
            for (unsigned x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly pow(unsigned k) const {
        if (k == 0) {
            if (terms_.empty())
                throw std::domain_error("0^0 of polynomials is not defined here");
            return constant(vars_, one_like(terms_.begin()->second));
        }
        MPoly base = *this;
        std::optional<MPoly> acc;
        while (k > 0) {
            if (k & 1) acc = acc ? *acc * base : base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return *acc;
    }

    // Formal partial derivative in one variable.
    MPoly partial(const std::string& var) const {
        const size_t idx = var_index(var);
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents d = e;
            d[idx] -= 1;
            R coef = c;
            for (unsigned j = 1; j < e[idx]; ++j) coef = coef + c;
            r.add_term(d, coef);
        }
        return r;
    }

    // Simultaneous substitution; every variable of *this must be bound and
    // all binding targets must live over one common variable list.
    MPoly substitute(const std::map<std::string, MPoly>& bindings) const {
        if (bindings.empty()) throw std::invalid_argument("empty substitution");
        const std::vector<std::string>& tvars = bindings.begin()->second.vars_;
        std::vector<const MPoly*> images(vars_.size(), nullptr);
        for (size_t i = 0; i < vars_.size(); ++i) {
            const auto it = bindings.find(vars_[i]);
            if (it == bindings.end())
                throw std::invalid_argument("unbound variable in substitution: " + vars_[i]);
            if (it->second.vars_ != tvars)
                throw std::invalid_argument("substitution targets over mismatched variable lists");
            images[i] = &it->second;
        }
        // Powers of each image are cached up to the largest exponent used.
        std::vector<std::vector<MPoly>> powers(vars_.size());
        MPoly result(tvars);
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(tvars, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(*images[i]);
                while (cache.size() < e[i]) cache.push_back(cache.back() * *images[i]);
                term = term * cache[e[i] - 1];
            }
            result = result + term;
        }
        return result;
    }

    // Evaluation into any commutative ring S: values follow the variable
    // order, lift maps coefficients into S.
    template <class S, class Lift>
    S eval(const std::vector<S>& values, Lift lift) const {
        if (values.size() != vars_.size())
            throw std::invalid_argument("evaluation point arity mismatch");
        std::vector<std::vector<S>> powers(values.size());
        std::optional<S> acc;
        for (const auto& [e, c] : terms_) {
            S term = lift(c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(values[i]);
                while (cache.size() < e[i]) cache.push_back(cache.back() * values[i]);
                term = term * cache[e[i] - 1];
            }
            acc = acc ? *acc + term : term;
        }
        if (acc) return *acc;
        if (values.empty())
            throw std::invalid_argument("cannot evaluate the zero polynomial in zero variables");
        return values[0] - values[0];
    }

    const std::pair<const Exponents, R>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.begin();
    }

private:
    template <class>
    friend class MPoly;
    template <class S>
    friend std::optional<MPoly<S>> divide_exact(const MPoly<S>&, const MPoly<S>&);

    size_t var_index(const std::string& v) const {
        const auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + v);
        return static_cast<size_t>(it - vars_.begin());
    }
    void check_vars(const MPoly& other) const {
        if (vars_ != other.vars_)
            throw std::invalid_argument("polynomials over mismatched variable lists");
    }
    void add_term(const Exponents& e, const R& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

template <class R>
bool is_zero(const MPoly<R>& p) {
    return p.is_zero_poly();
}

// Exact division test via long division in the graded-lex order. For a
// single divisor over an integral domain, p = q*d forces every intermediate
// leading term to be divisible by lt(d), so the first failure certifies
// indivisibility.
template <class R>
std::optional<MPoly<R>> divide_exact(const MPoly<R>& p, const MPoly<R>& d) {
    if (d.is_zero_poly()) throw std::domain_error("division by zero polynomial");
    if (p.variables() != d.variables())
        throw std::invalid_argument("polynomials over mismatched variable lists");
    MPoly<R> q(p.variables());
    MPoly<R> r = p;
    const auto& [de, dc] = d.leading();
    while (!r.is_zero_poly()) {
        const auto& [re, rc] = r.leading();
        Exponents qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) return std::nullopt;
            qe[i] = re[i] - de[i];
        }
        MPoly<R> t(p.variables());
        t.add_term(qe, rc / dc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

// Division-free determinant over any commutative ring, by cofactor
// expansion along the first row. Fine for the 3x3 and 4x4 matrices this
// project meets; poly_det below is the polynomial-aware variant.
template <class R>
R ring_det(const std::vector<std::vector<R>>& m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (n == 1) return m[0][0];
    std::optional<R> acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        R term = m[0][j] * ring_det(minor);
        if (j % 2 == 1) term = -term;
        acc = acc ? *acc + term : term;
    }
    return *acc;
}

// Determinant of a square matrix of polynomials: cofactor expansion for
// n <= 3, Bareiss fraction-free elimination above that (every division in
// Bareiss is exact, which divide_exact both performs and certifies).
template <class R>
MPoly<R> poly_det(std::vector<std::vector<MPoly<R>>> m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    const auto vars = m[0][0].variables();

    if (n == 1) return m[0][0];
    if (n <= 3) {
        MPoly<R> acc(vars);
        if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        for (size_t j = 0; j < 3; ++j) {
            const size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            MPoly<R> minor = m[1][j1] * m[2][j2] - m[1][j2] * m[2][j1];
            acc = acc + m[0][j] * minor;
        }
        return acc;
    }

    bool negate = false;
    MPoly<R> prev_pivot = MPoly<R>(vars);  // replaced by 1 at first use
    bool have_prev = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero_poly()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero_poly()) ++swap_row;
            if (swap_row == n) return MPoly<R>(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly<R> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                if (have_prev) {
                    auto div = divide_exact(num, prev_pivot);
                    if (!div) throw std::logic_error("Bareiss division not exact");
                    m[i][j] = *div;
                } else {
                    m[i][j] = num;
                }
            }
            m[i][k] = MPoly<R>(vars);
        }
        prev_pivot = m[k][k];
        have_prev = true;
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace modulilab::algebra
