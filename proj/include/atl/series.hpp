#pragma once

#include "modules.hpp"
#include "tl.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atl {

// Power series truncated after degree `order`, exact rational coefficients.
class Series {
public:
    explicit Series(int order = 16) : coeffs_(static_cast<std::size_t>(order + 1), mpq_class(0))
    {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    }

    Series(int order, const std::vector<mpq_class>& c) : Series(order)
    {
        for (std::size_t i = 0; i < c.size() && i < coeffs_.size(); ++i) coeffs_[i] = c[i];
    }

    static Series from_integers(int order, const std::vector<mpz_class>& c)
    {
        Series s(order);
        for (std::size_t i = 0; i < c.size() && i < s.coeffs_.size(); ++i) s.coeffs_[i] = c[i];
        return s;
    }

    static Series monomial(int order, int degree, const mpq_class& c = 1)
    {
        Series s(order);
        if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    mpq_class& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    Series& operator+=(const Series& o)
    {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Series& operator*=(const mpq_class& c)
    {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const mpq_class& c) { return a *= c; }
    friend Series operator*(const mpq_class& c, Series a) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.check(b);
        Series r(a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    Series pow(int e) const
    {
        if (e < 0) return inverse().pow(-e);
        Series r = monomial(order(), 0);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Series inverse() const
    {
        if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term has no inverse");
        Series r(order());
        r[0] = 1 / coeffs_[0];
        for (int n = 1; n <= order(); ++n) {
            mpq_class acc = 0;
            for (int j = 1; j <= n; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * r[n - j];
            r[n] = -acc / coeffs_[0];
        }
        return r;
    }

    // this(inner(z)); inner must have zero constant term
    Series compose(const Series& inner) const
    {
        check(inner);
        if (inner[0] != 0) throw std::domain_error("composition needs an inner series without constant term");
        Series r(order());
        for (int n = order(); n >= 0; --n) {
            r = r * inner;
            r[0] += coeffs_[static_cast<std::size_t>(n)];
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? ", " : "") + coeffs_[i].get_str();
        return out + "]";
    }

private:
    void check(const Series& o) const
    {
        if (o.order() != order()) throw std::invalid_argument("series truncation orders differ");
    }

    std::vector<mpq_class> coeffs_;
};

inline Series catalan_series(int order)
{
    Series s(order);
    for (int n = 0; n <= order; ++n) s[n] = catalan(n);
    return s;
}

// 1/sqrt(1-4z)
inline Series sqrt_inv_series(int order)
{
    Series s(order);
    for (int n = 0; n <= order; ++n) s[n] = binomial(2 * n, n);
    return s;
}

template <Scalar S>
Series module_dim_series(const ModuleSpec<S>& spec, int order)
{
    switch (spec.kind) {
    case ModuleKind::low_weight:
        return Series::monomial(order, spec.k) * catalan_series(order).pow(2 * spec.k) * sqrt_inv_series(order);
    case ModuleKind::mu: return sqrt_inv_series(order);
    case ModuleKind::zero_plus:
    case ModuleKind::zero_minus: return sqrt_inv_series(order) * mpq_class(1, 2);
    case ModuleKind::trivial: return catalan_series(order);
    }
    return Series(order);
}

// (1-q)/(1+q) phi(q/(1+q)^2) + q
inline Series theta_transform(const Series& phi)
{
    const int n = phi.order();
    const Series one_plus = Series::monomial(n, 0) + Series::monomial(n, 1);
    const Series one_minus = Series::monomial(n, 0) - Series::monomial(n, 1);
    const Series inner = Series::monomial(n, 1) * one_plus.pow(-2);
    return one_minus * one_plus.inverse() * phi.compose(inner) + Series::monomial(n, 1);
}

// a_0 .. a_max_r from dims w_0 = 1, w_1, ...
inline std::vector<mpz_class> annular_multiplicities(const std::vector<mpz_class>& dims, int max_r)
{
    if (dims.empty() || dims[0] != 1) throw std::invalid_argument("the zeroth dimension must be 1");
    if (static_cast<int>(dims.size()) <= max_r) throw std::invalid_argument("not enough dimensions for the requested range");
    std::vector<mpz_class> a{1};
    for (int r = 1; r <= max_r; ++r) {
        mpq_class s = r == 1 ? 1 : 0;
        for (int n = 0; n <= r; ++n) {
            mpq_class term(2 * r, r + n);
            term.canonicalize();
            term *= binomial(r + n, r - n) * dims[static_cast<std::size_t>(n)];
            s += (r - n) % 2 == 0 ? term : mpq_class(-term);
        }
        if (s.get_den() != 1) throw std::logic_error("non-integral multiplicity");
        a.push_back(s.get_num());
    }
    return a;
}

inline std::optional<int> first_negative(const std::vector<mpz_class>& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace atl
