#pragma once

#include "cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <concepts>
#include <regex>
#include <string>

namespace atl {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyclo> {
    static constexpr bool exact = true;
    static Cyclo from(const Cyclo& x) { return x; }
    static bool is_zero(const Cyclo& x) { return x.is_zero(); }
    static Cyclo conj(const Cyclo& x) { return x.conj(); }
    static Sign sign(const Cyclo& x) { return x.sign(); }
    static std::complex<double> approx(const Cyclo& x) { return x.to_complex(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    using value_type = std::complex<double>;
    static constexpr bool exact = false;
    static constexpr double tolerance = 1e-9;
    static value_type from(const Cyclo& x) { return x.to_complex(); }
    static bool is_zero(const value_type& x) { return std::abs(x) < tolerance; }
    static value_type conj(const value_type& x) { return std::conj(x); }
    static Sign sign(const value_type& x)
    {
        if (std::abs(x.imag()) > tolerance) throw std::domain_error("sign of a non-real value");
        if (std::abs(x.real()) < tolerance) return Sign::zero;
        return x.real() > 0 ? Sign::positive : Sign::negative;
    }
    static value_type approx(const value_type& x) { return x; }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { ScalarTraits<S>::conj(a) } -> std::convertible_to<S>;
};

template <Scalar S>
bool is_zero(const S& x) { return ScalarTraits<S>::is_zero(x); }

template <Scalar S>
S conjugate(const S& x) { return ScalarTraits<S>::conj(x); }

template <Scalar S>
S power(const S& x, long e)
{
    if (e < 0) return power(S(1) / x, -e);
    S r(1), b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

struct ScalarContext {
    enum class Mode { exact_rational, cyclotomic, floating };

    Mode mode = Mode::exact_rational;
    Cyclo delta = 3;
    int precision = 53;

    static ScalarContext make(const Cyclo& delta, bool floating = false)
    {
        if (!delta.is_real()) throw std::domain_error("delta must be real");
        ScalarContext c;
        c.delta = delta;
        c.mode = floating ? Mode::floating : (delta.is_rational() ? Mode::exact_rational : Mode::cyclotomic);
        return c;
    }

    int conductor() const { return delta.conductor(); }
};

// Accepted forms: integers and fractions, i, -i, e(a/b) = exp(2 pi i a/b), 2cos(pi/n), 2cos(a*pi/n),
// z<n>^<j>, and sums/differences of these separated by + and -.
inline Cyclo parse_scalar(const std::string& text)
{
    static const std::regex rational_re(R"(^(\d+)(?:/(\d+))?$)");
    static const std::regex exp_re(R"(^e\((-?\d+)/(\d+)\)$)");
    static const std::regex cos_re(R"(^2cos\((?:(\d+)\*?)?pi/(\d+)\)$)");
    static const std::regex root_re(R"(^z(\d+)(?:\^(-?\d+))?$)");
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar expression");
    Cyclo total = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sgn = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sgn = -sgn;
            ++pos;
        }
        int depth = 0;
        std::size_t end = pos;
        for (; end < s.size(); ++end) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')') --depth;
            if (depth == 0 && (s[end] == '+' || (s[end] == '-' && end > pos && s[end - 1] != '^'))) break;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;
        Cyclo value;
        std::smatch m;
        if (term == "i") value = Cyclo::root(4, 1);
        else if (std::regex_match(term, m, rational_re)) {
            mpq_class q(mpz_class(m[1].str()), m[2].matched ? mpz_class(m[2].str()) : mpz_class(1));
            if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            q.canonicalize();
            value = Cyclo(q);
        } else if (std::regex_match(term, m, exp_re)) {
            const int b = std::stoi(m[2].str());
            if (b == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            value = Cyclo::root(b, std::stol(m[1].str()));
        } else if (std::regex_match(term, m, cos_re)) {
            const long a = m[1].matched ? std::stol(m[1].str()) : 1;
            const int n = std::stoi(m[2].str());
            if (n == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            value = Cyclo::two_cos(2 * n, a);
        } else if (std::regex_match(term, m, root_re)) {
            const int n = std::stoi(m[1].str());
            if (n == 0) throw std::invalid_argument("zero conductor in '" + text + "'");
            value = Cyclo::root(n, m[2].matched ? std::stol(m[2].str()) : 1);
        } else {
            throw std::invalid_argument("cannot parse scalar term '" + term + "'");
        }
        total += sgn > 0 ? value : -value;
    }
    return total;
}

}  // namespace atl
