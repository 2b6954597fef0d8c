#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atl {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

namespace detail {

using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, divisor monic
inline IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const mpz_class c = num[k];
        if (c == 0) continue;
        q[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    return q;
}

struct CycloField {
    int n = 1;
    int phi = 1;
    IntPoly modulus;              // monic, degree phi
    std::vector<IntPoly> powers;  // reduced x^e, 0 <= e < n
    std::vector<int> units;       // residues coprime to n
};

inline IntPoly cyclotomic_polynomial(int n);

inline IntPoly reduce_mod(IntPoly p, const IntPoly& modulus)
{
    const std::size_t d = modulus.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        const mpz_class c = p[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * modulus[i];
    }
    p.resize(d, 0);
    return p;
}

inline std::unique_ptr<CycloField> build_field(int n)
{
    auto f = std::make_unique<CycloField>();
    f->n = n;
    f->modulus = cyclotomic_polynomial(n);
    f->phi = static_cast<int>(f->modulus.size()) - 1;
    f->powers.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        IntPoly p(static_cast<std::size_t>(e) + 1, 0);
        p[static_cast<std::size_t>(e)] = 1;
        f->powers.push_back(reduce_mod(std::move(p), f->modulus));
    }
    for (int a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) f->units.push_back(a % n);
    return f;
}

inline const CycloField& cyclo_field(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    std::lock_guard lock(mutex);
    auto it = fields.find(n);
    if (it == fields.end()) it = fields.emplace(n, build_field(n)).first;
    return *it->second;
}

inline IntPoly cyclotomic_polynomial(int n)
{
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    trim(p);
    std::lock_guard lock(mutex);
    cache.emplace(n, p);
    return p;
}

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
    ~MpfrValue() { mpfr_clear(value_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

}  // namespace detail

// Exact element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as num(x)/den reduced modulo Phi_N.
class Cyclo {
public:
    Cyclo() : Cyclo(0) {}
    Cyclo(long v) : field_(&detail::cyclo_field(1)), num_{mpz_class(v)}, den_(1) {}
    Cyclo(const mpz_class& v) : field_(&detail::cyclo_field(1)), num_{v}, den_(1) {}
    Cyclo(const mpq_class& v) : field_(&detail::cyclo_field(1)), num_{v.get_num()}, den_(v.get_den()) {}

    static Cyclo rational(long p, long q = 1)
    {
        mpq_class r(p, q);
        r.canonicalize();
        return Cyclo(r);
    }

    // zeta_n^j
    static Cyclo root(int n, long j)
    {
        const auto& f = detail::cyclo_field(n);
        const long e = ((j % n) + n) % n;
        Cyclo r(f);
        r.num_ = f.powers[static_cast<std::size_t>(e)];
        r.normalize();
        return r;
    }

    // 2 cos(2 pi a / n)
    static Cyclo two_cos(int n, long a) { return root(n, a) + root(n, -a); }

    int conductor() const { return field_->n; }
    int degree() const { return field_->phi; }
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    mpq_class coefficient(int j) const
    {
        if (j < 0 || j >= field_->phi) return 0;
        mpq_class q(num_[static_cast<std::size_t>(j)], den_);
        q.canonicalize();
        return q;
    }

    bool is_zero() const
    {
        return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
    }

    bool is_rational() const
    {
        return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
    }

    mpq_class to_rational() const
    {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return coefficient(0);
    }

    Cyclo promoted(int target) const
    {
        Cyclo r = promote_raw(target);
        r.normalize();
        return r;
    }

    // zeta -> zeta^a for gcd(a, N) = 1
    Cyclo galois(int a) const
    {
        const int n = field_->n;
        Cyclo r(*field_);
        for (int j = 0; j < field_->phi; ++j) {
            const auto& c = num_[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            const auto& p = field_->powers[static_cast<std::size_t>(((static_cast<long>(a) * j) % n + n) % n)];
            for (int i = 0; i < field_->phi; ++i)
                if (p[static_cast<std::size_t>(i)] != 0) r.num_[static_cast<std::size_t>(i)] += c * p[static_cast<std::size_t>(i)];
        }
        r.den_ = den_;
        r.normalize();
        return r;
    }

    Cyclo conj() const { return field_->n <= 2 ? *this : galois(field_->n - 1); }

    bool is_real() const { return *this == conj(); }

    Cyclo real_part() const { return (*this + conj()) * Cyclo(mpq_class(1, 2)); }

    Cyclo norm_squared() const { return *this * conj(); }

    Cyclo inverse() const
    {
        if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
        if (is_rational()) return Cyclo(mpq_class(1) / to_rational());
        Cyclo prod(1);
        prod = prod.promoted(field_->n);
        for (int a : field_->units)
            if (a != 1) prod *= galois(a);
        const Cyclo norm = *this * prod;
        return prod * Cyclo(mpq_class(1) / norm.to_rational());
    }

    Cyclo pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        Cyclo result = Cyclo(1).promoted(field_->n);
        Cyclo base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    Cyclo& operator+=(const Cyclo& o) { return add_scaled(o, 1); }
    Cyclo& operator-=(const Cyclo& o) { return add_scaled(o, -1); }

    Cyclo& operator*=(const Cyclo& o)
    {
        if (o.field_->n == 1 && field_->n != 1) return scale(o.num_[0], o.den_);
        if (field_->n == 1 && o.field_->n != 1) {
            const mpz_class p = num_[0], q = den_;
            *this = o;
            return scale(p, q);
        }
        if (field_ != o.field_) {
            const int l = std::lcm(field_->n, o.field_->n);
            *this = promote_raw(l);
            return *this *= o.promote_raw(l);
        }
        const int d = field_->phi;
        if (d == 1) {
            num_[0] *= o.num_[0];
            den_ *= o.den_;
            normalize();
            return *this;
        }
        detail::IntPoly prod(static_cast<std::size_t>(2 * d - 1), 0);
        for (int i = 0; i < d; ++i) {
            const auto& a = num_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            for (int j = 0; j < d; ++j) {
                const auto& b = o.num_[static_cast<std::size_t>(j)];
                if (b != 0) mpz_addmul(prod[static_cast<std::size_t>(i + j)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
        num_ = detail::reduce_mod(std::move(prod), field_->modulus);
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend Cyclo operator-(Cyclo a)
    {
        for (auto& c : a.num_) c = -c;
        return a;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b)
    {
        if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
        return (a - b).is_zero();
    }

    std::complex<double> to_complex() const
    {
        std::complex<long double> acc = 0;
        const long double turn = 2.0L * 3.14159265358979323846264338327950288L / field_->n;
        const long double den = den_.get_d();
        for (int j = 0; j < field_->phi; ++j) {
            const auto& c = num_[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            acc += (static_cast<long double>(c.get_d()) / den) * std::polar(1.0L, turn * j);
        }
        return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }

    // certified sign of a real value; precision doubles until the error bound excludes zero
    Sign sign() const
    {
        if (is_zero()) return Sign::zero;
        if (is_rational()) return num_[0] > 0 ? Sign::positive : Sign::negative;
        if (!is_real()) throw std::domain_error("sign of a non-real cyclotomic value");
        mpz_class weight = 0;
        for (const auto& c : num_) weight += abs(c);
        for (mpfr_prec_t prec = 64;; prec *= 2) {
            detail::MpfrValue sum(prec), term(prec), angle(prec), bound(prec);
            mpfr_set_zero(sum.get(), 1);
            for (int j = 0; j < field_->phi; ++j) {
                const auto& c = num_[static_cast<std::size_t>(j)];
                if (c == 0) continue;
                mpfr_const_pi(angle.get(), MPFR_RNDN);
                mpfr_mul_si(angle.get(), angle.get(), 2L * j, MPFR_RNDN);
                mpfr_div_si(angle.get(), angle.get(), field_->n, MPFR_RNDN);
                mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
                mpfr_mul_z(term.get(), term.get(), c.get_mpz_t(), MPFR_RNDN);
                mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
            }
            // generous bound on the accumulated rounding error
            mpfr_set_z(bound.get(), weight.get_mpz_t(), MPFR_RNDU);
            mpfr_mul_ui(bound.get(), bound.get(), 4UL * static_cast<unsigned long>(field_->phi + 1), MPFR_RNDU);
            mpfr_mul_2si(bound.get(), bound.get(), 8 - static_cast<long>(prec), MPFR_RNDU);
            mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
            if (mpfr_cmp(term.get(), bound.get()) > 0) return mpfr_sgn(sum.get()) > 0 ? Sign::positive : Sign::negative;
            if (prec > (1 << 20)) throw std::runtime_error("sign decision did not converge");
        }
    }

    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int j = 0; j < field_->phi; ++j) {
            mpq_class c = coefficient(j);
            if (c == 0) continue;
            const bool neg = c < 0;
            if (neg) c = -c;
            out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (j == 0) {
                out << c.get_str();
                continue;
            }
            if (c != 1) out << c.get_str() << "*";
            out << "z" << field_->n;
            if (j != 1) out << "^" << j;
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.to_string(); }

private:
    explicit Cyclo(const detail::CycloField& f)
        : field_(&f), num_(static_cast<std::size_t>(f.phi), 0), den_(1) {}

    // same value over a larger conductor, possibly not demoted to the rationals
    Cyclo promote_raw(int target) const
    {
        if (target == field_->n) return *this;
        if (target % field_->n != 0) throw std::invalid_argument("target conductor is not a multiple");
        const auto& g = detail::cyclo_field(target);
        const int step = target / field_->n;
        Cyclo r(g);
        for (int j = 0; j < field_->phi; ++j) {
            const auto& c = num_[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            const auto& p = g.powers[static_cast<std::size_t>(j * step)];
            for (int i = 0; i < g.phi; ++i)
                if (p[static_cast<std::size_t>(i)] != 0) r.num_[static_cast<std::size_t>(i)] += c * p[static_cast<std::size_t>(i)];
        }
        r.den_ = den_;
        return r;
    }

    Cyclo& scale(const mpz_class& p, const mpz_class& q)
    {
        for (auto& c : num_) c *= p;
        den_ *= q;
        normalize();
        return *this;
    }

    Cyclo& add_scaled(const Cyclo& o, int s)
    {
        if (o.field_->n == 1 && field_->n != 1) {
            for (auto& c : num_) c *= o.den_;
            if (s > 0) mpz_addmul(num_[0].get_mpz_t(), o.num_[0].get_mpz_t(), den_.get_mpz_t());
            else mpz_submul(num_[0].get_mpz_t(), o.num_[0].get_mpz_t(), den_.get_mpz_t());
            den_ *= o.den_;
            normalize();
            return *this;
        }
        if (field_->n == 1 && o.field_->n != 1) {
            Cyclo sum = o;
            if (s < 0)
                for (auto& c : sum.num_) c = -c;
            sum.add_scaled(*this, 1);
            return *this = std::move(sum);
        }
        if (field_ != o.field_) {
            const int l = std::lcm(field_->n, o.field_->n);
            if (field_->n != l) *this = promote_raw(l);
            if (o.field_->n != l) return add_scaled(o.promote_raw(l), s);
        }
        if (den_ == o.den_) {
            for (std::size_t i = 0; i < num_.size(); ++i) {
                if (s > 0) num_[i] += o.num_[i];
                else num_[i] -= o.num_[i];
            }
        } else {
            for (std::size_t i = 0; i < num_.size(); ++i) {
                num_[i] *= o.den_;
                if (s > 0) mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
                else mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
            }
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    void normalize()
    {
        mpz_class g = den_;
        for (const auto& c : num_) {
            if (g == 1) break;
            if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (den_ < 0) g = -abs(g);
        if (g != 1) {
            for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
        if (is_zero()) den_ = 1;
        if (field_->n != 1 && is_rational()) {
            const auto& q = detail::cyclo_field(1);
            field_ = &q;
            num_.resize(1);
        }
    }

    const detail::CycloField* field_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

inline Cyclo cyclo(int n, long j) { return Cyclo::root(n, j); }

inline Cyclo conj(const Cyclo& x) { return x.conj(); }

inline Sign sign(const Cyclo& x) { return x.sign(); }

// P_0 = 0, P_1 = 1, P_{k+1} = delta P_k - P_{k-1}
template <class S>
S chebyshev(int k, const S& delta)
{
    if (k < 0) throw std::invalid_argument("chebyshev index must be nonnegative");
    S prev(0), cur(1);
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        S next = delta * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace atl
