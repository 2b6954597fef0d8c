#pragma once

#include "scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atl {

// Noncrossing perfect matching on the 2n boundary points of a rectangle: top points 0..n-1 and
// bottom points n..2n-1, both left to right. Going around the boundary, the circular position of
// top i is i and that of bottom i is 2n-1-i.
class TLDiagram {
public:
    TLDiagram() = default;

    TLDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner))
    {
        if (static_cast<int>(partner_.size()) != 2 * n_) throw std::invalid_argument("partner array must have length 2n");
        if (!valid()) throw std::invalid_argument("partner array is not a noncrossing perfect matching");
    }

    static TLDiagram identity(int n)
    {
        std::vector<int> p(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            p[static_cast<std::size_t>(i)] = n + i;
            p[static_cast<std::size_t>(n + i)] = i;
        }
        return TLDiagram(n, std::move(p), Unchecked{});
    }

    // E_i, 1 <= i <= n-1
    static TLDiagram generator(int n, int i)
    {
        if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
        auto d = identity(n);
        auto& p = d.partner_;
        const int a = i - 1, b = i;
        p[static_cast<std::size_t>(a)] = b;
        p[static_cast<std::size_t>(b)] = a;
        p[static_cast<std::size_t>(n + a)] = n + b;
        p[static_cast<std::size_t>(n + b)] = n + a;
        return d;
    }

    int strands() const { return n_; }
    const std::vector<int>& partners() const { return partner_; }
    int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }

    int circular_position(int p) const { return p < n_ ? p : 3 * n_ - 1 - p; }
    int point_at(int c) const { return c < n_ ? c : 3 * n_ - 1 - c; }

    int through_strings() const
    {
        int t = 0;
        for (int i = 0; i < n_; ++i)
            if (partner(i) >= n_) ++t;
        return t;
    }

    bool valid() const
    {
        const int m = 2 * n_;
        for (int p = 0; p < m; ++p) {
            const int q = partner(p);
            if (q < 0 || q >= m || q == p || partner(q) != p) return false;
        }
        for (int p = 0; p < m; ++p) {
            const int a = circular_position(p), b = circular_position(partner(p));
            if (a > b) continue;
            for (int r = 0; r < m; ++r) {
                const int c = circular_position(r), d = circular_position(partner(r));
                if (c < d && a < c && c < b && b < d) return false;
            }
        }
        return true;
    }

    // reflection in the horizontal midline
    TLDiagram star() const
    {
        std::vector<int> p(partner_.size());
        auto flip = [this](int x) { return x < n_ ? x + n_ : x - n_; };
        for (int x = 0; x < 2 * n_; ++x) p[static_cast<std::size_t>(flip(x))] = flip(partner(x));
        return TLDiagram(n_, std::move(p), Unchecked{});
    }

    // shift every boundary point one step along the circular order
    TLDiagram rotated(int clicks = 1) const
    {
        const int m = 2 * n_;
        std::vector<int> p(partner_.size());
        for (int x = 0; x < m; ++x) {
            const int cx = ((circular_position(x) + clicks) % m + m) % m;
            const int cy = ((circular_position(partner(x)) + clicks) % m + m) % m;
            p[static_cast<std::size_t>(point_at(cx))] = point_at(cy);
        }
        return TLDiagram(n_, std::move(p), Unchecked{});
    }

    // this stacked on top of other; second member counts closed loops
    std::pair<TLDiagram, int> compose(const TLDiagram& other) const
    {
        if (n_ != other.n_) throw std::invalid_argument("diagrams have different strand counts");
        const int n = n_;
        std::vector<int> p(static_cast<std::size_t>(2 * n), -1);
        std::vector<bool> glued_seen(static_cast<std::size_t>(n), false);
        // walk from a point of one diagram until reaching a free boundary point
        auto walk = [&](int cur, bool upper) {
            while (true) {
                const int q = upper ? partner(cur) : other.partner(cur);
                const bool free_end = upper ? q < n : q >= n;
                if (free_end) return q;
                const int mid = upper ? q - n : q;
                glued_seen[static_cast<std::size_t>(mid)] = true;
                cur = upper ? mid : mid + n;
                upper = !upper;
            }
        };
        for (int x = 0; x < 2 * n; ++x) {
            if (p[static_cast<std::size_t>(x)] >= 0) continue;
            const bool upper = x < n;
            const int y = walk(x, upper);
            p[static_cast<std::size_t>(x)] = y;
            p[static_cast<std::size_t>(y)] = x;
        }
        int loops = 0;
        for (int j = 0; j < n; ++j) {
            if (glued_seen[static_cast<std::size_t>(j)]) continue;
            ++loops;
            int cur = j;
            do {
                glued_seen[static_cast<std::size_t>(cur)] = true;
                const int down = other.partner(cur);
                glued_seen[static_cast<std::size_t>(down)] = true;
                cur = partner(down + n) - n;
            } while (!glued_seen[static_cast<std::size_t>(cur)]);
        }
        return {TLDiagram(n, std::move(p), Unchecked{}), loops};
    }

    auto operator<=>(const TLDiagram&) const = default;

private:
    struct Unchecked {};
    TLDiagram(int n, std::vector<int> partner, Unchecked) : n_(n), partner_(std::move(partner)) {}

    int n_ = 0;
    std::vector<int> partner_;
};

// all noncrossing perfect matchings of 0..2n-1 in circular order, point 0 paired with 1, 3, 5, ...
inline std::vector<std::vector<int>> circular_matchings(int n)
{
    std::vector<std::vector<int>> result;
    std::vector<int> part(static_cast<std::size_t>(2 * n), -1);
    // intervals still to fill, processed depth first
    std::function<void(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> todo) {
        while (!todo.empty() && todo.back().first > todo.back().second) todo.pop_back();
        if (todo.empty()) {
            result.push_back(part);
            return;
        }
        auto [lo, hi] = todo.back();
        todo.pop_back();
        for (int j = lo + 1; j <= hi; j += 2) {
            part[static_cast<std::size_t>(lo)] = j;
            part[static_cast<std::size_t>(j)] = lo;
            auto next = todo;
            next.emplace_back(j + 1, hi);
            next.emplace_back(lo + 1, j - 1);
            rec(std::move(next));
        }
    };
    rec({{0, 2 * n - 1}});
    return result;
}

inline std::vector<TLDiagram> enumerate_tl_basis(int n)
{
    if (n < 0) throw std::invalid_argument("strand count must be nonnegative");
    std::vector<TLDiagram> out;
    const TLDiagram shape = TLDiagram::identity(n);
    for (const auto& m : circular_matchings(n)) {
        std::vector<int> p(static_cast<std::size_t>(2 * n));
        for (int c = 0; c < 2 * n; ++c) p[static_cast<std::size_t>(shape.point_at(c))] = shape.point_at(m[static_cast<std::size_t>(c)]);
        out.emplace_back(n, std::move(p));
    }
    return out;
}

template <Scalar S>
class TLElement {
public:
    explicit TLElement(int n = 0) : n_(n) {}
    TLElement(const TLDiagram& d, S c = S(1)) : n_(d.strands()) { add(d, std::move(c)); }

    static TLElement identity(int n) { return TLElement(TLDiagram::identity(n)); }
    static TLElement generator(int n, int i) { return TLElement(TLDiagram::generator(n, i)); }

    int strands() const { return n_; }
    const std::map<TLDiagram, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(const TLDiagram& d) const
    {
        auto it = terms_.find(d);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add(const TLDiagram& d, const S& c)
    {
        if (d.strands() != n_) throw std::invalid_argument("diagram strand count mismatch");
        if (atl::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second = it->second + c;
            if (atl::is_zero(it->second)) terms_.erase(it);
        }
    }

    TLElement& operator+=(const TLElement& o)
    {
        check(o);
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    TLElement& operator-=(const TLElement& o)
    {
        check(o);
        for (const auto& [d, c] : o.terms_) add(d, S(0) - c);
        return *this;
    }
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
    friend TLElement operator*(const S& s, const TLElement& a)
    {
        TLElement r(a.n_);
        for (const auto& [d, c] : a.terms_) r.add(d, s * c);
        return r;
    }

    friend bool operator==(const TLElement& a, const TLElement& b) { return a.n_ == b.n_ && (a - b).is_zero(); }

    TLElement star() const
    {
        TLElement r(n_);
        for (const auto& [d, c] : terms_) r.add(d.star(), conjugate(c));
        return r;
    }

    TLElement rotated(int clicks = 1) const
    {
        TLElement r(n_);
        for (const auto& [d, c] : terms_) r.add(d.rotated(clicks), c);
        return r;
    }

    // adds a vertical strand on the right
    TLElement extended() const
    {
        TLElement r(n_ + 1);
        const int n = n_;
        for (const auto& [d, c] : terms_) {
            std::vector<int> p(static_cast<std::size_t>(2 * n + 2));
            auto lift = [n](int x) { return x < n ? x : x + 1; };
            for (int x = 0; x < 2 * n; ++x) p[static_cast<std::size_t>(lift(x))] = lift(d.partner(x));
            p[static_cast<std::size_t>(n)] = 2 * n + 1;
            p[static_cast<std::size_t>(2 * n + 1)] = n;
            r.add(TLDiagram(n + 1, std::move(p)), c);
        }
        return r;
    }

private:
    void check(const TLElement& o) const
    {
        if (o.n_ != n_) throw std::invalid_argument("elements have different strand counts");
    }

    int n_;
    std::map<TLDiagram, S> terms_;
};

template <Scalar S>
TLElement<S> multiply(const TLElement<S>& a, const TLElement<S>& b, const S& delta)
{
    if (a.strands() != b.strands()) throw std::invalid_argument("elements have different strand counts");
    TLElement<S> r(a.strands());
    std::vector<S> delta_pow{S(1)};
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [d, loops] = da.compose(db);
            while (static_cast<int>(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * delta);
            r.add(d, ca * cb * delta_pow[static_cast<std::size_t>(loops)]);
        }
    return r;
}

class VanishingDenominator : public std::domain_error {
public:
    explicit VanishingDenominator(int k)
        : std::domain_error("Chebyshev denominator P_" + std::to_string(k) + "(delta) vanishes"), index_(k) {}
    int index() const { return index_; }

private:
    int index_;
};

template <Scalar S>
TLElement<S> jones_wenzl_uncached(int n, const S& delta)
{
    if (n < 0) throw std::invalid_argument("strand count must be nonnegative");
    for (int k = 2; k <= n; ++k)
        if (is_zero(chebyshev(k, delta))) throw VanishingDenominator(k);
    TLElement<S> p = TLElement<S>::identity(std::min(n, 1));
    for (int k = 1; k < n; ++k) {
        const S ratio = chebyshev(k, delta) / chebyshev(k + 1, delta);
        const TLElement<S> q = p.extended();
        const auto e = TLElement<S>::generator(k + 1, k);
        p = q - ratio * multiply(multiply(q, e, delta), q, delta);
    }
    return p;
}

namespace detail {

class JonesWenzlCache {
public:
    std::shared_ptr<const TLElement<Cyclo>> get(int n, const Cyclo& delta)
    {
        const auto key = std::make_pair(n, std::to_string(delta.conductor()) + ":" + delta.to_string());
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto value = std::make_shared<const TLElement<Cyclo>>(jones_wenzl_uncached(n, delta));
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, std::string>, std::shared_ptr<const TLElement<Cyclo>>> cache_;
};

inline JonesWenzlCache& jones_wenzl_cache()
{
    static JonesWenzlCache cache;
    return cache;
}

}  // namespace detail

template <Scalar S>
TLElement<S> jones_wenzl(int n, const S& delta)
{
    if constexpr (std::is_same_v<S, Cyclo>) return *detail::jones_wenzl_cache().get(n, delta);
    else return jones_wenzl_uncached(n, delta);
}

// the diagram of the word E_{n-1} E_{n-2} ... E_r
inline TLDiagram descending_word(int n, int r)
{
    if (r < 1 || r > n - 1) throw std::out_of_range("word index out of range");
    TLDiagram d = TLDiagram::generator(n, n - 1);
    for (int i = n - 2; i >= r; --i) d = d.compose(TLDiagram::generator(n, i)).first;
    return d;
}

// coefficient of E_{n-1} ... E_r in p_n, equal to (-1)^(n-r) P_r / P_n
template <Scalar S>
S jw_chain_coefficient(int n, int r, const S& delta)
{
    if (r < 1 || r > n - 1) throw std::out_of_range("word index out of range");
    const S pn = chebyshev(n, delta);
    if (is_zero(pn)) throw VanishingDenominator(n);
    const S v = chebyshev(r, delta) / pn;
    return (n - r) % 2 == 0 ? v : S(0) - v;
}

inline mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class catalan(long n) { return binomial(2 * n, n) / (n + 1); }

// generic dimension of the irreducible TL_n-module with t through strings
inline mpz_class tl_dim(int n, int t)
{
    if (t < 0 || t > n || (n - t) % 2 != 0) throw std::invalid_argument("need 0 <= t <= n with n - t even");
    return binomial(n, (n - t) / 2) - binomial(n, (n - t) / 2 - 1);
}

// dimension at delta = 2cos(pi/m): paths on the Bratteli diagram truncated to t <= m-2
inline mpz_class tl_dim_at_root(int n, int t, int m)
{
    if (m < 3) throw std::invalid_argument("root case needs m >= 3");
    if (t < 0 || t > n || (n - t) % 2 != 0) throw std::invalid_argument("need 0 <= t <= n with n - t even");
    if (t > m - 2) return 0;
    std::vector<mpz_class> row(static_cast<std::size_t>(m - 1), 0);
    row[0] = 1;
    for (int level = 1; level <= n; ++level) {
        std::vector<mpz_class> next(row.size(), 0);
        for (int s = 0; s <= m - 2; ++s) {
            if (s >= 1) next[static_cast<std::size_t>(s)] += row[static_cast<std::size_t>(s - 1)];
            if (s + 1 <= m - 2) next[static_cast<std::size_t>(s)] += row[static_cast<std::size_t>(s + 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(t)];
}

}  // namespace atl
