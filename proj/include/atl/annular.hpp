#pragma once

#include "scalar.hpp"
#include "tl.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atl {

// A boundary circle with 2*pairs marked points. The region just before point 0 carries the marker;
// shaded tells whether that region is shaded. With no points, shaded means the + boundary.
struct Boundary {
    int pairs = 0;
    bool shaded = false;

    static Boundary level(int m) { return {m, false}; }
    static Boundary plus() { return {0, true}; }
    static Boundary minus() { return {0, false}; }

    int points() const { return 2 * pairs; }
    Boundary flipped() const { return {pairs, !shaded}; }

    // shading of the boundary segment running from point i to point i+1
    bool segment_shaded(int i) const { return ((i % 2) == 0) != shaded; }

    std::string label() const
    {
        if (pairs == 0) return shaded ? "+" : "-";
        return std::to_string(pairs) + (shaded ? "*" : "");
    }

    auto operator<=>(const Boundary&) const = default;
};

class AnnularDiagram;
struct Composition;

struct StringEnd {
    bool outer;
    int index;
};

// Annular diagram without contractible loops. Outer points are 0..2m-1 and inner points follow
// as 2m..2m+2n-1. Each string carries an integer winding w: travelling from point p to its partner
// q the angular displacement, in turns, is angle(q) - angle(p) + w, where the angle of point i on a
// boundary with P points is (i + 1/2)/P. Arcs with both ends on one boundary store w in {0, -1}
// from the lower index, w = 0 meaning the arc cuts off the increasing run of points between them.
// Through strings are normalised by full twists so that the one leaving the lowest outer point has
// w = 0. Circles counts the loops going once around the annulus.
class AnnularDiagram {
public:
    AnnularDiagram() = default;

    // Builds a diagram from explicit strings. Windings of through strings are derived from the
    // cyclic order; arcs get w from the side free of through points unless t = 0, in which case
    // arc_windings must supply them (one entry per arc, in the given order, outer arcs first).
    static AnnularDiagram from_strings(Boundary outer, Boundary inner, const std::vector<std::pair<int, int>>& outer_arcs,
                                       const std::vector<std::pair<int, int>>& inner_arcs,
                                       const std::vector<std::pair<int, int>>& through, int circles = 0,
                                       const std::vector<int>& arc_windings = {})
    {
        AnnularDiagram d(outer, inner);
        d.circles_ = circles;
        const int mo = outer.points();
        auto link = [&d](int p, int q, int w) {
            if (d.partner_[static_cast<std::size_t>(p)] != -1 || d.partner_[static_cast<std::size_t>(q)] != -1 || p == q)
                throw std::invalid_argument("point used twice");
            d.partner_[static_cast<std::size_t>(p)] = q;
            d.partner_[static_cast<std::size_t>(q)] = p;
            d.wind_[static_cast<std::size_t>(p)] = w;
            d.wind_[static_cast<std::size_t>(q)] = -w;
        };
        for (auto [a, b] : through) {
            if (a < 0 || a >= mo || b < 0 || b >= inner.points()) throw std::out_of_range("through string endpoint");
            link(a, mo + b, 0);
        }
        const bool explicit_arcs = through.empty();
        if (explicit_arcs && arc_windings.size() != outer_arcs.size() + inner_arcs.size())
            throw std::invalid_argument("arc windings required when there are no through strings");
        std::size_t next = 0;
        auto add_arcs = [&](const std::vector<std::pair<int, int>>& arcs, bool is_outer) {
            const int base = is_outer ? 0 : mo;
            const int limit = is_outer ? mo : inner.points();
            for (auto [a, b] : arcs) {
                if (a < 0 || b < 0 || a >= limit || b >= limit) throw std::out_of_range("arc endpoint");
                const int lo = std::min(a, b), hi = std::max(a, b);
                int w = 0;
                if (explicit_arcs) {
                    w = arc_windings[next++];
                } else {
                    for (auto [x, y] : through) {
                        const int e = is_outer ? x : y;
                        if (lo < e && e < hi) w = -1;
                    }
                }
                link(base + lo, base + hi, w);
            }
        };
        add_arcs(outer_arcs, true);
        add_arcs(inner_arcs, false);
        if (std::find(d.partner_.begin(), d.partner_.end(), -1) != d.partner_.end())
            throw std::invalid_argument("some boundary point is left unmatched");
        d.fix_through_windings();
        d.normalize();
        if (!d.is_valid()) throw std::invalid_argument("strings do not form a planar, consistently shaded diagram");
        return d;
    }

    const Boundary& outer() const { return outer_; }
    const Boundary& inner() const { return inner_; }
    int circles() const { return circles_; }
    int point_count() const { return static_cast<int>(partner_.size()); }
    int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
    int winding(int p) const { return wind_[static_cast<std::size_t>(p)]; }
    bool is_outer_point(int p) const { return p < outer_.points(); }
    StringEnd end(int p) const { return is_outer_point(p) ? StringEnd{true, p} : StringEnd{false, p - outer_.points()}; }

    int through_strings() const
    {
        int t = 0;
        for (int p = 0; p < outer_.points(); ++p)
            if (!is_outer_point(partner(p))) ++t;
        return t;
    }

    int rank() const { return through_strings(); }

    // (outer point, inner point) pairs sorted by outer point
    std::vector<std::pair<int, int>> through_pairs() const
    {
        std::vector<std::pair<int, int>> out;
        for (int p = 0; p < outer_.points(); ++p)
            if (!is_outer_point(partner(p))) out.emplace_back(p, partner(p) - outer_.points());
        return out;
    }

    // arcs (lo, hi, w) on one boundary
    std::vector<std::tuple<int, int, int>> arcs(bool on_outer) const
    {
        std::vector<std::tuple<int, int, int>> out;
        const int base = on_outer ? 0 : outer_.points();
        const int count = on_outer ? outer_.points() : inner_.points();
        for (int i = 0; i < count; ++i) {
            const int q = partner(base + i);
            if (q < base || q >= base + count) continue;
            if (q - base > i) out.emplace_back(i, q - base, winding(base + i));
        }
        return out;
    }

    // position of the first inner endpoint relative to the through strings, modulo t
    int through_offset() const
    {
        const auto tp = through_pairs();
        if (tp.empty()) return 0;
        std::vector<int> inner_ends;
        for (auto [a, b] : tp) inner_ends.push_back(b);
        std::vector<int> sorted = inner_ends;
        std::sort(sorted.begin(), sorted.end());
        return static_cast<int>(std::find(sorted.begin(), sorted.end(), inner_ends.front()) - sorted.begin());
    }

    AnnularDiagram star() const
    {
        AnnularDiagram d(inner_, outer_);
        d.circles_ = circles_;
        const int mo = outer_.points(), mi = inner_.points();
        auto swap_index = [mo, mi](int p) { return p < mo ? p + mi : p - mo; };
        for (int p = 0; p < point_count(); ++p) {
            const int q = partner(p);
            const int np = swap_index(p), nq = swap_index(q);
            d.partner_[static_cast<std::size_t>(np)] = nq;
            d.wind_[static_cast<std::size_t>(np)] = winding(p);
        }
        d.normalize();
        return d;
    }

    AnnularDiagram flipped() const
    {
        AnnularDiagram d = *this;
        d.outer_ = outer_.flipped();
        d.inner_ = inner_.flipped();
        return d;
    }

    AnnularDiagram without_circles(int removed) const
    {
        if (removed < 0 || removed > circles_) throw std::invalid_argument("cannot remove that many circles");
        AnnularDiagram d = *this;
        d.circles_ -= removed;
        return d;
    }

    AnnularDiagram with_circles(int count) const
    {
        AnnularDiagram d = *this;
        d.circles_ = count;
        return d;
    }

    bool is_valid() const;

    auto operator<=>(const AnnularDiagram&) const = default;

    friend Composition compose(const AnnularDiagram& t, const AnnularDiagram& s);
    friend std::vector<AnnularDiagram> enumerate_annular(Boundary outer, Boundary inner, int t, int max_circles);

private:
    AnnularDiagram(Boundary outer, Boundary inner)
        : outer_(outer), inner_(inner),
          partner_(static_cast<std::size_t>(outer.points() + inner.points()), -1),
          wind_(static_cast<std::size_t>(outer.points() + inner.points()), 0) {}

    // angles scaled so that one full turn equals turn()
    long turn() const { return 2L * std::max(1, outer_.points()) * std::max(1, inner_.points()); }
    long angle(int p) const
    {
        const long po = std::max(1, outer_.points()), pi = std::max(1, inner_.points());
        if (is_outer_point(p)) return (2L * p + 1) * pi;
        return (2L * (p - outer_.points()) + 1) * po;
    }

    // choose consistent through windings from the cyclic order, first one zero
    void fix_through_windings()
    {
        const auto tp = through_pairs();
        const int mo = outer_.points();
        long prev = 0;
        for (std::size_t i = 0; i < tp.size(); ++i) {
            const auto [a, b] = tp[i];
            long bottom = angle(mo + b);
            int w = 0;
            if (i == 0) {
                w = 0;
            } else {
                w = static_cast<int>((prev - bottom) / turn());
                while (bottom + w * turn() <= prev) ++w;
                while (bottom + (w - 1) * turn() > prev) --w;
            }
            prev = bottom + w * turn();
            wind_[static_cast<std::size_t>(a)] = w;
            wind_[static_cast<std::size_t>(mo + b)] = -w;
        }
    }

    void normalize()
    {
        const int mo = outer_.points();
        int base = 0;
        bool found = false;
        for (int p = 0; p < mo && !found; ++p)
            if (!is_outer_point(partner(p))) {
                base = winding(p);
                found = true;
            }
        if (!found || base == 0) return;
        for (int p = 0; p < mo; ++p)
            if (!is_outer_point(partner(p))) {
                wind_[static_cast<std::size_t>(p)] -= base;
                wind_[static_cast<std::size_t>(partner(p))] += base;
            }
    }

    Boundary outer_;
    Boundary inner_;
    std::vector<int> partner_;
    std::vector<int> wind_;
    int circles_ = 0;
};

struct Composition {
    AnnularDiagram diagram;
    int contractible = 0;
};

template <Scalar S>
struct WeightedDiagram {
    AnnularDiagram diagram;
    S weight;
};

inline bool AnnularDiagram::is_valid() const
{
    const int mo = outer_.points(), mi = inner_.points(), n = mo + mi;
    if (static_cast<int>(partner_.size()) != n || static_cast<int>(wind_.size()) != n) return false;
    if (circles_ < 0) return false;
    for (int p = 0; p < n; ++p) {
        const int q = partner(p);
        if (q < 0 || q >= n || q == p || partner(q) != p || winding(q) != -winding(p)) return false;
    }
    const auto tp = through_pairs();
    const int t = static_cast<int>(tp.size());
    if (circles_ > 0 && t > 0) return false;
    // arcs on each boundary: windings, laminarity, no through endpoint cut off
    for (bool on_outer : {true, false}) {
        const int count = on_outer ? mo : mi;
        const auto list = arcs(on_outer);
        std::vector<std::vector<bool>> covered;  // segments cut off by each arc
        for (auto [a, b, w] : list) {
            if (w != 0 && w != -1) return false;
            std::vector<bool> seg(static_cast<std::size_t>(count), false);
            if (w == 0)
                for (int s = a; s < b; ++s) seg[static_cast<std::size_t>(s)] = true;
            else
                for (int s = b; s != a; s = (s + 1) % count) seg[static_cast<std::size_t>(s)] = true;
            covered.push_back(std::move(seg));
        }
        for (std::size_t x = 0; x < covered.size(); ++x)
            for (std::size_t y = x + 1; y < covered.size(); ++y) {
                bool inter = false, x_in_y = true, y_in_x = true;
                for (int s = 0; s < count; ++s) {
                    const bool cx = covered[x][static_cast<std::size_t>(s)], cy = covered[y][static_cast<std::size_t>(s)];
                    inter = inter || (cx && cy);
                    x_in_y = x_in_y && (!cx || cy);
                    y_in_x = y_in_x && (!cy || cx);
                }
                if (inter && !x_in_y && !y_in_x) return false;
            }
        // a point strictly inside a cut-off run is cut off; its partner must be as well
        for (std::size_t x = 0; x < covered.size(); ++x) {
            for (int pnt = 0; pnt < count; ++pnt) {
                const bool inside = covered[x][static_cast<std::size_t>(pnt)] &&
                                    covered[x][static_cast<std::size_t>((pnt + count - 1) % count)];
                if (!inside) continue;
                const int global = (on_outer ? 0 : mo) + pnt;
                const int q = partner(global);
                if ((q < mo) != on_outer) return false;
                const int local = on_outer ? q : q - mo;
                const bool q_inside = covered[x][static_cast<std::size_t>(local)] &&
                                      covered[x][static_cast<std::size_t>((local + count - 1) % count)];
                if (!q_inside) return false;
            }
        }
    }
    if (t > 0) {
        long prev = 0, first = 0;
        for (int i = 0; i < t; ++i) {
            const auto [a, b] = tp[static_cast<std::size_t>(i)];
            const long bottom = angle(mo + b) + winding(a) * turn();
            if (i == 0) first = bottom;
            else if (bottom <= prev) return false;
            prev = bottom;
            if (outer_.segment_shaded(a) != inner_.segment_shaded(b)) return false;
        }
        if (prev >= first + turn()) return false;
        if (winding(tp.front().first) != 0) return false;
    } else {
        auto hole_shading = [this](bool on_outer) -> std::optional<bool> {
            const Boundary& bd = on_outer ? outer_ : inner_;
            const int count = bd.points();
            if (count == 0) return bd.shaded;
            std::vector<bool> seg(static_cast<std::size_t>(count), false);
            for (auto [a, b, w] : arcs(on_outer)) {
                if (w == 0)
                    for (int s = a; s < b; ++s) seg[static_cast<std::size_t>(s)] = true;
                else
                    for (int s = b; s != a; s = (s + 1) % count) seg[static_cast<std::size_t>(s)] = true;
            }
            for (int s = 0; s < count; ++s)
                if (!seg[static_cast<std::size_t>(s)]) return bd.segment_shaded(s);
            return std::nullopt;
        };
        const auto ho = hole_shading(true), hi = hole_shading(false);
        if (!ho || !hi) return false;
        if ((*ho != *hi) != (circles_ % 2 == 1)) return false;
    }
    return true;
}

// t composed with s: the inner boundary of t is glued to the outer boundary of s
inline Composition compose(const AnnularDiagram& t, const AnnularDiagram& s)
{
    if (t.inner_ != s.outer_) throw std::invalid_argument("boundary mismatch: " + t.inner_.label() + " vs " + s.outer_.label());
    const int mo = t.outer_.points(), k = t.inner_.points(), ni = s.inner_.points();
    AnnularDiagram r(t.outer_, s.inner_);
    r.circles_ = t.circles_ + s.circles_;
    std::vector<bool> glued_seen(static_cast<std::size_t>(k), false);
    // walk starting in t (point index of t) or in s; returns result point and total winding
    auto walk = [&](int cur, bool in_t) {
        int w = 0;
        while (true) {
            if (in_t) {
                const int q = t.partner(cur);
                w += t.winding(cur);
                if (q < mo) return std::make_pair(q, w);
                glued_seen[static_cast<std::size_t>(q - mo)] = true;
                cur = q - mo;
                in_t = false;
            } else {
                const int q = s.partner(cur);
                w += s.winding(cur);
                if (q >= k) return std::make_pair(mo + q - k, w);
                glued_seen[static_cast<std::size_t>(q)] = true;
                cur = mo + q;
                in_t = true;
            }
        }
    };
    for (int x = 0; x < mo + ni; ++x) {
        if (r.partner_[static_cast<std::size_t>(x)] != -1) continue;
        const auto [y, w] = x < mo ? walk(x, true) : walk(k + (x - mo), false);
        r.partner_[static_cast<std::size_t>(x)] = y;
        r.partner_[static_cast<std::size_t>(y)] = x;
        r.wind_[static_cast<std::size_t>(x)] = w;
        r.wind_[static_cast<std::size_t>(y)] = -w;
    }
    int contractible = 0;
    for (int j = 0; j < k; ++j) {
        if (glued_seen[static_cast<std::size_t>(j)]) continue;
        int w = 0, cur = j;
        do {
            glued_seen[static_cast<std::size_t>(cur)] = true;
            const int q = s.partner(cur);
            w += s.winding(cur);
            glued_seen[static_cast<std::size_t>(q)] = true;
            const int back = t.partner(mo + q);
            w += t.winding(mo + q);
            cur = back - mo;
        } while (cur != j);
        if (w == 0) ++contractible;
        else ++r.circles_;
    }
    r.normalize();
    return {std::move(r), contractible};
}

template <Scalar S>
WeightedDiagram<S> compose(const AnnularDiagram& t, const AnnularDiagram& s, const S& delta)
{
    auto c = compose(t, s);
    return {std::move(c.diagram), power(delta, c.contractible)};
}

namespace generators {

inline AnnularDiagram identity(Boundary b)
{
    std::vector<std::pair<int, int>> through;
    for (int j = 0; j < b.points(); ++j) through.emplace_back(j, j);
    if (b.pairs == 0) return AnnularDiagram::from_strings(b, b, {}, {}, {}, 0, {});
    return AnnularDiagram::from_strings(b, b, {}, {}, through);
}

// rotation: inner point j joined to outer point j + shift
inline AnnularDiagram rotation(int m, int shift, bool outer_shaded = false)
{
    if (m < 1) throw std::out_of_range("rotation needs at least one pair of points");
    const int p = 2 * m;
    const bool inner_shaded = (((shift % 2) + 2) % 2 == 1) ? !outer_shaded : outer_shaded;
    std::vector<std::pair<int, int>> through;
    for (int j = 0; j < p; ++j) through.emplace_back(((j + shift) % p + p) % p, j);
    return AnnularDiagram::from_strings({m, outer_shaded}, {m, inner_shaded}, {}, {}, through);
}

inline AnnularDiagram rho(int m) { return rotation(m, 2); }

inline AnnularDiagram rho_half(int m, bool outer_shaded = false) { return rotation(m, 1, outer_shaded); }

// inner points i, i+1 (1-based, mod 2m) capped; an (m-1, m) diagram
inline AnnularDiagram eps(int m, int i)
{
    if (m < 1 || i < 1 || i > 2 * m) throw std::out_of_range("eps index out of range");
    if (m == 1) {
        const bool first = i == 1;
        return AnnularDiagram::from_strings(first ? Boundary::minus() : Boundary::plus(), Boundary::level(1), {},
                                            {{0, 1}}, {}, 0, {first ? 0 : -1});
    }
    const int p = 2 * m;
    const int a = i - 1, b = i % p;
    std::vector<int> rest;
    const int start = (i == 1 || i == p) ? 2 : 0;
    for (int s = 0; s < p; ++s) {
        const int j = (start + s) % p;
        if (j != a && j != b) rest.push_back(j);
    }
    std::vector<std::pair<int, int>> through;
    for (std::size_t o = 0; o < rest.size(); ++o) through.emplace_back(static_cast<int>(o), rest[o]);
    return AnnularDiagram::from_strings(Boundary::level(m - 1), Boundary::level(m), {}, {{a, b}}, through);
}

// outer points i, i+1 (1-based, mod 2m+2) capped; an (m+1, m) diagram
inline AnnularDiagram epsbar(int m, int i)
{
    if (m < 0 || i < 1 || i > 2 * m + 2) throw std::out_of_range("epsbar index out of range");
    if (m == 0) {
        const bool first = i == 1;
        return AnnularDiagram::from_strings(Boundary::level(1), first ? Boundary::minus() : Boundary::plus(), {{0, 1}},
                                            {}, {}, 0, {first ? 0 : -1});
    }
    const int p = 2 * m + 2;
    const int a = i - 1, b = i % p;
    std::vector<int> rest;
    const int start = (i == 1 || i == p) ? 2 : 0;
    for (int s = 0; s < p; ++s) {
        const int j = (start + s) % p;
        if (j != a && j != b) rest.push_back(j);
    }
    std::vector<std::pair<int, int>> through;
    for (std::size_t o = 0; o < rest.size(); ++o) through.emplace_back(rest[o], static_cast<int>(o));
    return AnnularDiagram::from_strings(Boundary::level(m + 1), Boundary::level(m), {{a, b}}, {}, through);
}

inline AnnularDiagram F(int m, int i)
{
    if (m < 1 || i < 1 || i > 2 * m) throw std::out_of_range("F index out of range");
    if (m == 1) return compose(epsbar(0, i), eps(1, i)).diagram;
    const int p = 2 * m;
    const int a = i - 1, b = i % p;
    std::vector<std::pair<int, int>> through;
    for (int j = 0; j < p; ++j)
        if (j != a && j != b) through.emplace_back(j, j);
    return AnnularDiagram::from_strings(Boundary::level(m), Boundary::level(m), {{a, b}}, {{a, b}}, through);
}

// sigma_+ : (+, -) and sigma_- : (-, +), one circle
inline AnnularDiagram sigma(bool plus)
{
    return AnnularDiagram::from_strings(plus ? Boundary::plus() : Boundary::minus(),
                                        plus ? Boundary::minus() : Boundary::plus(), {}, {}, {}, 1, {});
}

}  // namespace generators

namespace detail {

// noncrossing matchings of the points listed in order, as index pairs
inline void gap_matchings(const std::vector<int>& pts, std::size_t lo, std::size_t hi,
                          std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out,
                          std::vector<std::pair<std::size_t, std::size_t>> pending)
{
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (lo >= hi) {
        if (pending.empty()) {
            out.push_back(cur);
            return;
        }
        auto [l, h] = pending.back();
        pending.pop_back();
        gap_matchings(pts, l, h, cur, out, std::move(pending));
        return;
    }
    for (std::size_t j = lo + 1; j < hi; j += 2) {
        cur.emplace_back(pts[lo], pts[j]);
        auto next = pending;
        next.emplace_back(j + 1, hi);
        gap_matchings(pts, lo + 1, j, cur, out, std::move(next));
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::pair<int, int>>> matchings_of(const std::vector<int>& pts)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    gap_matchings(pts, 0, pts.size(), cur, out, {});
    return out;
}

// arc systems on a boundary of `count` points leaving exactly the points in `free_pts` unmatched
inline std::vector<std::vector<std::pair<int, int>>> arc_systems(int count, const std::vector<int>& free_pts)
{
    std::vector<std::vector<std::pair<int, int>>> result{{}};
    if (free_pts.empty()) return result;
    const std::size_t t = free_pts.size();
    for (std::size_t g = 0; g < t; ++g) {
        std::vector<int> gap;
        const int from = free_pts[g], to = free_pts[(g + 1) % t];
        for (int x = (from + 1) % count; x != to; x = (x + 1) % count) gap.push_back(x);
        if (gap.size() % 2 != 0) return {};
        const auto ms = matchings_of(gap);
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& r : result)
            for (const auto& m : ms) {
                auto c = r;
                c.insert(c.end(), m.begin(), m.end());
                next.push_back(std::move(c));
            }
        result = std::move(next);
    }
    return result;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x < n; ++x) {
        cur.push_back(x);
        subsets(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

// (arcs, windings) for all arc systems with no through strings, one per choice of hole face
inline std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> holed_matchings(int count)
{
    std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> out;
    if (count == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> pts(static_cast<std::size_t>(count));
    std::iota(pts.begin(), pts.end(), 0);
    for (const auto& m : matchings_of(pts)) {
        std::set<std::vector<int>> seen;
        for (int hole = count - 1; hole >= 0; --hole) {
            std::vector<int> w;
            for (auto [a, b] : m) w.push_back((std::min(a, b) <= hole && hole < std::max(a, b)) ? -1 : 0);
            if (seen.insert(w).second) out.emplace_back(m, w);
        }
    }
    return out;
}

}  // namespace detail

// All diagrams outer <- inner with exactly t through strings and at most max_circles circles.
inline std::vector<AnnularDiagram> enumerate_annular(Boundary outer, Boundary inner, int t, int max_circles = 0)
{
    if (t < 0 || t % 2 != 0) throw std::invalid_argument("through-string count must be even and nonnegative");
    if (t > std::min(outer.points(), inner.points())) return {};
    std::vector<AnnularDiagram> out;
    const int mo = outer.points(), mi = inner.points();
    if (t == 0) {
        const auto outer_sys = detail::holed_matchings(mo);
        const auto inner_sys = detail::holed_matchings(mi);
        for (const auto& [oa, ow] : outer_sys)
            for (const auto& [ia, iw] : inner_sys)
                for (int c = 0; c <= max_circles; ++c) {
                    std::vector<int> w = ow;
                    w.insert(w.end(), iw.begin(), iw.end());
                    AnnularDiagram d(outer, inner);
                    d.circles_ = c;
                    std::size_t next = 0;
                    for (auto [a, b] : oa) {
                        d.partner_[static_cast<std::size_t>(a)] = b;
                        d.partner_[static_cast<std::size_t>(b)] = a;
                        d.wind_[static_cast<std::size_t>(std::min(a, b))] = w[next];
                        d.wind_[static_cast<std::size_t>(std::max(a, b))] = -w[next];
                        ++next;
                    }
                    for (auto [a, b] : ia) {
                        const int lo = mo + std::min(a, b), hi = mo + std::max(a, b);
                        d.partner_[static_cast<std::size_t>(lo)] = hi;
                        d.partner_[static_cast<std::size_t>(hi)] = lo;
                        d.wind_[static_cast<std::size_t>(lo)] = w[next];
                        d.wind_[static_cast<std::size_t>(hi)] = -w[next];
                        ++next;
                    }
                    if (d.is_valid()) out.push_back(std::move(d));
                }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<std::vector<int>> outer_sets, inner_sets;
    std::vector<int> cur;
    detail::subsets(mo, t, 0, cur, outer_sets);
    detail::subsets(mi, t, 0, cur, inner_sets);
    for (const auto& os : outer_sets) {
        const auto outer_arcs = detail::arc_systems(mo, os);
        if (outer_arcs.empty()) continue;
        for (const auto& is : inner_sets) {
            const auto inner_arcs = detail::arc_systems(mi, is);
            if (inner_arcs.empty()) continue;
            for (int shift = 0; shift < t; ++shift) {
                if (outer.segment_shaded(os[0]) != inner.segment_shaded(is[static_cast<std::size_t>(shift)])) continue;
                std::vector<std::pair<int, int>> through;
                for (int i = 0; i < t; ++i)
                    through.emplace_back(os[static_cast<std::size_t>(i)], is[static_cast<std::size_t>((i + shift) % t)]);
                for (const auto& oa : outer_arcs)
                    for (const auto& ia : inner_arcs) out.push_back(AnnularDiagram::from_strings(outer, inner, oa, ia, through));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<AnnularDiagram> enumerate_annular(int m, int k, int t)
{
    return enumerate_annular(Boundary::level(m), Boundary::level(k), t, 0);
}

}  // namespace atl
