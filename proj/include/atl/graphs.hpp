#pragma once

#include "cyclotomic.hpp"
#include "series.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atl {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Connected bipartite graph with a basepoint in the even class. Vertices 0..even-1 are even.
class PointedGraph {
public:
    PointedGraph(std::vector<std::string> even, std::vector<std::string> odd,
                 const std::vector<std::pair<std::string, std::string>>& edges, const std::string& basepoint)
        : names_(std::move(even)), even_count_(static_cast<int>(names_.size()))
    {
        names_.insert(names_.end(), odd.begin(), odd.end());
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (!index_.emplace(names_[i], static_cast<int>(i)).second) throw std::invalid_argument("duplicate vertex " + names_[i]);
        for (const auto& [u, v] : edges) {
            const int a = lookup(u), b = lookup(v);
            if (is_even(a) == is_even(b)) throw std::invalid_argument("edge " + u + "-" + v + " joins vertices of one class");
            edges_.emplace_back(is_even(a) ? a : b, is_even(a) ? b : a);
        }
        base_ = lookup(basepoint);
        if (!is_even(base_)) throw std::invalid_argument("basepoint must be an even vertex");
        if (!connected()) throw std::invalid_argument("graph is not connected");
    }

    // builds the two classes from distances to the basepoint
    static PointedGraph from_tree(int vertices, const std::vector<std::pair<int, int>>& edges, int basepoint)
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices + 1));
        for (auto [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<int> dist(static_cast<std::size_t>(vertices + 1), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(basepoint)] = 0;
        q.push(basepoint);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                }
        }
        std::vector<std::string> even, odd;
        for (int v = 1; v <= vertices; ++v) (dist[static_cast<std::size_t>(v)] % 2 == 0 ? even : odd).push_back(std::to_string(v));
        std::vector<std::pair<std::string, std::string>> named;
        for (auto [a, b] : edges) named.emplace_back(std::to_string(a), std::to_string(b));
        return PointedGraph(even, odd, named, std::to_string(basepoint));
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int even_count() const { return even_count_; }
    bool is_even(int v) const { return v < even_count_; }
    int basepoint() const { return base_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // (even, odd)
    int lookup(const std::string& n) const
    {
        auto it = index_.find(n);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex " + n);
        return it->second;
    }

    IntMatrix adjacency() const
    {
        const auto n = static_cast<std::size_t>(vertex_count());
        IntMatrix a(n, std::vector<mpz_class>(n, 0));
        for (auto [u, v] : edges_) {
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
            a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += 1;
        }
        return a;
    }

    // Lambda Lambda^T on the even vertices
    IntMatrix even_square() const
    {
        const auto e = static_cast<std::size_t>(even_count_);
        IntMatrix m(e, std::vector<mpz_class>(e, 0));
        for (auto [u, v] : edges_)
            for (auto [x, y] : edges_)
                if (v == y) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] += 1;
        return m;
    }

private:
    bool connected() const
    {
        std::vector<bool> seen(names_.size(), false);
        std::vector<int> stack{base_};
        seen[static_cast<std::size_t>(base_)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : edges_) {
                const int w = a == v ? b : (b == v ? a : -1);
                if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
    }

    std::vector<std::string> names_;
    int even_count_ = 0;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    int base_ = 0;
};

namespace graphs {

inline std::vector<std::pair<int, int>> chain(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return e;
}

// path 1..n, basepoint 1
inline PointedGraph A(int n)
{
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    if (n == 1) return PointedGraph({"1"}, {}, {}, "1");
    return PointedGraph::from_tree(n, chain(n), 1);
}

// path 1..n-1 with vertex n attached to n-2, basepoint 1
inline PointedGraph D(int n)
{
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    auto e = chain(n - 1);
    e.emplace_back(n - 2, n);
    return PointedGraph::from_tree(n, e, 1);
}

// path 1..n-1 with vertex n attached to 3, basepoint at the end of the long arm
inline PointedGraph E(int n)
{
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
    auto e = chain(n - 1);
    e.emplace_back(3, n);
    return PointedGraph::from_tree(n, e, n - 1 == 5 ? 1 : n - 1);
}

inline PointedGraph builtin(const std::string& name)
{
    if (name.size() < 2) throw std::invalid_argument("unknown graph " + name);
    const int n = std::stoi(name.substr(1));
    switch (name[0]) {
    case 'A': return A(n);
    case 'D': return D(n);
    case 'E': return E(n);
    default: throw std::invalid_argument("unknown graph " + name);
    }
}

}  // namespace graphs

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntMatrix c(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) mpz_addmul(c[i][j].get_mpz_t(), a[i][l].get_mpz_t(), b[l][j].get_mpz_t());
        }
    return c;
}

// w_n = (A^{2n})_{*,*} for n = 0..max_n
inline std::vector<mpz_class> loop_counts(const PointedGraph& g, int max_n)
{
    const auto a = g.adjacency();
    const auto a2 = multiply(a, a);
    const auto n = a.size();
    IntMatrix p(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    std::vector<mpz_class> out;
    const auto b = static_cast<std::size_t>(g.basepoint());
    for (int k = 0; k <= max_n; ++k) {
        out.push_back(p[b][b]);
        p = multiply(p, a2);
    }
    return out;
}

// d_n = trace((Lambda Lambda^T)^n) for n = 0..max_n
inline std::vector<mpz_class> all_starts_dims(const PointedGraph& g, int max_n)
{
    const auto s = g.even_square();
    IntMatrix p(s.size(), std::vector<mpz_class>(s.size(), 0));
    for (std::size_t i = 0; i < s.size(); ++i) p[i][i] = 1;
    std::vector<mpz_class> out;
    for (int k = 0; k <= max_n; ++k) {
        mpz_class tr = 0;
        for (std::size_t i = 0; i < s.size(); ++i) tr += p[i][i];
        out.push_back(tr);
        p = multiply(p, s);
    }
    return out;
}

// closed walks as edge-index sequences; step i goes from the current vertex across edges[e_i]
inline std::vector<std::vector<int>> closed_walks(const PointedGraph& g, int start, int length)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(cur.size()) == length) {
            if (v == start) out.push_back(cur);
            return;
        }
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto [a, b] = g.edges()[e];
            if (a != v && b != v) continue;
            cur.push_back(static_cast<int>(e));
            self(self, a == v ? b : a);
            cur.pop_back();
        }
    };
    rec(rec, start);
    return out;
}

inline std::vector<mpz_class> loop_counts_by_enumeration(const PointedGraph& g, int max_n)
{
    std::vector<mpz_class> out;
    for (int n = 0; n <= max_n; ++n) out.emplace_back(closed_walks(g, g.basepoint(), 2 * n).size());
    return out;
}

inline std::vector<mpz_class> all_starts_dims_by_enumeration(const PointedGraph& g, int max_n)
{
    std::vector<mpz_class> out;
    for (int n = 0; n <= max_n; ++n) {
        std::size_t total = 0;
        for (int v = 0; v < g.even_count(); ++v) total += closed_walks(g, v, 2 * n).size();
        out.emplace_back(total);
    }
    return out;
}

// det(t - M) as coefficients c_0..c_n of t^0..t^n (Faddeev-LeVerrier)
inline std::vector<mpq_class> characteristic_polynomial(const IntMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<mpq_class>> mq(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mq[i][j] = m[i][j];
    std::vector<mpq_class> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<mpq_class>> mk(n, std::vector<mpq_class>(n, 0));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = M M_{k-1} + c_{n-k+1} I
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l)
                if (mq[i][l] != 0)
                    for (std::size_t j = 0; j < n; ++j) next[i][j] += mq[i][l] * mk[l][j];
            next[i][i] += c[n - k + 1];
        }
        mk = std::move(next);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += mq[i][l] * mk[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

// power sums p_1..p_max of the roots from monic coefficients (Newton's identities)
inline std::vector<mpq_class> power_sums(const std::vector<mpq_class>& c, int max_k)
{
    const int n = static_cast<int>(c.size()) - 1;
    // e_j with prod (t - r_i) = sum (-1)^j e_j t^{n-j}
    std::vector<mpq_class> e(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) e[static_cast<std::size_t>(j)] = (j % 2 ? -1 : 1) * c[static_cast<std::size_t>(n - j)];
    std::vector<mpq_class> p(static_cast<std::size_t>(max_k + 1), 0);
    p[0] = n;
    for (int k = 1; k <= max_k; ++k) {
        mpq_class s = 0;
        for (int i = 1; i < k && i <= n; ++i)
            s += ((i - 1) % 2 ? -1 : 1) * e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
        if (k <= n) s += ((k - 1) % 2 ? -1 : 1) * k * e[static_cast<std::size_t>(k)];
        p[static_cast<std::size_t>(k)] = s;
    }
    return p;
}

namespace detail {

using QPoly = std::vector<mpq_class>;  // low degree first

inline void trim_q(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpq_class eval(const QPoly& p, const mpq_class& x)
{
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline QPoly derivative(const QPoly& p)
{
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim_q(d);
    return d;
}

inline QPoly remainder(QPoly a, const QPoly& b)
{
    trim_q(a);
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim_q(a);
    }
    return a;
}

inline std::vector<QPoly> sturm_chain(const QPoly& p)
{
    std::vector<QPoly> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        QPoly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& x : r) x = -x;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<QPoly>& chain, const std::optional<mpq_class>& x)
{
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        if (q.empty()) continue;
        const int s = x ? sgn(eval(q, *x)) : sgn(q.back());
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

// distinct real roots in (a, b]; b empty means +infinity
inline int count_roots_above(const std::vector<mpq_class>& poly, const mpq_class& a,
                             const std::optional<mpq_class>& b = std::nullopt)
{
    const auto chain = detail::sturm_chain(poly);
    return detail::sign_changes(chain, a) - detail::sign_changes(chain, b);
}

struct NormBracket {
    mpq_class lower;  // bounds for the largest eigenvalue of Lambda Lambda^T, i.e. the squared norm
    mpq_class upper;
    bool exceeds_two = false;
    bool equals_two = false;
};

inline NormBracket graph_norm(const PointedGraph& g, int bisections = 40)
{
    const auto cp = characteristic_polynomial(g.even_square());
    NormBracket nb;
    nb.exceeds_two = count_roots_above(cp, 4) > 0;
    nb.equals_two = !nb.exceeds_two && detail::eval(cp, 4) == 0;
    mpq_class hi = 1;
    for (const auto& x : cp) hi += abs(x);
    mpq_class lo = 0;
    for (int i = 0; i < bisections; ++i) {
        const mpq_class mid = (lo + hi) / 2;
        if (count_roots_above(cp, mid) > 0) lo = mid;
        else hi = mid;
    }
    nb.lower = lo;
    nb.upper = hi;
    return nb;
}

// exact test that 4cos^2(a pi / n) is a root of the polynomial
inline bool has_cos_root(const std::vector<mpq_class>& poly, int a, int n)
{
    const Cyclo x = Cyclo(2) + Cyclo::two_cos(n, a);
    Cyclo r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * x + Cyclo(*it);
    return r.is_zero();
}

struct LoopCensus {
    std::size_t loops = 0;
    std::size_t fixed = 0;
    std::size_t free_orbits = 0;
    std::map<std::size_t, std::size_t> orbits_by_size;
    std::vector<mpz_class> multiplicities;  // index a: eigenvalue e^{2 pi i a / k}
};

// shift-by-two on closed walks of length 2k starting in the even class
inline LoopCensus rotation_census(const PointedGraph& g, int k)
{
    if (k < 1) throw std::invalid_argument("census level must be at least 1");
    std::vector<std::vector<int>> walks;
    for (int v = 0; v < g.even_count(); ++v) {
        auto w = closed_walks(g, v, 2 * k);
        walks.insert(walks.end(), w.begin(), w.end());
    }
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < walks.size(); ++i) index.emplace(walks[i], i);
    LoopCensus c;
    c.loops = walks.size();
    std::vector<bool> seen(walks.size(), false);
    for (std::size_t i = 0; i < walks.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        std::vector<int> w = walks[i];
        while (!seen[index.at(w)]) {
            seen[index.at(w)] = true;
            ++len;
            std::rotate(w.begin(), w.begin() + 2, w.end());
        }
        ++c.orbits_by_size[len];
    }
    c.fixed = c.orbits_by_size.count(1) ? c.orbits_by_size.at(1) : 0;
    c.free_orbits = c.orbits_by_size.count(static_cast<std::size_t>(k)) ? c.orbits_by_size.at(static_cast<std::size_t>(k)) : 0;
    // multiplicity of lambda = (1/k) sum_j lambda^{-j} |Fix(rho^j)|, with |Fix(rho^j)| = d_{gcd(j,k)}
    const auto d = all_starts_dims(g, k);
    for (int a = 0; a < k; ++a) {
        Cyclo s = 0;
        for (int j = 0; j < k; ++j) s += Cyclo::root(k, -static_cast<long>(a) * j) * Cyclo(d[static_cast<std::size_t>(std::gcd(j, k))]);
        s /= Cyclo(k);
        if (!s.is_rational()) throw std::logic_error("non-rational eigenvalue multiplicity");
        const mpq_class q = s.to_rational();
        if (q.get_den() != 1) throw std::logic_error("non-integral eigenvalue multiplicity");
        c.multiplicities.push_back(q.get_num());
    }
    return c;
}

struct ScreenResult {
    std::vector<mpz_class> loops;
    std::vector<mpz_class> multiplicities;
    std::optional<int> first_negative;
    NormBracket norm;
    std::string verdict;
};

inline ScreenResult screen_principal_graph(const PointedGraph& g, int max_r)
{
    if (max_r < 1) throw std::invalid_argument("screen depth must be at least 1");
    ScreenResult r;
    r.loops = loop_counts(g, max_r);
    r.multiplicities = annular_multiplicities(r.loops, max_r);
    r.first_negative = first_negative(r.multiplicities);
    r.norm = graph_norm(g);
    if (!r.norm.exceeds_two) r.verdict = "norm <= 2: the multiplicity test does not apply";
    else if (r.first_negative) r.verdict = "obstructed: a_" + std::to_string(*r.first_negative) + " < 0";
    else r.verdict = "passes through r = " + std::to_string(max_r);
    return r;
}

}  // namespace atl
