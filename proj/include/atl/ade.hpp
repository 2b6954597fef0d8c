#pragma once

#include "graphs.hpp"
#include "modules.hpp"
#include "tl.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atl {

struct AdeCase {
    std::string name;
    int d = 0;
    int n = 0;
    int branch = 1;  // +1: omega = e^{2 pi i/d}; -1: its conjugate
    Cyclo q, omega, kappa, eta, delta;

    static AdeCase make(const std::string& name, int branch)
    {
        if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
        AdeCase c;
        c.name = name;
        c.branch = branch;
        if (name == "E6" || name == "e6") {
            c.name = "E6";
            c.d = 3;
            c.n = 12;
            c.eta = Cyclo::root(4, -branch);
        } else if (name == "E8" || name == "e8") {
            c.name = "E8";
            c.d = 5;
            c.n = 30;
            c.eta = Cyclo::root(6, -branch);
        } else {
            throw std::invalid_argument("unknown case " + name + " (expected E6 or E8)");
        }
        c.q = Cyclo::root(2 * c.n, 1);
        c.omega = Cyclo::root(c.d, branch);
        c.kappa = Cyclo::root(2 * c.n, -branch);
        c.delta = Cyclo::two_cos(2 * c.n, 1);
        return c;
    }

    ModuleSpec<Cyclo> module() const { return ModuleSpec<Cyclo>::low_weight(d, omega, delta); }
};

struct NullVector {
    AnnularModule<Cyclo> module;
    ModuleVector<Cyclo> cap_second;  // epsbar_2 applied to the lowest weight vector
    ModuleVector<Cyclo> cap_third;   // epsbar_3 applied to it
    ModuleVector<Cyclo> nu;
    int generator_terms = 0;
};

inline NullVector null_vector(const AdeCase& c)
{
    AnnularModule<Cyclo> m(c.module());
    const auto psi = m.unit();
    const auto second = m.act(generators::epsbar(c.d, 2), psi);
    const auto third = m.act(generators::epsbar(c.d, 3), psi);
    const auto rho = generators::rho(c.d + 1);
    ModuleVector<Cyclo> nu{Boundary::level(c.d + 1), {}};
    auto a = second, b = third;
    Cyclo eta_j = 1;
    int terms = 0;
    // the form is linear in its first slot, so the second sum carries conj(kappa) for the
    // norm to expand as 2(d+1)(delta - Re(kappa(1 + eta omega)))
    const Cyclo weight = c.kappa.conj();
    for (int j = 0; j <= c.d; ++j) {
        nu += eta_j * a;
        nu -= (weight * eta_j) * b;
        terms += 2;
        a = m.act(rho, a);
        b = m.act(rho, b);
        eta_j *= c.eta;
    }
    return {std::move(m), second, third, std::move(nu), terms};
}

inline Cyclo null_norm(const NullVector& v) { return v.module.inner(v.nu, v.nu); }

inline Cyclo closed_form_norm(int d, const Cyclo& delta, const Cyclo& kappa, const Cyclo& eta, const Cyclo& omega)
{
    return Cyclo(2 * (d + 1)) * (delta - (kappa * (Cyclo(1) + eta * omega)).real_part());
}

struct GramKernelCheck {
    std::size_t dimension = 0;
    std::size_t rank = 0;
    std::size_t corank = 0;
    bool annihilates = false;  // Gram applied to nu vanishes
};

inline GramKernelCheck null_vector_in_radical(const NullVector& v, int jobs = 1)
{
    const auto basis = v.module.basis(v.nu.level);
    const auto g = v.module.gram_matrix(basis, jobs);
    GramKernelCheck out;
    out.dimension = basis.size();
    out.rank = rank(g);
    out.corank = out.dimension - out.rank;
    const auto coords = v.module.coordinates(v.nu, basis);
    const auto image = g.transpose().apply(coords);
    out.annihilates = std::all_of(image.begin(), image.end(), [](const Cyclo& x) { return x.is_zero(); });
    return out;
}

struct E7Report {
    Cyclo delta;
    std::vector<std::pair<Cyclo, Cyclo>> determinants;  // (omega, det Gram of V^{4,omega}_5)
    bool all_nonzero = true;
};

inline E7Report e7_obstruction(int jobs = 1)
{
    E7Report r;
    r.delta = Cyclo::two_cos(36, 1);
    for (int j = 0; j < 4; ++j) {
        const Cyclo omega = Cyclo::root(4, j);
        AnnularModule<Cyclo> m(ModuleSpec<Cyclo>::low_weight(4, omega, r.delta));
        const auto det = determinant(m.gram_matrix(m.basis(Boundary::level(5)), jobs));
        r.all_nonzero = r.all_nonzero && !det.is_zero();
        r.determinants.emplace_back(omega, det);
    }
    return r;
}

inline Cyclo sin_pi(long a, int n)
{
    const Cyclo i = Cyclo::root(4, 1);
    return (Cyclo::root(2 * n, a) - Cyclo::root(2 * n, -a)) / (Cyclo(2) * i);
}

struct StarEquation {
    bool solvable = false;
    std::optional<Cyclo> z;
    Cyclo lhs_modulus_squared;  // sin^2(2 m pi/n)
    Cyclo rhs_modulus_squared;  // |sin(r pi/n) + omega sin((r+2k) pi/n)|^2
};

// z sin(2 m pi/n) = sin(r pi/n) + omega sin((r + 2k) pi/n) with m = r + k and |z| = 1
inline StarEquation star_equation(int n, int k, int r, const Cyclo& omega)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int m = r + k;
    const Cyclo s = sin_pi(2L * m, n);
    if (s.is_zero()) throw std::domain_error("degenerate level: sin(2 m pi/n) = 0");
    const Cyclo rhs = sin_pi(r, n) + omega * sin_pi(static_cast<long>(r) + 2L * k, n);
    StarEquation out;
    out.lhs_modulus_squared = s * s;
    out.rhs_modulus_squared = rhs.norm_squared();
    out.solvable = out.lhs_modulus_squared == out.rhs_modulus_squared;
    if (out.solvable) out.z = rhs / s;
    return out;
}

// A = zeta_{4n}^j with -A^2 - A^{-2} = 2cos(pi/n)
inline std::vector<Cyclo> kauffman_roots(int n)
{
    const Cyclo delta = Cyclo::two_cos(2 * n, 1);
    std::vector<Cyclo> out;
    for (int j = 0; j < 4 * n; ++j) {
        const Cyclo a = Cyclo::root(4 * n, j);
        if (-(a * a) - (a * a).inverse() == delta) out.push_back(a);
    }
    return out;
}

struct TransferEigenvalue {
    Cyclo z;
    Cyclo delta;
    bool modulus_matches = false;
};

inline TransferEigenvalue transfer_eigenvalue(int k, const Cyclo& omega, const Cyclo& a)
{
    const Cyclo a2 = a * a;
    TransferEigenvalue t;
    t.delta = -a2 - a2.inverse();
    if (!t.delta.is_real()) throw std::domain_error("-A^2 - A^-2 is not real");
    t.z = a2.pow(k) + omega * a2.pow(-k);
    t.modulus_matches = t.z.norm_squared() == t.delta * t.delta;
    return t;
}

struct BiunitaryReport {
    bool inverse_ok = false;    // U (A id + A^-1 E_1) = 1
    bool unitary = false;       // U* U = 1
    bool rotated_unitary = false;
};

inline BiunitaryReport biunitary_check(const Cyclo& a, const Cyclo& delta)
{
    if (!(-(a * a) - (a * a).inverse() == delta)) throw std::invalid_argument("delta must equal -A^2 - A^-2");
    const auto id = TLElement<Cyclo>::identity(2);
    const auto e1 = TLElement<Cyclo>::generator(2, 1);
    const Cyclo ai = a.inverse();
    const auto u = a * e1 + ai * id;
    const auto u_inv = a * id + ai * e1;
    BiunitaryReport r;
    r.inverse_ok = multiply(u, u_inv, delta) == id;
    r.unitary = multiply(u.star(), u, delta) == id;
    const auto v = u.rotated(1);
    r.rotated_unitary = multiply(v.star(), v, delta) == id;
    return r;
}

inline bool euler_counts(long v, long e, long f, long k) { return v - e + f == 1 - 2 * k; }

inline bool euler_bound(long p, long e, long k) { return (2 * p - 3) * k >= 3 * p + (p - 3) * e; }

// f = 1 + ((p - 1) e - (2p - 1) k)/p, when integral
inline std::optional<long> euler_regions(long p, long e, long k)
{
    const long num = (p - 1) * e - (2 * p - 1) * k;
    if (p <= 0 || num % p != 0) return std::nullopt;
    return 1 + num / p;
}

// With pruning, capped and double_joined count abandoned branches instead of finished tangles.
struct TangleCensus {
    std::size_t tangles = 0;               // connected tangles fully generated
    std::size_t capped = 0;                // a string joins neighbouring points of one disc
    std::size_t double_joined = 0;         // two discs joined by at least two strings
    std::size_t without_small_region = 0;  // every internal region has >= 3 string sides
    std::size_t bound_failures = 0;        // no small region, yet (2p-3)k >= 3p + (p-3)e fails
    std::size_t counterexamples = 0;       // >= 2 discs, no cap and no two discs joined twice
    std::size_t euler_failures = 0;        // v - e + f != 1 - 2k or region formula mismatch
};

namespace detail {

struct Token {
    enum Kind { point, outer_arc, disc_arc, string } kind;
    int disc = -1;  // -1 for the outer disc
    int index = 0;
};

struct Marks {
    bool small = false;  // some internal region has < 3 string sides
    bool cap = false;
    bool join = false;   // a region bounded by two strings between two different discs
};

struct Region {
    std::vector<Token> tokens;
    int free_discs = 0;  // unattached internal discs inside this region
};

struct TangleSearch {
    int p, k, discs;
    bool prune;
    TangleCensus census;
    long strings = 0;
    long internal_regions = 0;
    int attached = 0;                        // discs given an identity so far
    std::vector<std::pair<int, int>> links;  // strings joining two internal discs

    static bool has_point(const Region& r)
    {
        return std::any_of(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.kind == Token::point; });
    }

    // a region can still be completed
    bool viable(const Region& r) const
    {
        const auto pts = std::count_if(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.kind == Token::point; });
        if (pts == 0) return r.free_discs == 0;
        return (pts + 2L * p * r.free_discs) % 2 == 0;
    }

    bool discs_connected() const
    {
        std::vector<int> root(static_cast<std::size_t>(discs));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&root](int x) {
            while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
            return x;
        };
        for (auto [a, b] : links) root[static_cast<std::size_t>(find(a))] = find(b);
        for (int d = 1; d < discs; ++d)
            if (find(d) != find(0)) return false;
        return true;
    }

    bool joined_twice() const
    {
        std::vector<std::pair<int, int>> l;
        for (auto [a, b] : links)
            if (a != b) l.emplace_back(std::min(a, b), std::max(a, b));
        std::sort(l.begin(), l.end());
        return std::adjacent_find(l.begin(), l.end()) != l.end();
    }

    // records a finished region; false when it still holds unattached discs
    bool close(const Region& r, Marks& marks)
    {
        if (r.free_discs > 0) return false;
        bool touches_outer = false;
        int sides = 0;
        std::vector<int> arc_discs;
        for (const auto& t : r.tokens) {
            touches_outer = touches_outer || t.kind == Token::outer_arc;
            sides += t.kind == Token::string;
            if (t.kind == Token::disc_arc) arc_discs.push_back(t.disc);
        }
        if (!touches_outer) {
            ++internal_regions;
            if (sides < 3) marks.small = true;
            if (sides == 1) marks.cap = true;
            if (sides == 2 && arc_discs.size() == 2 && arc_discs[0] != arc_discs[1]) marks.join = true;
        }
        return true;
    }

    void run(std::vector<Region> open, Marks marks)
    {
        while (!open.empty() && !has_point(open.back())) {
            if (!close(open.back(), marks)) return;
            open.pop_back();
        }
        if (prune && (marks.cap || marks.join)) {
            ++(marks.cap ? census.capped : census.double_joined);
            return;
        }
        if (open.empty()) {
            if (!discs_connected()) return;
            ++census.tangles;
            if (!euler_counts(discs, strings, internal_regions, k)) ++census.euler_failures;
            else if (auto f = euler_regions(p, strings, k); !f || *f != internal_regions) ++census.euler_failures;
            if (!marks.small) {
                ++census.without_small_region;
                if (!euler_bound(p, strings, k)) ++census.bound_failures;
            }
            const bool joined = joined_twice();
            if (marks.cap) ++census.capped;
            else if (joined) ++census.double_joined;
            if (discs >= 2 && !marks.cap && !joined) ++census.counterexamples;
            return;
        }
        Region r = open.back();
        open.pop_back();
        const auto first = std::find_if(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.kind == Token::point; });
        std::rotate(r.tokens.begin(), first, r.tokens.end());
        const Token x = r.tokens.front();
        const std::size_t n = r.tokens.size();
        const long saved_regions = internal_regions;
        ++strings;
        // partner in the same region: split it in two
        for (std::size_t i = 1; i < n; ++i) {
            const Token& y = r.tokens[i];
            if (y.kind != Token::point) continue;
            if (discs > 0 && x.disc < 0 && y.disc < 0) continue;
            const bool link = x.disc >= 0 && y.disc >= 0;
            if (link) links.emplace_back(x.disc, y.disc);
            Region a, b;
            a.tokens.assign(r.tokens.begin() + 1, r.tokens.begin() + static_cast<std::ptrdiff_t>(i));
            a.tokens.push_back({Token::string});
            b.tokens.assign(r.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.tokens.end());
            b.tokens.push_back({Token::string});
            for (int share = 0; share <= r.free_discs; ++share) {
                a.free_discs = share;
                b.free_discs = r.free_discs - share;
                if (!viable(a) || !viable(b)) continue;
                auto next = open;
                next.push_back(b);
                next.push_back(a);
                internal_regions = saved_regions;
                run(std::move(next), marks);
            }
            if (link) links.pop_back();
        }
        // partner on an unattached disc: all choices of disc and attachment point are equivalent
        if (r.free_discs > 0) {
            const int disc = attached++;
            if (x.disc >= 0) links.emplace_back(x.disc, disc);
            Region a;
            a.free_discs = r.free_discs - 1;
            a.tokens.push_back({Token::string});
            a.tokens.push_back({Token::disc_arc, disc});
            for (int s = 1; s < 2 * p; ++s) {
                a.tokens.push_back({Token::point, disc, 2 * p - s});
                a.tokens.push_back({Token::disc_arc, disc});
            }
            a.tokens.push_back({Token::string});
            a.tokens.insert(a.tokens.end(), r.tokens.begin() + 1, r.tokens.end());
            auto next = open;
            next.push_back(std::move(a));
            internal_regions = saved_regions;
            run(std::move(next), marks);
            if (x.disc >= 0) links.pop_back();
            --attached;
        }
        internal_regions = saved_regions;
        --strings;
    }
};

}  // namespace detail

// Generates every connected planar tangle with `discs` internal discs of 2p points and 2k boundary
// points, no closed loops and no string joining two boundary points, up to relabelling the internal
// discs (rotating or permuting them). With prune set, a branch is abandoned once it has a cap on a
// disc or a region bounded by two strings running between two different discs.
inline TangleCensus planar_tangle_census(int p, int k, int discs, bool prune)
{
    if (p < 1 || k < 0 || discs < 0) throw std::invalid_argument("bad tangle parameters");
    detail::TangleSearch s{p, k, discs, prune, {}, 0, 0, 0, {}};
    detail::Region outer;
    for (int i = 0; i < 2 * k; ++i) {
        outer.tokens.push_back({detail::Token::point, -1, i});
        outer.tokens.push_back({detail::Token::outer_arc});
    }
    if (k == 0) outer.tokens.push_back({detail::Token::outer_arc});
    outer.free_discs = discs;
    s.run({outer}, {});
    return s.census;
}

struct PsiSquare {
    Cyclo x_squared;
    std::optional<Cyclo> x, y, a, b;     // exact when the square root lies in a cyclotomic field
    mpq_class x_lower, x_upper;          // certified bracket for x
};

namespace detail {

// sqrt of a positive rational inside a cyclotomic field
inline Cyclo sqrt_rational(const mpq_class& q)
{
    if (q <= 0) throw std::domain_error("square root of a non-positive rational");
    mpz_class n = q.get_num() * q.get_den();
    mpz_class outside = 1, squarefree = 1;
    for (mpz_class f = 2; f * f <= n; ++f) {
        while (n % (f * f) == 0) {
            n /= f * f;
            outside *= f;
        }
        if (n % f == 0) {
            n /= f;
            squarefree *= f;
        }
    }
    squarefree *= n;
    Cyclo root = 1;
    mpz_class rest = squarefree;
    for (mpz_class f = 2; rest > 1; ++f) {
        if (rest % f != 0) continue;
        rest /= f;
        const long pr = f.get_si();
        Cyclo g;
        if (pr == 2) {
            g = Cyclo::root(8, 1) + Cyclo::root(8, -1);
        } else {
            g = 0;
            for (long a = 1; a < pr; ++a) {
                mpz_class leg;
                mpz_class base = a;
                mpz_powm_ui(leg.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((pr - 1) / 2), f.get_mpz_t());
                g += leg == 1 ? Cyclo::root(static_cast<int>(pr), a) : -Cyclo::root(static_cast<int>(pr), a);
            }
            if (pr % 4 == 3) g *= Cyclo::root(4, 1);
        }
        if (g.sign() == Sign::negative) g = -g;
        root *= g;
    }
    return root * Cyclo(mpq_class(outside, q.get_den()));
}

}  // namespace detail

// x tau1 + y tau2 = 0, x^2 tau1 + y^2 tau2 = 1 with x > 0; then psi^2 = A psi + B p with A = x + y, B = -x y
inline PsiSquare psi_square_coefficients(const Cyclo& tau1, const Cyclo& tau2, int bisections = 60)
{
    if (!tau1.is_real() || !tau2.is_real() || tau1.sign() != Sign::positive || tau2.sign() != Sign::positive)
        throw std::domain_error("traces must be positive reals");
    PsiSquare r;
    r.x_squared = tau2 / (tau1 * (tau1 + tau2));
    if (r.x_squared.is_rational()) {
        const Cyclo x = detail::sqrt_rational(r.x_squared.to_rational());
        const Cyclo y = -(x * tau1 / tau2);
        r.x = x;
        r.y = y;
        r.a = x + y;
        r.b = -(x * y);
    }
    mpq_class lo = 0, hi = 1;
    while ((Cyclo(hi * hi) - r.x_squared).sign() == Sign::negative) hi *= 2;
    for (int i = 0; i < bisections; ++i) {
        const mpq_class mid = (lo + hi) / 2;
        if ((Cyclo(mid * mid) - r.x_squared).sign() == Sign::negative) lo = mid;
        else hi = mid;
    }
    r.x_lower = lo;
    r.x_upper = hi;
    return r;
}

// dimension of the level-`level` part generated by a lowest weight k module whose form first
// degenerates at level m, at delta = 2cos(pi/n); k = 0 gives the Temperley-Lieb part
inline mpz_class degenerate_dim(int k, int m, int level, int n)
{
    if (k == 0) return tl_dim_at_root(2 * level, 0, n);
    if (m <= k) throw std::invalid_argument("first degenerate level must exceed the lowest weight");
    mpz_class total = 0;
    for (int j = 2 * k; j <= 2 * m - 2; j += 2) total += tl_dim_at_root(2 * level, j, n);
    return total;
}

struct SkeinAudit {
    bool lowest_weight = false;     // every eps_i kills psi
    bool unit_norm = false;         // <psi, psi> = 1
    bool rotation_eigen = false;    // rho psi = omega psi
    bool null_relation = false;     // nu has zero norm and lies in the radical
    bool caps_unit_length = false;  // <rho^j xi, rho^j xi> = delta
};

inline SkeinAudit skein_relation_audit(const AdeCase& c, int jobs = 1)
{
    const auto nv = null_vector(c);
    const auto& m = nv.module;
    const auto psi = m.unit();
    SkeinAudit a;
    a.lowest_weight = m.is_lowest_weight(psi);
    a.unit_norm = m.inner(psi, psi) == Cyclo(1);
    a.rotation_eigen = m.act(generators::rho(c.d), psi) == c.omega * psi;
    const auto rad = null_vector_in_radical(nv, jobs);
    a.null_relation = null_norm(nv).is_zero() && rad.annihilates;
    a.caps_unit_length = m.inner(nv.cap_second, nv.cap_second) == c.delta && m.inner(nv.cap_third, nv.cap_third) == c.delta;
    return a;
}

}  // namespace atl
