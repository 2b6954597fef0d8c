#pragma once

#include "annular.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atl {

enum class ModuleKind { low_weight, mu, zero_plus, zero_minus, trivial };

template <Scalar S>
struct ModuleSpec {
    ModuleKind kind = ModuleKind::trivial;
    int k = 0;
    S omega = S(1);
    S mu = S(0);
    S delta = S(2);

    static ModuleSpec low_weight(int k, const S& omega, const S& delta)
    {
        if (k < 1) throw std::invalid_argument("lowest weight must be at least 1");
        if (!is_zero(power(omega, k) - S(1))) throw std::invalid_argument("omega^k must equal 1");
        return {ModuleKind::low_weight, k, omega, S(0), delta};
    }
    static ModuleSpec with_mu(const S& mu, const S& delta)
    {
        if (!is_zero(mu - conjugate(mu))) throw std::invalid_argument("mu must be real");
        return {ModuleKind::mu, 0, S(1), mu, delta};
    }
    static ModuleSpec zero(bool plus, const S& delta)
    {
        return {plus ? ModuleKind::zero_plus : ModuleKind::zero_minus, 0, S(1), S(0), delta};
    }
    static ModuleSpec trivial(const S& delta) { return {ModuleKind::trivial, 0, S(1), S(0), delta}; }

    std::string name() const
    {
        switch (kind) {
        case ModuleKind::low_weight: return "V^{" + std::to_string(k) + ",omega}";
        case ModuleKind::mu: return "V^mu";
        case ModuleKind::zero_plus: return "V^{0,+}";
        case ModuleKind::zero_minus: return "V^{0,-}";
        case ModuleKind::trivial: return "V^TL";
        }
        return "?";
    }

    // inner boundary of basis diagrams
    Boundary base() const
    {
        switch (kind) {
        case ModuleKind::low_weight: return Boundary::level(k);
        case ModuleKind::mu:
        case ModuleKind::zero_plus: return Boundary::plus();
        case ModuleKind::zero_minus:
        case ModuleKind::trivial: return Boundary::minus();
        }
        return {};
    }
};

template <Scalar S>
struct ModuleVector {
    Boundary level;
    std::map<AnnularDiagram, S> terms;

    void add(const AnnularDiagram& d, const S& c)
    {
        if (is_zero(c)) return;
        auto [it, fresh] = terms.emplace(d, c);
        if (!fresh) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    S coefficient(const AnnularDiagram& d) const
    {
        auto it = terms.find(d);
        return it == terms.end() ? S(0) : it->second;
    }

    bool is_zero_vector() const { return terms.empty(); }

    ModuleVector& operator+=(const ModuleVector& o)
    {
        for (const auto& [d, c] : o.terms) add(d, c);
        return *this;
    }
    ModuleVector& operator-=(const ModuleVector& o)
    {
        for (const auto& [d, c] : o.terms) add(d, S(0) - c);
        return *this;
    }
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const S& s, const ModuleVector& v)
    {
        ModuleVector out{v.level, {}};
        for (const auto& [d, c] : v.terms) out.add(d, s * c);
        return out;
    }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b)
    {
        return (a - b).terms.empty();
    }
};

template <Scalar S>
struct GramResult {
    Matrix<S> matrix;
    std::size_t rank = 0;
    bool positive_definite = false;
    bool positive_semidefinite = false;
    std::vector<ModuleVector<S>> kernel_basis;
};

struct PositivityRow {
    Boundary level;
    std::size_t dimension = 0;
    Definiteness kind = Definiteness::positive_definite;
    std::size_t corank = 0;
};

struct RotationCensus {
    std::size_t fixed = 0;
    std::size_t free_orbits = 0;
    std::map<std::size_t, std::size_t> orbits_by_size;
};

template <Scalar S>
class AnnularModule {
public:
    explicit AnnularModule(ModuleSpec<S> spec) : spec_(std::move(spec))
    {
        if (!is_zero(spec_.delta - conjugate(spec_.delta))) throw std::domain_error("delta must be real");
        if (spec_.kind == ModuleKind::low_weight) {
            rho_powers_.push_back(generators::identity(Boundary::level(spec_.k)));
            for (int e = 1; e < spec_.k; ++e)
                rho_powers_.push_back(compose(rho_powers_.back(), generators::rho(spec_.k)).diagram);
            for (int e = 0; e < spec_.k; ++e) omega_powers_.push_back(power(spec_.omega, e));
        }
    }

    const ModuleSpec<S>& spec() const { return spec_; }

    std::vector<AnnularDiagram> basis(Boundary level) const
    {
        if (level.pairs > 0 && level.shaded) throw std::invalid_argument("levels with points are unshaded at the marker");
        switch (spec_.kind) {
        case ModuleKind::low_weight: {
            if (level.pairs < spec_.k) return {};
            std::vector<AnnularDiagram> out;
            for (auto& d : enumerate_annular(level, Boundary::level(spec_.k), 2 * spec_.k, 0))
                if (reduce(d, 0)->first == d) out.push_back(std::move(d));
            return out;
        }
        case ModuleKind::mu: return enumerate_annular(level, Boundary::plus(), 0, 1);
        case ModuleKind::zero_plus: return enumerate_annular(level, Boundary::plus(), 0, 0);
        case ModuleKind::zero_minus: return enumerate_annular(level, Boundary::minus(), 0, 0);
        case ModuleKind::trivial: {
            std::vector<AnnularDiagram> out;
            for (auto& d : enumerate_annular(level, Boundary::minus(), 0, 1))
                if (reduce(d, 0)->first == d) out.push_back(std::move(d));
            return out;
        }
        }
        return {};
    }

    std::size_t dimension(Boundary level) const { return basis(level).size(); }

    ModuleVector<S> basis_vector(const AnnularDiagram& d) const
    {
        auto r = reduce(d, 0);
        ModuleVector<S> v{d.outer(), {}};
        if (r) v.add(r->first, r->second);
        return v;
    }

    ModuleVector<S> from_coordinates(Boundary level, const std::vector<AnnularDiagram>& basis_list,
                                     const std::vector<S>& coords) const
    {
        if (coords.size() != basis_list.size()) throw std::invalid_argument("coordinate count mismatch");
        ModuleVector<S> v{level, {}};
        for (std::size_t i = 0; i < coords.size(); ++i) v.add(basis_list[i], coords[i]);
        return v;
    }

    std::vector<S> coordinates(const ModuleVector<S>& v, const std::vector<AnnularDiagram>& basis_list) const
    {
        std::vector<S> out;
        out.reserve(basis_list.size());
        for (const auto& d : basis_list) out.push_back(v.coefficient(d));
        return out;
    }

    // lowest weight vector psi for V^{k,omega}, unit vectors at levels +/- otherwise
    ModuleVector<S> unit(Boundary level = Boundary::plus()) const
    {
        if (spec_.kind == ModuleKind::low_weight) return basis_vector(generators::identity(Boundary::level(spec_.k)));
        const auto b = basis(level);
        if (level.pairs != 0 || b.empty()) throw std::invalid_argument("no unit vector at this level");
        return basis_vector(b.front());
    }

    ModuleVector<S> act(const AnnularDiagram& t, const ModuleVector<S>& v) const
    {
        if (t.inner() != v.level) throw std::invalid_argument("boundary mismatch: " + t.inner().label() + " vs " + v.level.label());
        ModuleVector<S> out{t.outer(), {}};
        for (const auto& [d, c] : v.terms) {
            const auto comp = compose(t, d);
            if (auto r = reduce(comp.diagram, comp.contractible)) out.add(r->first, c * r->second);
        }
        return out;
    }

    // <a, b> for basis diagrams: the value of b* a in the base of the module
    S pairing(const AnnularDiagram& a, const AnnularDiagram& b) const
    {
        const auto comp = compose(b.star(), a);
        auto r = reduce(comp.diagram, comp.contractible);
        return r ? r->second : S(0);
    }

    S inner(const ModuleVector<S>& v, const ModuleVector<S>& w) const
    {
        if (v.level != w.level) throw std::invalid_argument("inner product across levels");
        S total(0);
        for (const auto& [a, x] : v.terms)
            for (const auto& [b, y] : w.terms) {
                const S p = pairing(a, b);
                if (!is_zero(p)) total = total + x * conjugate(y) * p;
            }
        return total;
    }

    Matrix<S> gram_matrix(const std::vector<AnnularDiagram>& b, int jobs = 1) const
    {
        Matrix<S> g(b.size(), b.size());
        parallel_for(b.size(), jobs, [&](std::size_t i) {
            for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = pairing(b[i], b[j]);
        });
        return g;
    }

    GramResult<S> gram(Boundary level, int jobs = 1) const
    {
        const auto b = basis(level);
        GramResult<S> out;
        out.matrix = gram_matrix(b, jobs);
        const auto report = classify_hermitian(out.matrix);
        out.positive_definite = report.kind == Definiteness::positive_definite && report.corank == 0;
        out.positive_semidefinite = report.kind != Definiteness::indefinite;
        for (auto& c : kernel(out.matrix.transpose())) out.kernel_basis.push_back(from_coordinates(level, b, c));
        out.rank = b.size() - out.kernel_basis.size();
        return out;
    }

    std::vector<PositivityRow> positivity_profile(int max_level, int jobs = 1) const
    {
        std::vector<PositivityRow> rows;
        std::vector<Boundary> levels;
        if (spec_.kind == ModuleKind::low_weight) {
            for (int m = spec_.k; m <= max_level; ++m) levels.push_back(Boundary::level(m));
        } else {
            levels = {Boundary::plus(), Boundary::minus()};
            for (int m = 1; m <= max_level; ++m) levels.push_back(Boundary::level(m));
        }
        for (const auto& lv : levels) {
            const auto b = basis(lv);
            const auto report = classify_hermitian(gram_matrix(b, jobs));
            rows.push_back({lv, b.size(), report.kind, report.corank});
        }
        return rows;
    }

    ModuleVector<S> ad_rho_half(const ModuleVector<S>& v) const
    {
        const int m = v.level.pairs;
        if (m < 1) throw std::invalid_argument("rotation by one needs a level with points");
        if (spec_.kind == ModuleKind::low_weight) {
            const auto left = generators::rho_half(m);
            const auto right = generators::rho_half(spec_.k).star();
            ModuleVector<S> out{v.level, {}};
            for (const auto& [d, c] : v.terms) {
                const auto a = compose(left, d.flipped());
                const auto b = compose(a.diagram, right);
                if (auto r = reduce(b.diagram, a.contractible + b.contractible)) out.add(r->first, c * r->second);
            }
            return out;
        }
        if (spec_.kind == ModuleKind::mu) {
            if (is_zero(spec_.mu)) throw std::domain_error("rotation by one needs mu != 0");
            const auto left = generators::rho_half(m);
            const auto right = generators::sigma(false);
            const S inv = S(1) / spec_.mu;
            ModuleVector<S> out{v.level, {}};
            for (const auto& [d, c] : v.terms) {
                const auto a = compose(left, d.flipped());
                const auto b = compose(a.diagram, right);
                if (auto r = reduce(b.diagram, a.contractible + b.contractible)) out.add(r->first, inv * c * r->second);
            }
            return out;
        }
        throw std::invalid_argument("no rotation by one on " + spec_.name());
    }

    bool is_lowest_weight(const ModuleVector<S>& v) const
    {
        if (v.level.pairs == 0) return true;
        for (int i = 1; i <= 2 * v.level.pairs; ++i)
            if (!act(generators::eps(v.level.pairs, i), v).is_zero_vector()) return false;
        return true;
    }

    // rho acting on basis diagrams, read as a permutation up to scalars
    RotationCensus rotation_census(Boundary level) const
    {
        const auto b = basis(level);
        const auto r = generators::rho(level.pairs);
        std::map<AnnularDiagram, std::size_t> index;
        for (std::size_t i = 0; i < b.size(); ++i) index.emplace(b[i], i);
        std::vector<std::size_t> image(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            const auto comp = compose(r, b[i]);
            auto red = reduce(comp.diagram, comp.contractible);
            if (!red) throw std::logic_error("rotation annihilated a basis element");
            image[i] = index.at(red->first);
        }
        RotationCensus census;
        std::vector<bool> seen(b.size(), false);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = image[j]) {
                seen[j] = true;
                ++len;
            }
            ++census.orbits_by_size[len];
        }
        census.fixed = census.orbits_by_size.count(1) ? census.orbits_by_size.at(1) : 0;
        const auto full = static_cast<std::size_t>(level.pairs);
        census.free_orbits = census.orbits_by_size.count(full) ? census.orbits_by_size.at(full) : 0;
        return census;
    }

    // d written as scalar times basis diagram, or nothing when it acts as zero
    std::optional<std::pair<AnnularDiagram, S>> reduce(const AnnularDiagram& d, int contractible) const
    {
        const S loops = power(spec_.delta, contractible);
        switch (spec_.kind) {
        case ModuleKind::low_weight: {
            if (d.through_strings() < 2 * spec_.k) return std::nullopt;
            std::optional<AnnularDiagram> best;
            int best_e = 0;
            for (int e = 0; e < spec_.k; ++e) {
                auto c = compose(d, rho_powers_[static_cast<std::size_t>(e)]).diagram;
                if (!best || c < *best) {
                    best = std::move(c);
                    best_e = e;
                }
            }
            // d = best o rho^{-e}, and rho^{-e} psi = omega^{-e} psi
            const S phase = omega_powers_[static_cast<std::size_t>((spec_.k - best_e) % spec_.k)];
            return std::make_pair(std::move(*best), loops * phase);
        }
        case ModuleKind::mu: {
            const int c = d.circles();
            return std::make_pair(d.without_circles(c - c % 2), loops * power(spec_.mu, c - c % 2));
        }
        case ModuleKind::zero_plus:
        case ModuleKind::zero_minus:
            if (d.circles() > 0) return std::nullopt;
            return std::make_pair(d, loops);
        case ModuleKind::trivial: {
            std::vector<std::pair<int, int>> outer_arcs;
            for (auto [a, b, w] : d.arcs(true)) outer_arcs.emplace_back(a, b);
            const int circles = d.outer().pairs == 0 && d.outer().shaded ? 1 : 0;
            auto canon = AnnularDiagram::from_strings(d.outer(), d.inner(), outer_arcs, {}, {}, circles,
                                                      std::vector<int>(outer_arcs.size(), 0));
            return std::make_pair(std::move(canon), loops * power(spec_.delta, d.circles() - circles));
        }
        }
        return std::nullopt;
    }

private:
    ModuleSpec<S> spec_;
    std::vector<AnnularDiagram> rho_powers_;
    std::vector<S> omega_powers_;
};

struct DimensionRow {
    std::string module;
    std::string generating_function;
    std::vector<mpz_class> dims;
};

// dimensions for levels 0..max_level (level 0 counts V_+ for V^mu, halves for V^{0,+-})
inline std::vector<DimensionRow> dimension_table(int max_level, int max_k = 3)
{
    std::vector<DimensionRow> rows;
    for (int k = 1; k <= max_k; ++k) {
        DimensionRow r{"V^{" + std::to_string(k) + ",omega}", "z^k C(z)^{2k}/sqrt(1-4z)", {}};
        for (int m = 0; m <= max_level; ++m) r.dims.push_back(m < k ? mpz_class(0) : binomial(2 * m, m - k));
        rows.push_back(std::move(r));
    }
    DimensionRow mu{"V^mu", "1/sqrt(1-4z)", {}};
    DimensionRow pm{"V^{0,+-}", "1/(2 sqrt(1-4z))", {}};
    DimensionRow tl{"V^TL", "C(z)", {}};
    for (int m = 0; m <= max_level; ++m) {
        mu.dims.push_back(binomial(2 * m, m));
        pm.dims.push_back(m == 0 ? mpz_class(1) : mpz_class(binomial(2 * m, m) / 2));
        tl.dims.push_back(catalan(m));
    }
    rows.push_back(std::move(mu));
    rows.push_back(std::move(pm));
    rows.push_back(std::move(tl));
    return rows;
}

}  // namespace atl
