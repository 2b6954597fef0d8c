// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "atl/ade.hpp"
#include "atl/graphs.hpp"
#include "atl/modules.hpp"
#include "atl/series.hpp"
#include "atl/tl.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace atl;
namespace gen = atl::generators;

namespace {

// wall-clock budgets in seconds
constexpr double budget_tl_dims = 1;
constexpr double budget_jones_wenzl = 5;
constexpr double budget_annular_counts = 5;
constexpr double budget_positivity = 120;
constexpr double budget_null_vectors = 120;
constexpr double budget_e7 = 60;
constexpr double budget_star = 1;
constexpr double budget_series = 5;
constexpr double budget_loops = 5;
constexpr double budget_census = 30;
constexpr double budget_degenerate = 10;
constexpr double budget_properties = 60;

constexpr int random_dim_sequences = 100;
constexpr std::uint32_t seed = 20240607;

using Module = AnnularModule<Cyclo>;
using Vector = ModuleVector<Cyclo>;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

Module low_weight(int k, const Cyclo& omega, const Cyclo& delta) { return Module(ModuleSpec<Cyclo>::low_weight(k, omega, delta)); }

bool positive_definite_through(const Module& mod, int max_level)
{
    for (const auto& row : mod.positivity_profile(max_level))
        if (row.dimension > 0 && row.kind != Definiteness::positive_definite) return false;
    return true;
}

Vector random_vector(const Module& mod, Boundary level, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3), root(0, 11);
    Vector v{level, {}};
    for (const auto& d : mod.basis(level)) v.add(d, Cyclo(coeff(rng)) * Cyclo::root(12, root(rng)));
    return v;
}

std::vector<AnnularDiagram> generators_from(Boundary level)
{
    const int m = level.pairs;
    if (m == 0) return {gen::sigma(!level.shaded), gen::epsbar(0, level.shaded ? 2 : 1)};
    std::vector<AnnularDiagram> out{gen::rho(m)};
    for (int i = 1; i <= 2 * m; ++i) out.push_back(gen::eps(m, i));
    for (int i = 1; i <= 2 * m + 2; ++i) out.push_back(gen::epsbar(m, i));
    return out;
}

void tl_dimensions(Check& c)
{
    const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n)
        c.expect(enumerate_tl_basis(n).size() == expected[static_cast<std::size_t>(n)], "size mismatch at n=" + std::to_string(n));
}

void jones_wenzl_checks(Check& c)
{
    const Cyclo delta = 3;
    for (int n = 1; n <= 7; ++n) {
        const auto p = jones_wenzl(n, delta);
        const auto tag = " at n=" + std::to_string(n);
        c.expect(multiply(p, p, delta) == p, "p^2 != p" + tag);
        c.expect(p.star() == p, "p* != p" + tag);
        for (int i = 1; i < n; ++i) c.expect(multiply(TLElement<Cyclo>::generator(n, i), p, delta).is_zero(), "E_i p != 0" + tag);
        for (int r = 1; r < n; ++r)
            c.expect(p.coefficient(descending_word(n, r)) == jw_chain_coefficient(n, r, delta), "chain coefficient" + tag);
    }
}

void annular_counts(Check& c)
{
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= m; ++k)
            c.expect(mpz_class(enumerate_annular(m, k, 2 * k).size()) == k * binomial(2 * m, m - k),
                     "full-rank count at m=" + std::to_string(m) + ", k=" + std::to_string(k));
    for (int k = 1; k <= 6; ++k) {
        const auto plus = enumerate_annular(Boundary::level(k), Boundary::plus(), 0, 0).size();
        const auto minus = enumerate_annular(Boundary::level(k), Boundary::minus(), 0, 0).size();
        c.expect(mpz_class(plus + minus) == binomial(2 * k, k), "inner-point-free count at k=" + std::to_string(k));
        c.expect(mpz_class(2 * plus) == binomial(2 * k, k) && plus == minus, "shaded halves at k=" + std::to_string(k));
    }
}

void generic_positivity(Check& c)
{
    const Cyclo three = 3;
    for (int k = 1; k <= 3; ++k)
        for (int j = 0; j < k; ++j)
            c.expect(positive_definite_through(low_weight(k, Cyclo::root(k, j), three), 5), "V^{k,omega} not PD, k=" + std::to_string(k));
    c.expect(positive_definite_through(Module(ModuleSpec<Cyclo>::with_mu(Cyclo(1), three)), 5), "V^mu not PD");
    for (const Cyclo& d : {Cyclo(2), three})
        for (bool plus : {true, false})
            c.expect(positive_definite_through(Module(ModuleSpec<Cyclo>::zero(plus, d)), 5), "V^{0,+-} not PD at delta=" + d.to_string());
}

void null_vectors(Check& c)
{
    for (const char* name : {"E6", "E8"})
        for (int branch : {1, -1}) {
            const auto nv = null_vector(AdeCase::make(name, branch));
            const auto rad = null_vector_in_radical(nv);
            const std::string tag = std::string(" for ") + name + (branch > 0 ? "+" : "-");
            c.expect(null_norm(nv).is_zero(), "nonzero norm" + tag);
            c.expect(rad.corank == 1, "corank " + std::to_string(rad.corank) + tag);
            c.expect(rad.annihilates, "Gram nu != 0" + tag);
        }
}

void e7(Check& c)
{
    const auto r = e7_obstruction();
    c.expect(r.determinants.size() == 4, "expected four omegas");
    for (const auto& [omega, det] : r.determinants) c.expect(!det.is_zero(), "vanishing determinant at omega=" + omega.to_string());
}

void star(Check& c)
{
    const auto e6 = star_equation(12, 3, 1, Cyclo::root(3, 1));
    const auto e8 = star_equation(30, 5, 1, Cyclo::root(5, 1));
    c.expect(e6.solvable && e6.z && e6.z->norm_squared() == Cyclo(1), "(12,3,1) unsolvable");
    c.expect(e8.solvable && e8.z && e8.z->norm_squared() == Cyclo(1), "(30,5,1) unsolvable");
    c.expect(!star_equation(30, 4, 1, Cyclo::root(4, 1)).solvable, "(30,4,1,i) solvable");
    c.expect(!star_equation(30, 4, 1, Cyclo::root(4, -1)).solvable, "(30,4,1,-i) solvable");
    c.expect(!star_equation(30, 3, 1, Cyclo::root(3, 1)).solvable, "(30,3,1) solvable");
    c.expect(!star_equation(30, 3, 2, Cyclo::root(3, 1)).solvable, "(30,3,2) solvable");
}

void series(Check& c)
{
    c.expect(theta_transform(catalan_series(16)) == Series::monomial(16, 0), "Theta(Catalan) != 1");
    std::mt19937 rng(seed);
    for (int t = 0; t < random_dim_sequences; ++t) {
        const int length = 1 + static_cast<int>(rng() % 12);
        std::vector<mpz_class> d{1};
        for (int i = 1; i < length; ++i) d.push_back(static_cast<long>(rng() % 50));
        const auto a = annular_multiplicities(d, length - 1);
        const auto th = theta_transform(Series(length - 1, std::vector<mpq_class>(d.begin(), d.end())));
        for (int r = 0; r < length; ++r) c.expect(th[r] == a[static_cast<std::size_t>(r)], "closed form differs, trial " + std::to_string(t));
    }
    for (int k = 1; k <= 4; ++k) {
        const auto s = module_dim_series(ModuleSpec<Cyclo>::low_weight(k, Cyclo(1), Cyclo(3)), 12);
        for (int m = 0; m <= 12; ++m) c.expect(s[m] == binomial(2 * m, m - k), "dimension series at k=" + std::to_string(k));
    }
}

void loops(Check& c)
{
    c.expect(loop_counts(graphs::E(6), 4)[4] == 21 && catalan(4) + 7 == 21, "E6 w_4");
    c.expect(loop_counts(graphs::E(7), 5)[5] == 51 && catalan(5) + 9 == 51, "E7 w_5");
    c.expect(loop_counts(graphs::E(8), 6)[6] == 143 && catalan(6) + 11 == 143, "E8 w_6");
    const auto e8 = all_starts_dims(graphs::E(8), 5);
    const std::vector<long> expected{7, 21, 73, 269, 1022};
    for (std::size_t n = 1; n <= 5; ++n) c.expect(e8[n] == expected[n - 1], "E8 all-starts dim " + std::to_string(n));
    const auto e6 = all_starts_dims(graphs::E(6), 3);
    c.expect(e6[2] == 15 && e6[3] == 53, "E6 all-starts dims");
}

void censuses(Check& c)
{
    const auto e8 = rotation_census(graphs::E(8), 5);
    c.expect(e8.fixed == 7 && e8.free_orbits == 203, "E8 level-5 census");
    const Cyclo delta = Cyclo::two_cos(20, 1);
    struct Row {
        Module mod;
        std::size_t fixed, free_orbits;
    };
    const std::vector<Row> rows{{Module(ModuleSpec<Cyclo>::trivial(delta)), 2, 8},
                                {Module(ModuleSpec<Cyclo>::with_mu(Cyclo(1), delta)), 2, 50},
                                {low_weight(2, Cyclo(-1), delta), 0, 24},
                                {low_weight(3, Cyclo::root(3, 1), delta), 0, 9},
                                {low_weight(4, Cyclo(-1), delta), 0, 2}};
    for (const auto& r : rows) {
        const auto cen = r.mod.rotation_census(Boundary::level(5));
        c.expect(cen.fixed == r.fixed && cen.free_orbits == r.free_orbits, "module census " + r.mod.spec().name());
    }
    const auto e6 = rotation_census(graphs::E(6), 3);
    c.expect(e6.multiplicities == std::vector<mpz_class>{21, 16, 16}, "E6 level-3 multiplicities");
}

void degenerate(Check& c)
{
    c.expect(degenerate_dim(0, 0, 9, 30) == 4862, "E8 TL part");
    c.expect(degenerate_dim(5, 6, 9, 30) == 2244, "E8 lowest weight 5 part");
    c.expect(degenerate_dim(0, 0, 5, 12) == 42 && degenerate_dim(3, 4, 5, 12) == 35, "E6 parts");
    c.expect(degenerate_dim(0, 0, 5, 12) + degenerate_dim(3, 4, 5, 12) == loop_counts(graphs::E(6), 5)[5], "E6 sum != w_5");
}

void properties(Check& c)
{
    std::mt19937 rng(seed);
    for (const Cyclo& delta : {Cyclo(3), Cyclo::two_cos(24, 1)})
        for (int n = 2; n <= 6; ++n)
            for (int i = 1; i < n; ++i) {
                const auto e = TLElement<Cyclo>::generator(n, i);
                c.expect(multiply(e, e, delta) == delta * e, "E_i^2");
                if (i + 1 < n) {
                    const auto f = TLElement<Cyclo>::generator(n, i + 1);
                    c.expect(multiply(multiply(e, f, delta), e, delta) == e, "E_i E_i+1 E_i");
                }
            }
    for (int m = 1; m <= 4; ++m) {
        const auto id = gen::identity(Boundary::level(m));
        AnnularDiagram r = id;
        for (int s = 0; s < m; ++s) r = compose(gen::rho(m), r).diagram;
        c.expect(r == id, "rho^m");
        c.expect(compose(gen::rho_half(m), gen::rho_half(m, true)).diagram == gen::rho(m), "half rotation squared");
        for (int i = 1; i <= 2 * m; ++i) {
            const auto e = gen::eps(m, i);
            const auto ee = compose(e, e.star());
            c.expect(ee.diagram == gen::identity(e.outer()) && ee.contractible == 1, "eps eps* = delta");
            c.expect(compose(e.star(), e).diagram == gen::F(m, i), "eps* eps = F");
            const auto ff = compose(gen::F(m, i), gen::F(m, i));
            c.expect(ff.diagram == gen::F(m, i) && ff.contractible == 1, "F^2 = delta F");
        }
    }
    const auto ss = compose(gen::sigma(true), gen::sigma(false));
    c.expect(ss.diagram.without_circles(2) == gen::identity(Boundary::plus()), "sigma pair");

    const std::vector<Module> mods{low_weight(2, Cyclo(-1), Cyclo::two_cos(24, 1)), low_weight(3, Cyclo::root(3, 1), Cyclo::two_cos(24, 1)),
                                   Module(ModuleSpec<Cyclo>::with_mu(Cyclo(1), Cyclo(3))), Module(ModuleSpec<Cyclo>::zero(true, Cyclo(3)))};
    for (const auto& mod : mods) {
        for (int m = 0; m <= 3; ++m)
            for (bool shaded : {true, false}) {
                const Boundary lv = m == 0 ? (shaded ? Boundary::plus() : Boundary::minus()) : Boundary::level(m);
                if (m > 0 && !shaded) continue;
                for (const auto& a : generators_from(lv)) {
                    const auto v = random_vector(mod, a.inner(), rng);
                    const auto w = random_vector(mod, a.outer(), rng);
                    c.expect(mod.inner(mod.act(a, v), w) == mod.inner(v, mod.act(a.star(), w)), "invariance in " + mod.spec().name());
                    if (a.outer().pairs > 0 && a.outer().pairs <= 3) {
                        for (const auto& b : generators_from(a.outer())) {
                            const auto ba = compose(b, a);
                            c.expect(mod.act(b, mod.act(a, v)) == mod.spec().delta.pow(ba.contractible) * mod.act(ba.diagram, v),
                                     "action vs composition in " + mod.spec().name());
                        }
                    }
                }
            }
        if (mod.spec().name().find("0,") != std::string::npos) continue;
        for (int m = 1; m <= 3; ++m) {
            const auto v = random_vector(mod, Boundary::level(m), rng), w = random_vector(mod, Boundary::level(m), rng);
            c.expect(mod.inner(mod.ad_rho_half(v), mod.ad_rho_half(w)) == mod.inner(v, w), "half rotation isometry in " + mod.spec().name());
            Vector x = v;
            int period = 0;
            do {
                x = mod.ad_rho_half(x);
                ++period;
            } while (x != v && period <= 24 * m);
            c.expect(x == v, "half rotation period unbounded in " + mod.spec().name());
        }
    }
}

struct Criterion {
    const char* name;
    double budget;
    std::function<void(Check&)> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"TL basis sizes", budget_tl_dims, tl_dimensions},
        {"Jones-Wenzl idempotents at delta = 3", budget_jones_wenzl, jones_wenzl_checks},
        {"annular diagram counts", budget_annular_counts, annular_counts},
        {"generic positive definiteness", budget_positivity, generic_positivity},
        {"E6 and E8 null vectors", budget_null_vectors, null_vectors},
        {"E7 Gram determinants nonzero", budget_e7, e7},
        {"rotation eigenvalue equation", budget_star, star},
        {"series and multiplicities", budget_series, series},
        {"principal graph loop counts", budget_loops, loops},
        {"rotation censuses", budget_census, censuses},
        {"dimensions at roots of unity", budget_degenerate, degenerate},
        {"randomized relation suite", budget_properties, properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].budget) c.expect(false, "over time budget");
        std::printf("%s %2zu %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs, c.ok ? "" : ": ", c.why.str().c_str());
        failures += !c.ok;
    }
    return failures == 0 ? 0 : 1;
}
