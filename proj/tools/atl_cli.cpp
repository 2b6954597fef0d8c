#include "atl/ade.hpp"
#include "atl/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

using namespace atl;

namespace {

struct Settings {
    std::string format = "table";
    bool approx = false;
    int jobs = 1;
    int conductor = 0;
};

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Settings settings;

Cyclo scalar_arg(const std::string& text, const char* what)
{
    Cyclo x;
    try {
        x = parse_scalar(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("--") + what + ": " + e.what());
    }
    if (settings.conductor > 0) {
        if (settings.conductor % x.conductor() != 0)
            throw InputError(std::string("--") + what + " = " + text + " does not lie in Q(zeta_" + std::to_string(settings.conductor) + ")");
        x = x.promoted(settings.conductor);
    }
    return x;
}

Json value(const Cyclo& x)
{
    if (settings.format == "json") return to_json(x, settings.approx);
    return show(x, settings.approx);
}

std::string flat(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat(j[i]);
        return s + "]";
    }
    if (j.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            s += (first ? "" : ", ") + k + ": " + flat(v);
            first = false;
        }
        return s + "}";
    }
    return j.dump();
}

void print_table(const Json& j, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::cout << pad << k << ":\n";
            for (const auto& row : v) std::cout << pad << "  " << flat(row) << "\n";
        } else if (v.is_object()) {
            std::cout << pad << k << ":\n";
            print_table(v, indent + 2);
        } else {
            std::cout << pad << k << ": " << flat(v) << "\n";
        }
    }
}

void emit(const Json& j)
{
    if (settings.format == "json") std::cout << j.dump(2) << "\n";
    else print_table(j);
}

// shared module options
struct ModuleArgs {
    std::string kind = "lw";
    int k = 1;
    std::string omega = "1";
    std::string mu = "1";
    std::string delta = "3";

    void attach(CLI::App* app)
    {
        app->add_option("--kind", kind, "lw | mu | zero+ | zero- | tl")->check(CLI::IsMember({"lw", "mu", "zero+", "zero-", "tl"}));
        app->add_option("--k", k, "lowest weight (lw modules)");
        app->add_option("--omega", omega, "rotation eigenvalue, omega^k = 1");
        app->add_option("--mu", mu, "value of a pair of circles (mu modules)");
        app->add_option("--delta", delta, "loop value");
    }

    ModuleSpec<Cyclo> spec() const
    {
        const Cyclo d = scalar_arg(delta, "delta");
        try {
            if (kind == "lw") return ModuleSpec<Cyclo>::low_weight(k, scalar_arg(omega, "omega"), d);
            if (kind == "mu") return ModuleSpec<Cyclo>::with_mu(scalar_arg(mu, "mu"), d);
            if (kind == "zero+") return ModuleSpec<Cyclo>::zero(true, d);
            if (kind == "zero-") return ModuleSpec<Cyclo>::zero(false, d);
            return ModuleSpec<Cyclo>::trivial(d);
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
};

Boundary level_arg(const std::string& text)
{
    if (text == "+") return Boundary::plus();
    if (text == "-") return Boundary::minus();
    try {
        std::size_t used = 0;
        const int m = std::stoi(text, &used);
        if (used != text.size() || m < 0) throw std::invalid_argument(text);
        if (m == 0) return Boundary::minus();
        return Boundary::level(m);
    } catch (const std::exception&) {
        throw InputError("--level must be +, - or a nonnegative integer, got '" + text + "'");
    }
}

struct GraphArgs {
    std::string builtin;
    std::string file;

    void attach(CLI::App* app)
    {
        auto* b = app->add_option("--builtin", builtin, "A<n>, D<n>, E6, E7 or E8");
        auto* f = app->add_option("--file", file, "graph JSON file");
        b->excludes(f);
    }

    PointedGraph graph() const
    {
        if (!file.empty()) return graph_from_file(file);
        if (builtin.empty()) throw InputError("give --builtin or --file");
        try {
            return graphs::builtin(builtin);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
};

std::vector<mpz_class> int_list(const std::string& text, const char* what)
{
    std::vector<mpz_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw InputError(std::string("--") + what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw InputError(std::string("--") + what + " is empty");
    return out;
}

int branch_arg(const std::string& b)
{
    if (b == "plus" || b == "+" || b == "+1") return 1;
    if (b == "minus" || b == "-" || b == "-1") return -1;
    throw InputError("--branch must be plus or minus");
}

Json module_vector_json(const ModuleVector<Cyclo>& v)
{
    Json out = Json::array();
    for (const auto& [d, c] : v.terms) out.push_back({{"diagram", to_json(d)}, {"coefficient", value(c)}});
    return out;
}

std::string kind_name(Definiteness k)
{
    switch (k) {
    case Definiteness::positive_definite: return "positive definite";
    case Definiteness::positive_semidefinite: return "positive semidefinite";
    case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Annular Temperley-Lieb calculus"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", settings.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--approx", settings.approx, "print decimals instead of exact values");
    app.add_option("--jobs", settings.jobs, "threads for Gram entries")->check(CLI::PositiveNumber);
    app.add_option("--conductor", settings.conductor, "express scalars in Q(zeta_N)")->check(CLI::NonNegativeNumber);

    std::function<void()> action;

    // tl
    auto* tl = app.add_subcommand("tl", "ordinary Temperley-Lieb algebra");
    tl->require_subcommand(1);
    int n = 0, r = 1, t = 0, root = 0;
    std::string delta = "3";

    auto* tl_basis = tl->add_subcommand("basis", "noncrossing basis diagrams");
    tl_basis->add_option("--n", n)->required();
    tl_basis->callback([&] {
        action = [&] {
            if (n < 0) throw InputError("--n must be nonnegative");
            const auto b = enumerate_tl_basis(n);
            Json diagrams = Json::array();
            for (const auto& d : b) diagrams.push_back(to_json(d));
            emit({{"n", n}, {"count", b.size()}, {"catalan", catalan(n).get_str()}, {"diagrams", diagrams}});
        };
    });

    auto* tl_jw = tl->add_subcommand("jw", "Jones-Wenzl idempotent");
    tl_jw->add_option("--n", n)->required();
    tl_jw->add_option("--delta", delta);
    tl_jw->callback([&] {
        action = [&] {
            if (n < 0) throw InputError("--n must be nonnegative");
            const Cyclo d = scalar_arg(delta, "delta");
            TLElement<Cyclo> p;
            try {
                p = jones_wenzl(n, d);
            } catch (const VanishingDenominator& e) {
                throw InputError(e.what());
            }
            Json terms = Json::array();
            for (const auto& [dia, c] : p.terms()) terms.push_back({{"diagram", to_json(dia)}, {"coefficient", value(c)}});
            emit({{"n", n}, {"delta", value(d)}, {"terms", terms}});
        };
    });

    auto* tl_chain = tl->add_subcommand("chain", "coefficient of E_{n-1}...E_r in p_n");
    tl_chain->add_option("--n", n)->required();
    tl_chain->add_option("--r", r)->required();
    tl_chain->add_option("--delta", delta);
    tl_chain->callback([&] {
        action = [&] {
            if (r < 1 || r >= n) throw InputError("need 1 <= r < n");
            const Cyclo d = scalar_arg(delta, "delta");
            Cyclo formula, extracted;
            try {
                formula = jw_chain_coefficient(n, r, d);
                extracted = jones_wenzl(n, d).coefficient(descending_word(n, r));
            } catch (const VanishingDenominator& e) {
                throw InputError(e.what());
            }
            emit({{"n", n}, {"r", r}, {"formula", value(formula)}, {"extracted", value(extracted)}, {"match", formula == extracted}});
            if (!(formula == extracted)) throw CheckFailed("chain coefficient mismatch");
        };
    });

    auto* tl_dimension = tl->add_subcommand("dim", "dimension of V_n^t, generic or at delta = 2cos(pi/m)");
    tl_dimension->add_option("--n", n)->required();
    tl_dimension->add_option("--t", t)->required();
    tl_dimension->add_option("--root", root, "m for delta = 2cos(pi/m)");
    tl_dimension->callback([&] {
        action = [&] {
            try {
                Json out{{"n", n}, {"t", t}, {"generic", tl_dim(n, t).get_str()}};
                if (root > 0) out["at_root"] = tl_dim_at_root(n, t, root).get_str();
                emit(out);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        };
    });

    // annular
    auto* ann = app.add_subcommand("annular", "annular diagrams");
    ann->require_subcommand(1);
    int m = 1, k = 1, idx = 1;
    bool list = false;
    std::string gen_kind;

    auto* ann_enum = ann->add_subcommand("enumerate", "diagrams (m, k) with t through strings and no circles");
    ann_enum->add_option("--m", m)->required();
    ann_enum->add_option("--k", k)->required();
    ann_enum->add_option("--t", t)->required();
    ann_enum->add_flag("--list", list, "print the diagrams");
    ann_enum->callback([&] {
        action = [&] {
            if (m < 0 || k < 0) throw InputError("levels must be nonnegative");
            std::vector<AnnularDiagram> ds;
            try {
                ds = enumerate_annular(m, k, t);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            Json out{{"m", m}, {"k", k}, {"t", t}, {"count", ds.size()}};
            if (t == 2 * k && k > 0 && k <= m) out["expected"] = mpz_class(k * binomial(2 * m, m - k)).get_str();
            if (list) out["diagrams"] = to_json_list(ds);
            emit(out);
        };
    });

    auto* ann_gen = ann->add_subcommand("generator", "a named generator");
    ann_gen->add_option("--kind", gen_kind)->required()->check(
        CLI::IsMember({"eps", "epsbar", "F", "rho", "rho_half", "sigma_plus", "sigma_minus", "identity"}));
    ann_gen->add_option("--m", m);
    ann_gen->add_option("--i", idx);
    ann_gen->callback([&] {
        action = [&] {
            AnnularDiagram d;
            try {
                if (gen_kind == "eps") d = generators::eps(m, idx);
                else if (gen_kind == "epsbar") d = generators::epsbar(m, idx);
                else if (gen_kind == "F") d = generators::F(m, idx);
                else if (gen_kind == "rho") d = generators::rho(m);
                else if (gen_kind == "rho_half") d = generators::rho_half(m);
                else if (gen_kind == "sigma_plus") d = generators::sigma(true);
                else if (gen_kind == "sigma_minus") d = generators::sigma(false);
                else d = generators::identity(Boundary::level(m));
            } catch (const std::exception& e) {
                throw InputError(e.what());
            }
            Json out = to_json(d);
            out["rank"] = d.rank();
            emit(out);
        };
    });

    // module
    auto* mod = app.add_subcommand("module", "annular Temperley-Lieb modules");
    mod->require_subcommand(1);
    ModuleArgs margs;
    std::string level = "1";
    int max_level = 4;

    auto* mod_basis = mod->add_subcommand("basis", "basis diagrams at a level");
    margs.attach(mod_basis);
    mod_basis->add_option("--level", level, "+, - or a number of point pairs");
    mod_basis->callback([&] {
        action = [&] {
            AnnularModule<Cyclo> mm(margs.spec());
            const auto b = mm.basis(level_arg(level));
            emit({{"module", mm.spec().name()}, {"level", level_arg(level).label()}, {"dimension", b.size()}, {"basis", to_json_list(b)}});
        };
    });

    auto* mod_gram = mod->add_subcommand("gram", "Gram matrix, rank, definiteness and kernel");
    margs.attach(mod_gram);
    mod_gram->add_option("--level", level);
    mod_gram->callback([&] {
        action = [&] {
            AnnularModule<Cyclo> mm(margs.spec());
            const auto lv = level_arg(level);
            const auto g = mm.gram(lv, settings.jobs);
            const auto report = classify_hermitian(g.matrix);
            Json kern = Json::array();
            for (const auto& v : g.kernel_basis) kern.push_back(module_vector_json(v));
            Json rows = Json::array();
            for (std::size_t i = 0; i < g.matrix.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < g.matrix.cols(); ++j) row.push_back(value(g.matrix(i, j)));
                rows.push_back(row);
            }
            Json out{{"module", mm.spec().name()},
                     {"level", lv.label()},
                     {"dimension", g.matrix.rows()},
                     {"rank", g.rank},
                     {"definiteness", kind_name(report.kind)},
                     {"positive_definite", g.positive_definite},
                     {"matrix", rows},
                     {"kernel", kern}};
            if (settings.format == "table") {
                out.erase("matrix");
                out.erase("kernel");
                out["kernel_dimension"] = g.kernel_basis.size();
            }
            emit(out);
        };
    });

    auto* mod_profile = mod->add_subcommand("profile", "definiteness of the form level by level");
    margs.attach(mod_profile);
    mod_profile->add_option("--max-level", max_level);
    mod_profile->callback([&] {
        action = [&] {
            AnnularModule<Cyclo> mm(margs.spec());
            Json rows = Json::array();
            for (const auto& row : mm.positivity_profile(max_level, settings.jobs))
                rows.push_back({{"level", row.level.label()}, {"dimension", row.dimension}, {"form", kind_name(row.kind)}, {"corank", row.corank}});
            emit({{"module", mm.spec().name()}, {"levels", rows}});
        };
    });

    auto* mod_census = mod->add_subcommand("census", "orbits of rho on the basis");
    margs.attach(mod_census);
    mod_census->add_option("--level", level);
    mod_census->callback([&] {
        action = [&] {
            AnnularModule<Cyclo> mm(margs.spec());
            const auto c = mm.rotation_census(level_arg(level));
            Json sizes = Json::object();
            for (auto [s, cnt] : c.orbits_by_size) sizes[std::to_string(s)] = cnt;
            emit({{"module", mm.spec().name()}, {"level", level_arg(level).label()}, {"fixed", c.fixed}, {"free_orbits", c.free_orbits}, {"orbits_by_size", sizes}});
        };
    });

    auto* mod_dims = mod->add_subcommand("dims", "dimension table");
    mod_dims->add_option("--max-level", max_level);
    mod_dims->add_option("--max-k", k);
    mod_dims->callback([&] {
        action = [&] {
            Json rows = Json::array();
            for (const auto& row : dimension_table(max_level, k)) rows.push_back({{"module", row.module}, {"series", row.generating_function}, {"dims", to_json_list(row.dims)}});
            emit({{"rows", rows}});
        };
    });

    // series
    auto* ser = app.add_subcommand("series", "power series");
    ser->require_subcommand(1);
    int order = 16, max_r = 8;
    std::string dims;

    auto* ser_cat = ser->add_subcommand("catalan", "Catalan series");
    ser_cat->add_option("--order", order);
    ser_cat->callback([&] { action = [&] { emit({{"order", order}, {"coefficients", to_json(catalan_series(order))}}); }; });

    auto* ser_dims = ser->add_subcommand("dims", "dimension series of a module");
    margs.attach(ser_dims);
    ser_dims->add_option("--order", order);
    ser_dims->callback([&] {
        action = [&] {
            const auto spec = margs.spec();
            emit({{"module", spec.name()}, {"order", order}, {"coefficients", to_json(module_dim_series(spec, order))}});
        };
    });

    auto* ser_theta = ser->add_subcommand("theta", "Theta transform of a dimension sequence");
    ser_theta->add_option("--dims", dims, "comma separated dimensions d_0, d_1, ...")->required();
    ser_theta->add_option("--order", order);
    ser_theta->callback([&] {
        action = [&] {
            const auto d = int_list(dims, "dims");
            if (order < 0) throw InputError("--order must be nonnegative");
            if (static_cast<int>(d.size()) <= order) order = static_cast<int>(d.size()) - 1;
            std::vector<mpq_class> q(d.begin(), d.end());
            emit({{"order", order}, {"theta", to_json(theta_transform(Series(order, q)))}});
        };
    });

    auto* ser_mult = ser->add_subcommand("multiplicities", "annular multiplicities a_r by the closed formula");
    ser_mult->add_option("--dims", dims)->required();
    ser_mult->add_option("--max-r", max_r);
    ser_mult->callback([&] {
        action = [&] {
            const auto d = int_list(dims, "dims");
            std::vector<mpz_class> a;
            try {
                a = annular_multiplicities(d, max_r);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            Json out{{"multiplicities", to_json_list(a)}};
            if (auto neg = first_negative(a)) out["first_negative"] = *neg;
            emit(out);
        };
    });

    // graph
    auto* gr = app.add_subcommand("graph", "pointed bipartite graphs");
    gr->require_subcommand(1);
    GraphArgs gargs;
    bool expect_pass = false;

    auto* gr_screen = gr->add_subcommand("screen", "annular multiplicity screen");
    gargs.attach(gr_screen);
    gr_screen->add_option("--max-r", max_r);
    gr_screen->add_flag("--expect-pass", expect_pass, "exit 1 when an obstruction is found");
    gr_screen->callback([&] {
        action = [&] {
            const auto g = gargs.graph();
            if (max_r < 1) throw InputError("--max-r must be positive");
            const auto s = screen_principal_graph(g, max_r);
            Json out{{"loops", to_json_list(s.loops)},
                     {"multiplicities", to_json_list(s.multiplicities)},
                     {"norm_squared_bracket", Json::array({s.norm.lower.get_d(), s.norm.upper.get_d()})},
                     {"norm_exceeds_two", s.norm.exceeds_two},
                     {"verdict", s.verdict}};
            if (s.first_negative) out["first_negative"] = *s.first_negative;
            emit(out);
            if (expect_pass && s.first_negative && s.norm.exceeds_two) throw CheckFailed(s.verdict);
        };
    });

    auto* gr_census = gr->add_subcommand("census", "rotation census of loops of length 2k");
    gargs.attach(gr_census);
    gr_census->add_option("--k", k)->required();
    gr_census->callback([&] {
        action = [&] {
            const auto g = gargs.graph();
            if (k < 1) throw InputError("--k must be positive");
            const auto c = rotation_census(g, k);
            Json sizes = Json::object();
            for (auto [s, cnt] : c.orbits_by_size) sizes[std::to_string(s)] = cnt;
            emit({{"k", k}, {"loops", c.loops}, {"fixed", c.fixed}, {"free_orbits", c.free_orbits}, {"orbits_by_size", sizes},
                  {"multiplicities", to_json_list(c.multiplicities)}});
        };
    });

    auto* gr_loops = gr->add_subcommand("loops", "based loop counts and all-starts dimensions");
    gargs.attach(gr_loops);
    gr_loops->add_option("--n", n)->required();
    gr_loops->callback([&] {
        action = [&] {
            const auto g = gargs.graph();
            if (n < 0) throw InputError("--n must be nonnegative");
            emit({{"based", to_json_list(loop_counts(g, n))}, {"all_starts", to_json_list(all_starts_dims(g, n))}});
        };
    });

    auto* gr_spec = gr->add_subcommand("spectrum", "characteristic polynomial of Lambda Lambda^T and the norm");
    gargs.attach(gr_spec);
    gr_spec->callback([&] {
        action = [&] {
            const auto g = gargs.graph();
            const auto cp = characteristic_polynomial(g.even_square());
            const auto nb = graph_norm(g);
            emit({{"charpoly_low_degree_first", to_json_list(cp)},
                  {"norm_squared_bracket", Json::array({nb.lower.get_d(), nb.upper.get_d()})},
                  {"norm_exceeds_two", nb.exceeds_two},
                  {"norm_equals_two", nb.equals_two},
                  {"graph", to_json(g)}});
        };
    });

    // ade
    auto* ade = app.add_subcommand("ade", "E6 / E7 / E8 checks");
    ade->require_subcommand(1);
    std::string case_name = "e6", branch = "plus", omega = "1", amp;
    long p_arg = 5, e_arg = 18;
    int discs = 2;
    bool no_prune = false;
    std::string tau1, tau2;

    auto* ade_null = ade->add_subcommand("nullvec", "the null vector and its norm");
    ade_null->add_option("--case", case_name)->check(CLI::IsMember({"e6", "e8", "E6", "E8"}));
    ade_null->add_option("--branch", branch);
    ade_null->callback([&] {
        action = [&] {
            AdeCase c;
            try {
                c = AdeCase::make(case_name, branch_arg(branch));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            const auto nv = null_vector(c);
            const auto norm = null_norm(nv);
            const auto closed = closed_form_norm(c.d, c.delta, c.kappa, c.eta, c.omega);
            const auto rad = null_vector_in_radical(nv, settings.jobs);
            const bool ok = norm.is_zero() && closed == norm && rad.annihilates;
            Json out{{"case", c.name},
                     {"branch", c.branch > 0 ? "plus" : "minus"},
                     {"delta", value(c.delta)},
                     {"omega", value(c.omega)},
                     {"kappa", value(c.kappa)},
                     {"eta", value(c.eta)},
                     {"level", c.d + 1},
                     {"generator_terms", nv.generator_terms},
                     {"norm", norm.is_zero() ? Json("0 (exact)") : value(norm)},
                     {"closed_form", value(closed)},
                     {"gram_dimension", rad.dimension},
                     {"gram_corank", rad.corank},
                     {"in_radical", rad.annihilates}};
            if (settings.format == "json") out["vector"] = module_vector_json(nv.nu);
            emit(out);
            if (!ok) throw CheckFailed("null vector check failed");
        };
    });

    auto* ade_e7 = ade->add_subcommand("e7", "Gram determinants of V^{4,omega}_5 at delta = 2cos(pi/18)");
    ade_e7->callback([&] {
        action = [&] {
            const auto rep = e7_obstruction(settings.jobs);
            Json rows = Json::array();
            for (const auto& [w, det] : rep.determinants)
                rows.push_back({{"omega", value(w)}, {"determinant", value(det)}, {"nonzero", !det.is_zero()}});
            emit({{"delta", value(rep.delta)}, {"determinants", rows}, {"all_nonzero", rep.all_nonzero}});
            if (!rep.all_nonzero) throw CheckFailed("a Gram determinant vanishes");
        };
    });

    auto* ade_star = ade->add_subcommand("star-eq", "z sin(2m pi/n) = sin(r pi/n) + omega sin((r+2k) pi/n), |z| = 1");
    ade_star->add_option("--n", n)->required();
    ade_star->add_option("--k", k)->required();
    ade_star->add_option("--r", r)->required();
    ade_star->add_option("--omega", omega)->required();
    ade_star->callback([&] {
        action = [&] {
            StarEquation s;
            try {
                s = star_equation(n, k, r, scalar_arg(omega, "omega"));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            } catch (const std::domain_error& e) {
                throw InputError(e.what());
            }
            Json out{{"n", n}, {"k", k}, {"r", r}, {"solvable", s.solvable}, {"lhs_modulus_squared", value(s.lhs_modulus_squared)},
                     {"rhs_modulus_squared", value(s.rhs_modulus_squared)}};
            if (s.z) out["z"] = value(*s.z);
            emit(out);
        };
    });

    auto* ade_euler = ade->add_subcommand("euler", "Euler counts for a planar tangle with discs of 2p points");
    ade_euler->add_option("--p", p_arg)->required();
    ade_euler->add_option("--e", e_arg)->required();
    ade_euler->add_option("--k", k)->required();
    ade_euler->callback([&] {
        action = [&] {
            if (p_arg < 1 || e_arg < 0 || k < 0) throw InputError("need p >= 1, e >= 0, k >= 0");
            Json out{{"p", p_arg}, {"e", e_arg}, {"k", k}, {"bound_holds", euler_bound(p_arg, e_arg, k)},
                     {"lhs", (2 * p_arg - 3) * k}, {"rhs", 3 * p_arg + (p_arg - 3) * e_arg}};
            if (auto f = euler_regions(p_arg, e_arg, k)) out["regions"] = *f;
            emit(out);
        };
    });

    auto* ade_tangles = ade->add_subcommand("tangles", "exhaustive search for tangles without small internal regions");
    ade_tangles->add_option("--p", p_arg);
    ade_tangles->add_option("--k", k);
    ade_tangles->add_option("--discs", discs);
    ade_tangles->add_flag("--no-prune", no_prune);
    ade_tangles->callback([&] {
        action = [&] {
            if (p_arg < 1 || k < 0 || discs < 0) throw InputError("need p >= 1, k >= 0, discs >= 0");
            const auto c = planar_tangle_census(static_cast<int>(p_arg), k, discs, !no_prune);
            emit({{"p", p_arg}, {"k", k}, {"discs", discs}, {"tangles", c.tangles}, {"capped", c.capped},
                  {"double_joined", c.double_joined}, {"without_small_region", c.without_small_region},
                  {"bound_failures", c.bound_failures}, {"counterexamples", c.counterexamples}, {"euler_failures", c.euler_failures}});
            if (c.euler_failures > 0 || c.bound_failures > 0) throw CheckFailed("Euler count failed");
        };
    });

    auto* ade_transfer = ade->add_subcommand("transfer", "eigenvalue A^{2k} + omega A^{-2k} and the check |z| = delta");
    ade_transfer->add_option("--k", k)->required();
    ade_transfer->add_option("--omega", omega)->required();
    ade_transfer->add_option("--a", amp, "A with delta = -A^2 - A^-2")->required();
    ade_transfer->callback([&] {
        action = [&] {
            TransferEigenvalue te;
            try {
                te = transfer_eigenvalue(k, scalar_arg(omega, "omega"), scalar_arg(amp, "a"));
            } catch (const std::domain_error& e) {
                throw InputError(e.what());
            }
            emit({{"z", value(te.z)}, {"delta", value(te.delta)}, {"modulus_matches", te.modulus_matches}});
        };
    });

    auto* ade_biu = ade->add_subcommand("biunitary", "U = A E_1 + A^-1 id");
    ade_biu->add_option("--a", amp)->required();
    ade_biu->add_option("--delta", delta)->required();
    ade_biu->callback([&] {
        action = [&] {
            BiunitaryReport b;
            try {
                b = biunitary_check(scalar_arg(amp, "a"), scalar_arg(delta, "delta"));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            emit({{"inverse", b.inverse_ok}, {"unitary", b.unitary}, {"rotated_unitary", b.rotated_unitary}});
            if (!(b.inverse_ok && b.unitary && b.rotated_unitary)) throw CheckFailed("not a biunitary");
        };
    });

    auto* ade_deg = ade->add_subcommand("degenerate", "dimension of the quotient at a root of unity");
    ade_deg->add_option("--k", k)->required();
    ade_deg->add_option("--m", m, "first degenerate level");
    ade_deg->add_option("--level", idx)->required();
    ade_deg->add_option("--n", n, "delta = 2cos(pi/n)")->required();
    ade_deg->callback([&] {
        action = [&] {
            try {
                emit({{"k", k}, {"level", idx}, {"n", n}, {"dimension", degenerate_dim(k, m, idx, n).get_str()}});
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        };
    });

    auto* ade_psi = ade->add_subcommand("psi", "coefficients of psi^2 = A psi + B p from two traces");
    ade_psi->add_option("--tau1", tau1)->required();
    ade_psi->add_option("--tau2", tau2)->required();
    ade_psi->callback([&] {
        action = [&] {
            PsiSquare ps;
            try {
                ps = psi_square_coefficients(scalar_arg(tau1, "tau1"), scalar_arg(tau2, "tau2"));
            } catch (const std::domain_error& e) {
                throw InputError(e.what());
            }
            Json out{{"x_squared", value(ps.x_squared)}, {"x_bracket", Json::array({ps.x_lower.get_d(), ps.x_upper.get_d()})}};
            if (ps.x) {
                out["x"] = value(*ps.x);
                out["y"] = value(*ps.y);
                out["A"] = value(*ps.a);
                out["B"] = value(*ps.b);
            }
            emit(out);
        };
    });

    auto* ade_audit = ade->add_subcommand("audit", "relations satisfied by the lowest weight vector");
    ade_audit->add_option("--case", case_name)->check(CLI::IsMember({"e6", "e8", "E6", "E8"}));
    ade_audit->add_option("--branch", branch);
    ade_audit->callback([&] {
        action = [&] {
            const auto c = AdeCase::make(case_name, branch_arg(branch));
            const auto a = skein_relation_audit(c, settings.jobs);
            emit({{"case", c.name}, {"lowest_weight", a.lowest_weight}, {"unit_norm", a.unit_norm}, {"rotation_eigenvalue", a.rotation_eigen},
                  {"null_relation", a.null_relation}, {"caps_have_length_sqrt_delta", a.caps_unit_length}});
            if (!(a.lowest_weight && a.unit_norm && a.rotation_eigen && a.null_relation && a.caps_unit_length)) throw CheckFailed("relation failed");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
