#include "atl/graphs.hpp"
#include "atl/series.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace atl;

namespace {

std::vector<std::vector<int>> neighbours(const PointedGraph& g)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (auto [a, b] : g.edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

long count_walks(const std::vector<std::vector<int>>& adj, int from, int to, int length)
{
    if (length == 0) return from == to;
    long total = 0;
    for (int w : adj[static_cast<std::size_t>(from)]) total += count_walks(adj, w, to, length - 1);
    return total;
}

Eigen::MatrixXd even_square(const PointedGraph& g)
{
    const auto s = g.even_square();
    const auto n = static_cast<Eigen::Index>(s.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
    return m;
}

PointedGraph e_series(int n, int base)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n - 1; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(3, n);
    return PointedGraph::from_tree(n, e, base);
}

std::vector<PointedGraph> sample_graphs()
{
    return {graphs::A(2), graphs::A(5), graphs::D(6), graphs::E(6), graphs::E(7), graphs::E(8), e_series(10, 9), e_series(10, 1)};
}

}  // namespace

TEST(Graphs, BuiltinsAndValidation)
{
    EXPECT_EQ(graphs::E(6).vertex_count(), 6);
    EXPECT_EQ(graphs::E(8).even_count(), 4);
    EXPECT_EQ(graphs::builtin("E7").vertex_count(), 7);
    EXPECT_EQ(graphs::builtin("D5").edges().size(), 4u);
    EXPECT_THROW(graphs::builtin("F4"), std::invalid_argument);
    EXPECT_THROW(graphs::E(9), std::invalid_argument);
    EXPECT_THROW(PointedGraph({"a", "b"}, {"c"}, {{"a", "b"}}, "a"), std::invalid_argument);
    EXPECT_THROW(PointedGraph({"a"}, {"b"}, {{"a", "b"}}, "b"), std::invalid_argument);
    EXPECT_THROW(PointedGraph({"a", "c"}, {"b"}, {{"a", "b"}}, "a"), std::invalid_argument);
    EXPECT_THROW(PointedGraph({"a", "a"}, {"b"}, {{"a", "b"}}, "a"), std::invalid_argument);
    EXPECT_THROW(PointedGraph({"a"}, {"b"}, {{"a", "x"}}, "a"), std::invalid_argument);
}

TEST(LoopCounts, PathEnd)
{
    const auto w = loop_counts(graphs::A(2), 6);
    for (const auto& x : w) EXPECT_EQ(x, 1);
}

TEST(LoopCounts, ExceptionalCriticalDepth)
{
    EXPECT_EQ(loop_counts(graphs::E(6), 4)[4], 21);
    EXPECT_EQ(loop_counts(graphs::E(7), 5)[5], 51);
    EXPECT_EQ(loop_counts(graphs::E(8), 6)[6], 143);
    // TL dimension plus 2d + 1
    EXPECT_EQ(loop_counts(graphs::E(8), 6)[6], catalan(6) + 11);
    EXPECT_EQ(loop_counts(graphs::E(6), 4)[4], catalan(4) + 7);
}

TEST(LoopCountsProperty, MatrixPowerMatchesWalks)
{
    for (const auto& g : sample_graphs()) {
        const auto adj = neighbours(g);
        const auto w = loop_counts(g, 5);
        const auto d = all_starts_dims(g, 5);
        EXPECT_EQ(w, loop_counts_by_enumeration(g, 5));
        EXPECT_EQ(d, all_starts_dims_by_enumeration(g, 5));
        for (int n = 0; n <= 5; ++n) {
            EXPECT_EQ(w[static_cast<std::size_t>(n)], count_walks(adj, g.basepoint(), g.basepoint(), 2 * n));
            long total = 0;
            for (int v = 0; v < g.even_count(); ++v) total += count_walks(adj, v, v, 2 * n);
            EXPECT_EQ(d[static_cast<std::size_t>(n)], total);
        }
    }
}

TEST(AllStartsDims, ExceptionalValues)
{
    const auto e8 = all_starts_dims(graphs::E(8), 5);
    const std::vector<long> expected{4, 7, 21, 73, 269, 1022};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(e8[n], expected[n]) << n;
    const auto e6 = all_starts_dims(graphs::E(6), 3);
    EXPECT_EQ(e6[1], 5);
    EXPECT_EQ(e6[2], 15);
    EXPECT_EQ(e6[3], 53);
}

TEST(Spectrum, E6CharacteristicPolynomial)
{
    // (t - 1)(t^2 - 4t + 1)
    const auto cp = characteristic_polynomial(graphs::E(6).even_square());
    EXPECT_EQ(cp, (std::vector<mpq_class>{-1, 5, -5, 1}));
    EXPECT_TRUE(has_cos_root(cp, 1, 12));
    EXPECT_TRUE(has_cos_root(cp, 5, 12));
    EXPECT_FALSE(has_cos_root(cp, 1, 30));
}

TEST(Spectrum, E8LargestRoot)
{
    const auto cp = characteristic_polynomial(graphs::E(8).even_square());
    for (int a : {1, 7, 11, 13}) EXPECT_TRUE(has_cos_root(cp, a, 30)) << a;
    const auto nb = graph_norm(graphs::E(8));
    const double expected = 4 * std::pow(std::cos(std::numbers::pi / 30), 2);
    EXPECT_LE(nb.lower.get_d(), expected);
    EXPECT_GE(nb.upper.get_d(), expected);
    EXPECT_LT(mpq_class(nb.upper - nb.lower).get_d(), 1e-9);
    EXPECT_FALSE(nb.exceeds_two);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(even_square(graphs::E(8)));
    EXPECT_NEAR(es.eigenvalues().maxCoeff(), expected, 1e-12);
}

TEST(Spectrum, Norms)
{
    const auto a3 = graph_norm(graphs::A(3));
    EXPECT_LE(a3.lower, 2);
    EXPECT_GE(a3.upper, 2);
    EXPECT_FALSE(a3.exceeds_two);
    const auto affine = graph_norm(e_series(9, 8));
    EXPECT_TRUE(affine.equals_two);
    EXPECT_FALSE(affine.exceeds_two);
    EXPECT_TRUE(graph_norm(e_series(10, 9)).exceeds_two);
}

TEST(SpectrumProperty, NewtonTraceIdentity)
{
    for (const auto& g : sample_graphs()) {
        const auto cp = characteristic_polynomial(g.even_square());
        const auto p = power_sums(cp, 6);
        const auto d = all_starts_dims(g, 6);
        for (int n = 0; n <= 6; ++n) EXPECT_EQ(p[static_cast<std::size_t>(n)], d[static_cast<std::size_t>(n)]) << n;
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(even_square(g)).eigenvalues();
        for (int n = 1; n <= 6; ++n) EXPECT_NEAR(ev.array().pow(n).sum(), d[static_cast<std::size_t>(n)].get_d(), 1e-6);
    }
}

TEST(Census, ExceptionalRotationCensus)
{
    const auto e8 = rotation_census(graphs::E(8), 5);
    EXPECT_EQ(e8.fixed, 7u);
    EXPECT_EQ(e8.free_orbits, 203u);
    EXPECT_EQ(e8.loops, 1022u);
    const auto e6 = rotation_census(graphs::E(6), 3);
    EXPECT_EQ(e6.multiplicities, (std::vector<mpz_class>{21, 16, 16}));
    EXPECT_EQ(rotation_census(graphs::E(6), 2).fixed, 5u);
    EXPECT_THROW(rotation_census(graphs::E(6), 0), std::invalid_argument);
}

TEST(CensusProperty, MultiplicitiesMatchOrbitStructure)
{
    for (const auto& g : {graphs::E(6), graphs::E(8)})
        for (int k = 1; k <= 5; ++k) {
            const auto c = rotation_census(g, k);
            mpz_class total = 0;
            for (const auto& m : c.multiplicities) total += m;
            EXPECT_EQ(total, c.loops);
            // an orbit of size s carries each eigenvalue with lambda^s = 1 once
            for (int a = 0; a < k; ++a) {
                std::size_t expected = 0;
                for (auto [size, count] : c.orbits_by_size)
                    if ((static_cast<std::size_t>(a) * size) % static_cast<std::size_t>(k) == 0) expected += count;
                EXPECT_EQ(c.multiplicities[static_cast<std::size_t>(a)], expected) << k << "," << a;
            }
        }
}

TEST(Screen, ExceptionalGraphsReportNorm)
{
    const auto e7 = screen_principal_graph(graphs::E(7), 6);
    EXPECT_EQ(e7.multiplicities[4], 1);
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(e7.multiplicities[static_cast<std::size_t>(r)], 0);
    EXPECT_NE(e7.verdict.find("does not apply"), std::string::npos);
    const auto e6 = screen_principal_graph(graphs::E(6), 6);
    EXPECT_EQ(e6.multiplicities[3], 1);
    EXPECT_NE(e6.verdict.find("does not apply"), std::string::npos);
}

TEST(Screen, ObstructionAndPass)
{
    const auto far = screen_principal_graph(e_series(10, 9), 8);
    EXPECT_EQ(far.first_negative, 8);
    EXPECT_NE(far.verdict.find("obstructed"), std::string::npos);
    const auto near = screen_principal_graph(e_series(10, 1), 8);
    EXPECT_EQ(near.first_negative, 4);
    const auto e12 = screen_principal_graph(e_series(12, 11), 8);
    EXPECT_FALSE(e12.first_negative);
    EXPECT_NE(e12.verdict.find("passes"), std::string::npos);
    const auto path = screen_principal_graph(graphs::A(20), 8);
    EXPECT_FALSE(path.first_negative);
    EXPECT_THROW(screen_principal_graph(graphs::A(3), 0), std::invalid_argument);
}

TEST(ScreenProperty, MultiplicitiesAgreeWithTheta)
{
    for (const auto& g : sample_graphs()) {
        const auto s = screen_principal_graph(g, 8);
        const auto th = theta_transform(Series::from_integers(8, s.loops));
        for (int r = 0; r <= 8; ++r) EXPECT_EQ(th[r], s.multiplicities[static_cast<std::size_t>(r)]);
        if (!s.norm.exceeds_two) {
            EXPECT_EQ(s.verdict.find("obstructed"), std::string::npos);
        }
    }
}
