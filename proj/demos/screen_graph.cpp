// Annular multiplicity screen for a pointed bipartite graph.
// usage: demo_screen_graph [graph.json | builtin name] [max_r]
#include "atl/graphs.hpp"
#include "atl/io.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    const std::string which = argc > 1 ? argv[1] : "E8";
    const int max_r = argc > 2 ? std::stoi(argv[2]) : 10;
    try {
        const auto g = which.ends_with(".json") ? atl::graph_from_file(which) : atl::graphs::builtin(which);
        const auto s = atl::screen_principal_graph(g, max_r);

        std::cout << "n   loops      a_n\n";
        for (int r = 0; r <= max_r; ++r)
            std::cout << r << (r < 10 ? "   " : "  ") << s.loops[static_cast<std::size_t>(r)].get_str()
                      << std::string(11 - std::min<std::size_t>(10, s.loops[static_cast<std::size_t>(r)].get_str().size()), ' ')
                      << s.multiplicities[static_cast<std::size_t>(r)].get_str() << "\n";
        std::cout << "norm^2 in [" << s.norm.lower.get_d() << ", " << s.norm.upper.get_d() << "]\n";
        std::cout << s.verdict << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
