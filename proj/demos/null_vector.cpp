// Builds the length-zero vector for E6 or E8 and checks it against the Gram matrix.
// usage: demo_null_vector [E6|E8] [+1|-1]
#include "atl/ade.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    const std::string name = argc > 1 ? argv[1] : "E6";
    const int branch = argc > 2 ? std::stoi(argv[2]) : 1;
    const auto c = atl::AdeCase::make(name, branch);
    const auto nv = atl::null_vector(c);

    std::cout << c.name << ", delta = " << c.delta.to_string() << ", omega = " << c.omega.to_string() << "\n";
    std::cout << "lowest weight " << c.d << ", vector lives at level " << c.d + 1 << "\n";
    std::cout << "coefficients:\n";
    for (const auto& [diagram, coeff] : nv.nu.terms) {
        std::cout << "  " << coeff.to_string() << "  through (";
        bool first = true;
        for (auto [a, b] : diagram.through_pairs()) {
            std::cout << (first ? "" : " ") << a << "-" << b;
            first = false;
        }
        std::cout << ")\n";
    }

    const auto rad = atl::null_vector_in_radical(nv);
    std::cout << "norm             " << atl::null_norm(nv).to_string() << "\n";
    std::cout << "Gram dimension   " << rad.dimension << ", corank " << rad.corank << "\n";
    std::cout << "in the radical   " << (rad.annihilates ? "yes" : "no") << "\n";

    // any other phase on the second sum gives a vector of positive length
    auto off = c;
    off.kappa *= atl::Cyclo::root(2 * c.n, 1);
    std::cout << "phase moved by one click: norm "
              << atl::null_norm(atl::null_vector(off)).to_complex().real() << "\n";
    return rad.annihilates && atl::null_norm(nv).is_zero() ? 0 : 1;
}
