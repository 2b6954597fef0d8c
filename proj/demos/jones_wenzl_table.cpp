// Prints the coefficients of E_{n-1}...E_r in the Jones-Wenzl idempotent p_n.
// usage: demo_jones_wenzl_table [max_n] [delta]
#include "atl/tl.hpp"

#include <iomanip>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    const int max_n = argc > 1 ? std::stoi(argv[1]) : 6;
    const atl::Cyclo delta = atl::parse_scalar(argc > 2 ? argv[2] : "3");

    std::cout << "delta = " << delta.to_string() << "\n";
    for (int n = 2; n <= max_n; ++n) {
        atl::TLElement<atl::Cyclo> p;
        try {
            p = atl::jones_wenzl(n, delta);
        } catch (const atl::VanishingDenominator& e) {
            std::cout << "p_" << n << " does not exist: P_" << e.index() << "(delta) = 0\n";
            break;
        }
        std::cout << "p_" << n << " (" << p.terms().size() << " diagrams)\n";
        for (int r = n - 1; r >= 1; --r)
            std::cout << "  r=" << std::setw(2) << r << "  " << p.coefficient(atl::descending_word(n, r)).to_string() << "\n";
    }
}
