// Walks the two generator sequences toward the curve gamma_{1/4} and prints
// how the lattice points alternate between A and its complement while
// their strip parameters close in on 1/4.

#include "fvset/fvset.hpp"

#include <iomanip>
#include <iostream>

int main() {
    using namespace fvset;
    const Integer p = 1, q = 4;
    std::cout << std::left << std::setw(4) << "n" << std::setw(26) << "point" << std::setw(12) << "in A"
              << "r - 1/4\n";
    for (int n = 1; n <= 12; ++n) {
        for (bool inside : {true, false}) {
            LatticePoint pt = inside ? seq_in_A(p, q, n) : seq_out_A(p, q, n);
            Surd r = r_of_point(pt.x, pt.y);
            std::ostringstream label;
            label << "(" << pt.x << ", " << pt.y << ")";
            std::cout << std::setw(4) << n << std::setw(26) << label.str() << std::setw(12)
                      << (member_A(pt.x, pt.y).is_member() ? "yes" : "no") << std::showpos << std::scientific
                      << std::setprecision(3) << (r - Rational(1, 4)).approx() << std::noshowpos << std::defaultfloat
                      << '\n';
        }
    }
}
