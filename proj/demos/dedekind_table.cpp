// Prints a small table of Dedekind sums s(a;b) for coprime b < a and
// spot-checks the two-term reciprocity law on each pair.

#include <iostream>

#include "mdsum/dedekind.hpp"

using mdsum::integer;
using mdsum::rat;

int main() {
    const int max_a = 12;
    for (integer a = 1; a <= max_a; ++a) {
        std::cout << "a = " << a << ":";
        for (integer b = 1; b <= a; ++b) {
            if (mdsum::gcd(a, b) != 1) continue;
            rat s = mdsum::dedekind_sum_fast(a, b);
            std::cout << "  s(" << a << ";" << b << ") = " << s;
            rat lhs = s + mdsum::dedekind_sum_fast(b, a);
            rat rhs = rat(-1, 4) + rat(a * a + b * b + 1, 12 * a * b);
            if (lhs != rhs) {
                std::cout << "  RECIPROCITY VIOLATION\n";
                return 1;
            }
        }
        std::cout << "\n";
    }
    std::cout << "two-term reciprocity held on every pair above\n";
    return 0;
}
