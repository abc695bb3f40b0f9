// Walks the Markov tree up to a bound and shows the Vieta neighbors of
// each triple.

#include <iostream>

#include "mdsum/markov.hpp"

int main() {
    const mdsum::integer bound = 200;
    for (const mdsum::triple& t : mdsum::enumerate_markov(bound)) {
        std::cout << t << " -> ";
        bool first = true;
        for (const mdsum::triple& n : mdsum::vieta_neighbors(t)) {
            if (!first) std::cout << ", ";
            std::cout << n;
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}
