// Rows of (X^2 D^2)^n and their sums.
#include <iostream>

#include <weylkit/weylkit.hpp>

using namespace weylkit;

int main() {
    NormalForm h = NormalForm::single_mode({{2, 2, 1}});
    auto powers = exp_normal_order(h, 6);
    for (std::size_t n = 1; n < powers.size(); ++n) {
        Coefficient total;
        for (const auto& [m, c] : powers[n].terms()) total += c;
        std::cout << "n=" << n << "  " << powers[n] << "   sum " << total << "\n";
    }
}
