#include "support/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace da::test {

std::array<double, 2> eigenvalues_2x2(const da::Matrix& a) {
    const double tr = a(0, 0) + a(1, 1);
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

// trigonometric form for the symmetric 3x3 characteristic polynomial
std::array<double, 3> eigenvalues_3x3(const da::Matrix& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (p1 == 0.0) {
        std::array<double, 3> diag = {a(0, 0), a(1, 1), a(2, 2)};
        std::sort(diag.begin(), diag.end(), std::greater<>());
        return diag;
    }
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);

    // B = (A - qI) / p, r = det(B) / 2
    auto b = [&](std::size_t i, std::size_t j) {
        return (a(i, j) - (i == j ? q : 0.0)) / p;
    };
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);

    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> out = {e1, e2, e3};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace da::test
