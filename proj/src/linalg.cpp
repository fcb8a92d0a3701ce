#include "blockdim/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace blockdim {

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_linear: matrix not square");

    // Integer augmented matrix, each row scaled by the lcm of its denominators.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j].get_num() * (scale / a[i][j].get_den());
        m[i][n] = b[i].get_num() * (scale / b[i].get_den());
    }

    // Bareiss elimination: every division below is exact.
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("solve_linear: singular system");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
        x[i].canonicalize();
    }
    return x;
}

}  // namespace blockdim
