#include "bilip/linalg.hpp"

#include "bilip/error.hpp"

namespace bilip {

int matrix_rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m.front().size();

    // Clear denominators row-wise; rank is unchanged.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw PreconditionError("matrix_rank: ragged matrix");
        Integer l = 1;
        for (const auto& q : m[i]) {
            Integer d = q.get_den();
            l = l / gcd(l, d) * d;
        }
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    }

    // Bareiss fraction-free elimination.
    int rank = 0;
    Integer prev = 1;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = pc + 1; j < cols; ++j)
                a[i][j] = (a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j]) / prev;
            a[i][pc] = 0;
        }
        prev = a[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace bilip
