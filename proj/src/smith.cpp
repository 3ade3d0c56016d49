#include "cocycle/smith.hpp"

namespace cocycle {

std::optional<std::vector<Rational>> solve_rational(const SmithForm<std::int64_t>& snf,
                                                    const std::vector<Rational>& b) {
    if (snf.L.size() == 0 || snf.R.size() == 0) throw std::invalid_argument("solve_rational needs L and R");
    const Eigen::Index m = snf.rows, n = snf.cols, r = snf.rank();
    if (static_cast<Eigen::Index>(b.size()) != m) throw std::invalid_argument("right-hand side has wrong size");
    // L b, then divide by the diagonal; rows past the rank must vanish.
    std::vector<Rational> u(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < m; ++i) {
        Rational s;
        for (Eigen::Index j = 0; j < m; ++j)
            if (snf.L(i, j) != 0 && b[static_cast<std::size_t>(j)].num() != 0) s += Rational(snf.L(i, j)) * b[static_cast<std::size_t>(j)];
        if (i < r) u[static_cast<std::size_t>(i)] = s / Rational(snf.diagonal[static_cast<std::size_t>(i)]);
        else if (s.num() != 0) return std::nullopt;
    }
    std::vector<Rational> y(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        Rational s;
        for (Eigen::Index j = 0; j < r; ++j)
            if (snf.R(i, j) != 0) s += Rational(snf.R(i, j)) * u[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

}  // namespace cocycle
