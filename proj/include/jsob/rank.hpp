#ifndef JSOB_RANK_HPP
#define JSOB_RANK_HPP

// gamma-weighted rank of a square matrix and the order it predicts for the
// differential operator.

#include <cstddef>
#include <vector>

#include "jsob/matrix.hpp"
#include "jsob/sobolev.hpp"

namespace jsob {

struct WeightedRankTrace {
    std::vector<BigRational> eta;                 // eta_1..eta_m
    std::vector<long> tau;                        // tau_1..tau_{m-1}
    std::vector<std::size_t> reduced_columns;     // 0-based columns of M kept in M~, left to right
    BigRational value;
};

/// eta_j = gamma+m-j when column c_{m-j+1} is outside the span of the columns
/// to its right; M~ keeps those columns; tau_j = m-j when row f_j of M~ lies in
/// the span of the rows below it. value = sum eta + sum tau - C(m,2).
inline WeightedRankTrace weighted_rank(const BigRational& gamma, const RationalMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("weighted_rank: matrix must be square");
    WeightedRankTrace tr;
    const std::size_t m = M.rows();
    tr.value = 0;
    if (m == 0) return tr;

    std::vector<std::vector<BigRational>> right;
    tr.eta.assign(m, BigRational(0));
    for (std::size_t j = 1; j <= m; ++j) {
        const std::size_t c = m - j;
        std::vector<BigRational> col = M.col(c);
        if (!in_span(right, col)) {
            tr.eta[j - 1] = gamma + static_cast<long>(m - j);
            tr.reduced_columns.insert(tr.reduced_columns.begin(), c);
        }
        right.push_back(std::move(col));
    }

    std::vector<std::size_t> all_rows(m);
    for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;
    const RationalMatrix reduced = M.select(all_rows, tr.reduced_columns);
    for (std::size_t j = 1; j + 1 <= m; ++j) {
        std::vector<std::vector<BigRational>> below;
        for (std::size_t r = j; r < m; ++r) below.push_back(reduced.row(r));
        tr.tau.push_back(in_span(below, reduced.row(j - 1)) ? static_cast<long>(m - j) : 0L);
    }

    for (const auto& e : tr.eta) tr.value += e;
    for (long t : tr.tau) tr.value += t;
    tr.value -= static_cast<long>(m * (m - 1) / 2);
    return tr;
}

/// deg Xi + 2 (beta-wr(M) + alpha-wr(N) + 1).
inline BigRational predicted_order(const SobolevConfig& cfg) {
    BigRational wr = weighted_rank(BigRational(cfg.beta), cfg.M).value + weighted_rank(BigRational(cfg.alpha), cfg.N).value;
    return BigRational(cfg.xi.degree()) + 2 * (wr + 1);
}

}  // namespace jsob

#endif  // JSOB_RANK_HPP
