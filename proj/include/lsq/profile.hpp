#pragma once

#include <array>
#include <span>

#include "lsq/entry.hpp"

namespace lsq {

// The R_i / C_j / E_k line sets of an entry set S and their nonempty
// counts R(S), C(S), E(S). Row and column sets are element bitmasks;
// element sets are cell-position masks.
struct LineProfile {
    int order = 0;
    std::array<uint16_t, kMaxOrder> row_sets{};   // R_i(S): elements in row i
    std::array<uint16_t, kMaxOrder> col_sets{};   // C_j(S): elements in column j
    std::array<CellMask, kMaxOrder> elem_sets{};  // E_k(S): positions of element k

    int row_size(int i) const { return __builtin_popcount(row_sets[i]); }
    int col_size(int j) const { return __builtin_popcount(col_sets[j]); }
    int elem_size(int k) const { return elem_sets[k].count(); }

    int row_count() const;   // R(S)
    int col_count() const;   // C(S)
    int elem_count() const;  // E(S)
};

LineProfile line_profile(std::span<const Entry> s, int order);

// |S| == n and every row, column, and element occurs exactly once.
bool is_transversal(std::span<const Entry> s, int order);

}  // namespace lsq
