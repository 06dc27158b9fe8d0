#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace lsq {

inline constexpr int kMinOrder = 3;
inline constexpr int kMaxOrder = 9;

// One cell of a Latin square: row r, column c, element e, all 0-based.
// I/O renders all three 1-based.
struct Entry {
    int8_t row = 0;
    int8_t col = 0;
    int8_t elem = 0;

    Entry() = default;
    Entry(int r, int c, int e)
        : row(static_cast<int8_t>(r)), col(static_cast<int8_t>(c)), elem(static_cast<int8_t>(e)) {}

    auto operator<=>(const Entry&) const = default;

    // "(r,c;e)", 1-based
    std::string str() const;
};

// Bitset over the n*n cell positions of an order-n square (n <= 9, so 81 bits).
// Position index = row * n + col.
struct CellMask {
    uint64_t lo = 0;
    uint64_t hi = 0;

    void set(int pos) {
        if (pos < 64) lo |= uint64_t{1} << pos;
        else hi |= uint64_t{1} << (pos - 64);
    }
    bool test(int pos) const {
        return pos < 64 ? (lo >> pos) & 1 : (hi >> (pos - 64)) & 1;
    }
    int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
    bool empty() const { return lo == 0 && hi == 0; }
    bool subset_of(const CellMask& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    bool intersects(const CellMask& o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }
    int lowest() const {  // -1 when empty
        if (lo) return __builtin_ctzll(lo);
        if (hi) return 64 + __builtin_ctzll(hi);
        return -1;
    }
    CellMask operator&(const CellMask& o) const { return {lo & o.lo, hi & o.hi}; }
    CellMask operator|(const CellMask& o) const { return {lo | o.lo, hi | o.hi}; }
    CellMask operator~() const { return {~lo, ~hi}; }
    bool operator==(const CellMask&) const = default;
    auto operator<=>(const CellMask&) const = default;
};

// Permutation of the three roles (row, col, elem). An entry maps by
// placing its role-r coordinate at role to[r] of the image, so
// kRcs sends (i,j;k) to (j,k;i): col lands in the row slot, and so on.
struct RolePerm {
    std::array<uint8_t, 3> to{0, 1, 2};

    Entry apply(const Entry& e) const {
        std::array<int8_t, 3> in{e.row, e.col, e.elem};
        std::array<int8_t, 3> out{};
        for (int r = 0; r < 3; ++r) out[to[r]] = in[r];
        return Entry{out[0], out[1], out[2]};
    }
    RolePerm inverse() const {
        RolePerm inv;
        for (int r = 0; r < 3; ++r) inv.to[to[r]] = static_cast<uint8_t>(r);
        return inv;
    }
    // this, then next
    RolePerm then(const RolePerm& next) const {
        RolePerm out;
        for (int r = 0; r < 3; ++r) out.to[r] = next.to[to[r]];
        return out;
    }
    bool operator==(const RolePerm&) const = default;

    static constexpr RolePerm identity() { return RolePerm{{0, 1, 2}}; }
    // (i,j;k) -> (j,k;i)
    static constexpr RolePerm rcs() { return RolePerm{{2, 0, 1}}; }
    // (i,j;k) -> (j,i;k)
    static constexpr RolePerm transpose() { return RolePerm{{1, 0, 2}}; }
    static const std::array<RolePerm, 6>& all();
};

}  // namespace lsq
