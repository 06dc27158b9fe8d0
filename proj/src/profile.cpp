#include "lsq/profile.hpp"

namespace lsq {

int LineProfile::row_count() const {
    int c = 0;
    for (int i = 0; i < order; ++i) c += row_sets[i] != 0;
    return c;
}

int LineProfile::col_count() const {
    int c = 0;
    for (int j = 0; j < order; ++j) c += col_sets[j] != 0;
    return c;
}

int LineProfile::elem_count() const {
    int c = 0;
    for (int k = 0; k < order; ++k) c += !elem_sets[k].empty();
    return c;
}

LineProfile line_profile(std::span<const Entry> s, int order) {
    LineProfile p;
    p.order = order;
    for (const Entry& e : s) {
        p.row_sets[e.row] |= uint16_t{1} << e.elem;
        p.col_sets[e.col] |= uint16_t{1} << e.elem;
        p.elem_sets[e.elem].set(e.row * order + e.col);
    }
    return p;
}

bool is_transversal(std::span<const Entry> s, int order) {
    if (static_cast<int>(s.size()) != order) return false;
    uint16_t rows = 0, cols = 0, elems = 0;
    for (const Entry& e : s) {
        rows |= uint16_t{1} << e.row;
        cols |= uint16_t{1} << e.col;
        elems |= uint16_t{1} << e.elem;
    }
    const uint16_t full = static_cast<uint16_t>((1u << order) - 1);
    return rows == full && cols == full && elems == full;
}

}  // namespace lsq
