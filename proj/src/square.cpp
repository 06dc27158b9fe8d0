#include "lsq/square.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lsq {

namespace {

int order_from_cell_count(size_t cells) {
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(cells))));
    if (static_cast<size_t>(n) * n != cells)
        throw ParseError("cell count " + std::to_string(cells) + " is not a perfect square");
    if (n < kMinOrder || n > kMaxOrder)
        throw ParseError("order " + std::to_string(n) + " outside supported range 3..9");
    return n;
}

}  // namespace

PartialLatinSquare::PartialLatinSquare(int order) : order_(order) {
    if (order < kMinOrder || order > kMaxOrder)
        throw ParseError("order " + std::to_string(order) + " outside supported range 3..9");
    cells_.assign(static_cast<size_t>(order) * order, kEmpty);
}

void PartialLatinSquare::place(int r, int c, int v) {
    if (v < 0 || v >= order_)
        throw ParseError("symbol " + std::to_string(v + 1) + " out of range 1.." + std::to_string(order_));
    if (cells_[idx(r, c)] != kEmpty)
        throw ParseError("cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") set twice");
    for (int j = 0; j < order_; ++j)
        if (cells_[idx(r, j)] == v)
            throw ParseError("row " + std::to_string(r + 1) + " repeats symbol " + std::to_string(v + 1));
    for (int i = 0; i < order_; ++i)
        if (cells_[idx(i, c)] == v)
            throw ParseError("column " + std::to_string(c + 1) + " repeats symbol " + std::to_string(v + 1));
    cells_[idx(r, c)] = static_cast<int8_t>(v);
    ++filled_count_;
}

PartialLatinSquare PartialLatinSquare::parse(std::string_view text) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) throw ParseError("empty square text");
    auto last = text.find_last_not_of(ws);
    std::string_view trimmed = text.substr(first, last - first + 1);

    // Interior whitespace means the n-rows-of-n-tokens form; otherwise a
    // single line of n^2 characters.
    bool has_ws = trimmed.find_first_of(ws) != std::string_view::npos;

    std::vector<int> values;  // -1 empty
    if (!has_ws) {
        for (char ch : trimmed) {
            if (ch == '.' || ch == '0') values.push_back(-1);
            else if (ch >= '1' && ch <= '9') values.push_back(ch - '1');
            else throw ParseError(std::string("unexpected character '") + ch + "' in square text");
        }
    } else {
        std::istringstream in{std::string(trimmed)};
        std::string tok;
        while (in >> tok) {
            if (tok == "." || tok == "0") values.push_back(-1);
            else {
                size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw ParseError("unexpected token '" + tok + "' in square text");
                }
                if (used != tok.size() || v < 1 || v > 9)
                    throw ParseError("unexpected token '" + tok + "' in square text");
                values.push_back(v - 1);
            }
        }
    }
    int n = order_from_cell_count(values.size());
    PartialLatinSquare p(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int v = values[static_cast<size_t>(r) * n + c];
            if (v >= 0) p.place(r, c, v);
        }
    return p;
}

PartialLatinSquare PartialLatinSquare::from_entries(int order, std::span<const Entry> entries) {
    PartialLatinSquare p(order);
    for (const Entry& e : entries) {
        if (e.row < 0 || e.row >= order || e.col < 0 || e.col >= order)
            throw ParseError("entry " + e.str() + " outside order-" + std::to_string(order) + " square");
        p.place(e.row, e.col, e.elem);
    }
    return p;
}

std::vector<Entry> PartialLatinSquare::entries() const {
    std::vector<Entry> out;
    out.reserve(static_cast<size_t>(filled_count_));
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (filled(r, c)) out.emplace_back(r, c, at(r, c));
    return out;
}

CellMask PartialLatinSquare::filled_mask() const {
    CellMask m;
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (filled(r, c)) m.set(idx(r, c));
    return m;
}

std::string PartialLatinSquare::serialize() const {
    std::string out;
    out.reserve(cells_.size());
    for (int8_t v : cells_) out += v == kEmpty ? '.' : static_cast<char>('1' + v);
    return out;
}

PartialLatinSquare PartialLatinSquare::with(const Entry& e) const {
    PartialLatinSquare p = *this;
    p.place(e.row, e.col, e.elem);
    return p;
}

LatinSquare LatinSquare::from_partial(const PartialLatinSquare& p) {
    if (!p.complete())
        throw ParseError("square has " + std::to_string(p.order() * p.order() - p.filled_count()) +
                         " empty cells, expected none");
    return LatinSquare(p);
}

LatinSquare LatinSquare::parse(std::string_view text) {
    return from_partial(PartialLatinSquare::parse(text));
}

LatinSquare LatinSquare::cyclic(int order) {
    PartialLatinSquare p(order);
    std::vector<Entry> es;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) es.emplace_back(i, j, (i + j) % order);
    return from_partial(PartialLatinSquare::from_entries(order, es));
}

PartialLatinSquare conjugate(const PartialLatinSquare& p, const RolePerm& perm) {
    std::vector<Entry> es = p.entries();
    for (Entry& e : es) e = perm.apply(e);
    return PartialLatinSquare::from_entries(p.order(), es);
}

LatinSquare conjugate(const LatinSquare& l, const RolePerm& perm) {
    return LatinSquare::from_partial(conjugate(l.as_partial(), perm));
}

bool is_rcs_symmetric(const LatinSquare& l) {
    const int n = l.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l.at(j, l.at(i, j)) != i) return false;
    return true;
}

bool is_isotopic(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();

    // Rows of b, hashed for membership tests.
    std::vector<std::vector<int8_t>> brows(n, std::vector<int8_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) brows[i][j] = b.at(i, j);
    auto is_row_of_b = [&](const std::vector<int8_t>& row) {
        for (int i = 0; i < n; ++i)
            if (brows[i] == row) return true;
        return false;
    };

    // For each symbol relabeling gamma and each row of b paired with row 0
    // of a, the column permutation is forced; the remaining rows must then
    // all appear in b.
    std::vector<int> gamma(n);
    std::iota(gamma.begin(), gamma.end(), 0);
    std::vector<int> beta(n);
    std::vector<int8_t> mapped(n);
    do {
        for (int i2 = 0; i2 < n; ++i2) {
            // beta: b[i2][beta[j]] == gamma[a[0][j]]
            std::array<int, kMaxOrder> pos{};
            for (int c = 0; c < n; ++c) pos[b.at(i2, c)] = c;
            for (int j = 0; j < n; ++j) beta[j] = pos[gamma[a.at(0, j)]];
            bool ok = true;
            for (int r = 1; r < n && ok; ++r) {
                for (int j = 0; j < n; ++j) mapped[beta[j]] = static_cast<int8_t>(gamma[a.at(r, j)]);
                ok = is_row_of_b(mapped);
            }
            if (ok) return true;
        }
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return false;
}

bool is_rcs_symmetric_up_to_isotopy(const LatinSquare& l) {
    return is_isotopic(l, conjugate(l, RolePerm::rcs()));
}

}  // namespace lsq
