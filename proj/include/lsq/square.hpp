#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lsq/entry.hpp"

namespace lsq {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An n x n grid with optional cell values and the Latin property on the
// filled cells: no symbol repeats within a row or a column. Immutable
// after construction; all factory paths validate.
class PartialLatinSquare {
  public:
    static constexpr int8_t kEmpty = -1;

    explicit PartialLatinSquare(int order);

    // Accepts either a single line of n^2 characters ('1'..'9', '.' or '0'
    // for empty) or n whitespace-separated rows of n tokens. Fails rather
    // than repairs.
    static PartialLatinSquare parse(std::string_view text);
    static PartialLatinSquare from_entries(int order, std::span<const Entry> entries);

    int order() const { return order_; }
    int8_t at(int r, int c) const { return cells_[idx(r, c)]; }
    bool filled(int r, int c) const { return at(r, c) != kEmpty; }
    int filled_count() const { return filled_count_; }
    bool complete() const { return filled_count_ == order_ * order_; }

    std::vector<Entry> entries() const;
    CellMask filled_mask() const;

    // Canonical single-line form; parse(serialize(P)) == P.
    std::string serialize() const;

    // Value plus Latin-validity check; throws ParseError on conflict.
    PartialLatinSquare with(const Entry& e) const;

    bool operator==(const PartialLatinSquare&) const = default;

  private:
    friend class LatinSquare;
    int idx(int r, int c) const { return r * order_ + c; }
    void place(int r, int c, int v);  // validates

    int order_;
    int filled_count_ = 0;
    std::vector<int8_t> cells_;
};

// Complete Latin square: every row and column a permutation of 0..n-1.
class LatinSquare {
  public:
    static LatinSquare from_partial(const PartialLatinSquare& p);  // throws if incomplete
    static LatinSquare parse(std::string_view text);
    // Group table of Z_n: cell (i,j) holds (i+j) mod n.
    static LatinSquare cyclic(int order);

    int order() const { return grid_.order(); }
    int8_t at(int r, int c) const { return grid_.at(r, c); }
    const PartialLatinSquare& as_partial() const { return grid_; }
    std::vector<Entry> entries() const { return grid_.entries(); }
    std::string serialize() const { return grid_.serialize(); }
    bool contains(const Entry& e) const { return at(e.row, e.col) == e.elem; }

    bool operator==(const LatinSquare&) const = default;

  private:
    explicit LatinSquare(PartialLatinSquare p) : grid_(std::move(p)) {}
    PartialLatinSquare grid_;
};

// Entry set of the image under the role permutation. Well-defined for any
// partial Latin square; the image is again partial Latin.
PartialLatinSquare conjugate(const PartialLatinSquare& p, const RolePerm& perm);
LatinSquare conjugate(const LatinSquare& l, const RolePerm& perm);

// Literal closure test: every (i,j;k) of L has (j,k;i) in L as presented.
bool is_rcs_symmetric(const LatinSquare& l);

// True when some row/column/symbol relabeling of a equals b.
bool is_isotopic(const LatinSquare& a, const LatinSquare& b);

// Membership in Meynert's rcs-symmetric class: L is isotopic to its
// rcs-conjugate, i.e. the main class carries the cyclic role symmetry
// even if this presentation does not.
bool is_rcs_symmetric_up_to_isotopy(const LatinSquare& l);

}  // namespace lsq
