#include "lsq/fixtures.hpp"

#include <array>
#include <map>
#include <span>

namespace lsq::fixtures {

namespace {

constexpr std::string_view kX = "1634528757123864452867313287164528467153746385128175432663512478";
constexpr std::string_view kY = "1634258735274861437862152186735457128643786154328453172662453178";
constexpr std::string_view kW = "8674123573285416645371282531864758126374174638523285476141672583";

struct RawSet {
    std::string_view id;
    std::string_view text;
};

constexpr std::array<RawSet, 4> kXSets = {{
    {"X1", ".63.....5.1..........73....71...2..6.....4...5......4.2........8"},
    {"X2", "..3.5...5.....6.4....7...2..1......6.1...4.3......7...2........8"},
    {"X3", "..3..2..57..........67..3...1.....46.....4....1....5..2........8"},
    {"X4", "1..4.......23....52..........64.....7.5.7.6......1...3.........8"},
}};

constexpr std::array<RawSet, 12> kYSets = {{
    {"Y1", "..34.....5.7....4...6...21........1..6......5.3......72........8"},
    {"Y2", ".63.....3..7....4.....1..1..7......2.6......54....5...2........8"},
    {"Y3", ".6..2...3.....6...7...1.....73..5..2.......1.4...45............8"},
    {"Y4", "1...2.......4.6...7..2.......35.57........61.....4.3...........8"},
    {"Y5", "1..4.....5..4.......62..2.....5..71.......6...3....3.7.........8"},
    {"Y6", "16......3...4........21.....7.5..7.2......6..4....53...........8"},
    {"Y7", "...4.5...52......3..6...2..6......1...4.7.....3.....17.........8"},
    {"Y8", "1....5....2.4....3...2.....6..5..7....4.7.6........31..........8"},
    {"Y9", "..3.2......7..6.4.7......1...3..5....6.....15....4....2........8"},
    {"Y10", "..3..5....27....43.......1.6.........64.7...5.......1.2........8"},
    {"Y11", ".6...5..3.2......3....1....67......2..4.7....4....5.1..........8"},
    {"Y12", "...42....5....6...7.6...2....3..5.1........1..3..4...7.........8"},
}};

constexpr std::array<RawSet, 1> kWSets = {{
    {"W1", "8.7......3....1.6..3........8......2...4......52....47...16....."},
}};

std::span<const RawSet> raw_sets(char family) {
    switch (family) {
        case 'X': return kXSets;
        case 'Y': return kYSets;
        case 'W': return kWSets;
        default: throw ParseError("unknown exceptional family; expected X, Y, or W");
    }
}

}  // namespace

std::string_view exceptional_square_text(char family) {
    switch (family) {
        case 'X': return kX;
        case 'Y': return kY;
        case 'W': return kW;
        default: throw ParseError("unknown exceptional family; expected X, Y, or W");
    }
}

std::string_view exceptional_set_text(std::string_view id) {
    for (auto sets : {std::span<const RawSet>(kXSets), std::span<const RawSet>(kYSets),
                      std::span<const RawSet>(kWSets)})
        for (const RawSet& s : sets)
            if (s.id == id) return s.text;
    throw ParseError("unknown exceptional set id '" + std::string(id) + "'");
}

const LatinSquare& exceptional_square(char family) {
    static const std::map<char, LatinSquare> squares = {
        {'X', LatinSquare::parse(kX)},
        {'Y', LatinSquare::parse(kY)},
        {'W', LatinSquare::parse(kW)},
    };
    auto it = squares.find(family);
    if (it == squares.end()) throw ParseError("unknown exceptional family; expected X, Y, or W");
    return it->second;
}

const std::vector<NamedSet>& exceptional_sets(char family) {
    static const std::map<char, std::vector<NamedSet>> all = [] {
        std::map<char, std::vector<NamedSet>> m;
        for (char f : {'X', 'Y', 'W'}) {
            std::vector<NamedSet> v;
            for (const RawSet& s : raw_sets(f))
                v.push_back(NamedSet{std::string(s.id), PartialLatinSquare::parse(s.text)});
            m.emplace(f, std::move(v));
        }
        return m;
    }();
    auto it = all.find(family);
    if (it == all.end()) throw ParseError("unknown exceptional family; expected X, Y, or W");
    return it->second;
}

}  // namespace lsq::fixtures
