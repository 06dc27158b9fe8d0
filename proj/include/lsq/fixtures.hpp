#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lsq/square.hpp"

namespace lsq::fixtures {

// The three exceptional order-8 main class representatives and their
// published size-15 sets, bundled so verification runs without any files.
// family is 'X', 'Y', or 'W'.
const LatinSquare& exceptional_square(char family);
struct NamedSet {
    std::string id;  // "X1".."X4", "Y1".."Y12", "W1"
    PartialLatinSquare set;
};
const std::vector<NamedSet>& exceptional_sets(char family);

// Raw square-text forms, used to keep the on-disk fixture files honest.
std::string_view exceptional_square_text(char family);
std::string_view exceptional_set_text(std::string_view id);

}  // namespace lsq::fixtures
