#include "lsq/entry.hpp"

namespace lsq {

std::string Entry::str() const {
    std::string s = "(";
    s += std::to_string(row + 1);
    s += ',';
    s += std::to_string(col + 1);
    s += ';';
    s += std::to_string(elem + 1);
    s += ')';
    return s;
}

const std::array<RolePerm, 6>& RolePerm::all() {
    static const std::array<RolePerm, 6> perms = {
        RolePerm{{0, 1, 2}}, RolePerm{{0, 2, 1}}, RolePerm{{1, 0, 2}},
        RolePerm{{1, 2, 0}}, RolePerm{{2, 0, 1}}, RolePerm{{2, 1, 0}},
    };
    return perms;
}

}  // namespace lsq
