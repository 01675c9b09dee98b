#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/types.hpp"

#include <string>

namespace helmholtz2d {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
    if (text == "even" || text == "+") {
        return Parity::even;
    }
    if (text == "odd" || text == "-") {
        return Parity::odd;
    }
    throw ConfigError("unknown parity '" + std::string(text) + "'");
}

}  // namespace helmholtz2d
