#pragma once

#include <string>

#include "pmclp/model.hpp"

namespace pmclp {

// SVG picture of the demand zones and, if `solution` is given, its service
// zones. Throws std::invalid_argument when the solution does not fit the
// instance.
std::string render_svg(const Instance& instance, const Solution* solution = nullptr);

}  // namespace pmclp
