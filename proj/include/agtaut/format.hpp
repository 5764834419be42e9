#pragma once

#include "agtaut/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace agtaut {

// Renders sum c_i * label_i as "c1<sep>label1 + c2<sep>label2 - ...".
// An empty label is a constant term; a unit coefficient is omitted in
// front of a label.  The empty sum renders as "0".
std::string format_terms(std::vector<std::pair<Rational, std::string>> const& terms,
                         std::string const& separator);

}  // namespace agtaut
