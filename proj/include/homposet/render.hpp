#pragma once

#include <string>

#include "homposet/hom_poset.hpp"

namespace homposet {

/// One row per element: index, ideal, multiplicative set and flags
/// (least, maximal, top).
std::string render_text(const HomPoset& poset);

/// Hasse diagram as a DOT digraph; edges point from a cover's lower element
/// to the upper one.
std::string render_dot(const HomPoset& poset);

/// {"ring", "size", "elements": [{"index", "top", "ideal", "mset"}], "hasse": [[i, j]]}.
/// ideal and mset are member arrays, null for the top element.
std::string render_json(const HomPoset& poset);

}  // namespace homposet
