#ifndef SYZ_SVG_HPP
#define SYZ_SVG_HPP

#include <optional>
#include <string>

#include "syz/document.hpp"

namespace syz {

/// Renders the unit fundamental domain of T^2 as a 512x512 SVG.
///
/// Without a spec name: every brane in the document as wrapped polylines,
/// plus the intersection points of each non-parallel pair as labeled dots.
/// With a spec name: the surgered curve, its surviving self-intersections,
/// and the surgery points highlighted.
///
/// Output is deterministic: branes in name order, coordinates rendered with
/// exactly six decimal places from the exact rationals.
std::string render_svg(const Document& doc,
                       const std::optional<std::string>& spec_name = std::nullopt);

}  // namespace syz

#endif
