#ifndef FANFORGE_SVG_PLOT_HPP
#define FANFORGE_SVG_PLOT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanforge/fan_search.hpp"
#include "fanforge/secondary_fan.hpp"

namespace fanforge {

struct UnsupportedRank : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct ChamberLabel
{
    std::size_t label;  ///< 1-based label drawn in the figure
    std::size_t fan;    ///< 1-based index into the fan list
};

struct SecondaryFanPlot
{
    std::string svg;
    std::vector<ChamberLabel> chambers;  ///< full-dimensional nef cones
    std::vector<std::size_t> degenerate; ///< fans whose nef cone is a ray, drawn as points
};

/**
 * Section of <Q> by the standard simplex for r = 3: effective cone boundary,
 * movable region, chambers of the projective fans, and the column classes.
 * Chambers are labelled in the order of their interior points.
 */
SecondaryFanPlot plot_secondary_fan(const WeightMatrix& q, const std::vector<Fan>& fans);

}  // namespace fanforge

#endif
