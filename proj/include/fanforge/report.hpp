#ifndef FANFORGE_REPORT_HPP
#define FANFORGE_REPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fanforge/fan_search.hpp"
#include "fanforge/secondary_fan.hpp"

namespace fanforge {

struct RunOptions
{
    bool verify_overlap = true;
    std::size_t fiber_bound = 6;
    unsigned threads = 1;
};

/// A finished report: JSON data, its text rendering, and whether every
/// internal cross-check passed.
struct Report
{
    nlohmann::json data;
    std::string text;
    bool ok = true;
};

struct Problem
{
    FanMatrix v;
    WeightMatrix q;
};

struct ParseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/**
 * {"V": [[...], ...]} or {"Q": [[...], ...]}.  Given Q, V is its integer
 * kernel and Q itself is kept as the weight matrix when it is a nonnegative
 * Gale dual; otherwise a fresh one is computed.  Throws ParseError on
 * malformed data and AxiomViolation on an invalid matrix.
 */
Problem problem_from_json(const nlohmann::json& input);
IntMatrix matrix_from_json(const nlohmann::json& rows);

nlohmann::json matrix_json(const IntMatrix& a);
nlohmann::json index_set_json(const IndexSet& s);
nlohmann::json cone_json(const Cone& c);

Report validate_report(const FanMatrix& v, const WeightMatrix& q);
Report sf_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts);
Report psf_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts);
Report compare_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts);
Report conjecture_report(const FanMatrix& v);

}  // namespace fanforge

#endif
