#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "powerph/cycles.hpp"
#include "powerph/geometry.hpp"
#include "powerph/persistence.hpp"
#include "powerph/verify.hpp"

namespace powerph {

inline constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

/// {"dims": {"0": [[b, d|null], ...], ...}, "infinite_death": null}
json to_json(const PersistenceDiagram& pd);
json to_json(const Pd1Check& c);
json to_json(const BoundRow& r);
json to_json(const BoundReport& r);
json to_json(const ShortestBasis& b);
json to_json(const ClassNorm& n);
json to_json(const WidthReport& w);
json to_json(const ClassWidth& w);
json to_json(const ThickThin& t);
json to_json(const Sweepout& s);
json to_json(const Chain& c, const FilteredComplex& fc);

const char* to_string(RowStatus s);

/// {"version", "config", "wall_time_s"}
json metadata(const json& config, double wall_time_s);

/// "dim,birth,death" rows; infinite deaths print as "inf".
void write_pd_csv(const PersistenceDiagram& pd, std::ostream& out);

/// Static (birth, death) scatter with the diagonal; infinite points sit on a
/// dashed line above the finite range.
void write_pd_svg(const PersistenceDiagram& pd, std::ostream& out);

}  // namespace powerph
