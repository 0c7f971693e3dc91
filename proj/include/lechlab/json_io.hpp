#ifndef LECHLAB_JSON_IO_HPP
#define LECHLAB_JSON_IO_HPP

#include "lechlab/explorer.hpp"
#include "lechlab/newton_polyhedron.hpp"

#include <json.hpp>

#include <string>

namespace lech {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json idealToJson(const MonomialIdeal& ideal);

/// Field names fixed by the wire schema: dim, gens, isClosed, colength,
/// multiplicity, mu, ord, r, mixed, eOfMI.
Json reportToJson(const InvariantReport& rep);

/// {name, outcome, lhs, rhs, precisionBits, ideal}; lhs is an exact rational
/// string, or {"lo","hi"} for a certified interval.
Json verdictToJson(const InequalityVerdict& verdict);

Json searchReportToJson(const SearchReport& report);

/// Per-ideal tightness ratios for external plotting.
std::string searchReportToCsv(const SearchReport& report);

/// Debug form: facets as [normal..., offset].
Json polyhedronToJson(const NewtonPolyhedron& np);

}  // namespace lech

#endif
