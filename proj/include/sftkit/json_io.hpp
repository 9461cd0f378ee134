#pragma once

#include <json.hpp>

#include "sftkit/delta.hpp"
#include "sftkit/equivalence.hpp"
#include "sftkit/moves.hpp"
#include "sftkit/perron.hpp"

namespace sftkit {

using Json = nlohmann::ordered_json;

// Integers that fit in 53 bits are plain numbers; larger ones are decimal strings.  Readers accept
// both.  Every reader throws std::invalid_argument on malformed input.
Json to_json(const Int& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);  // "p/q" strings for non-integers
Json to_json(const IntMatrix& m);
Int int_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

// {"vertices": [...], "edges": [[src, dst, id], ...]}; the id may be omitted, in which case edges
// are numbered e1, e2, ... in list order.
Json to_json(const DirectedMultigraph& g);
DirectedMultigraph graph_from_json(const Json& j);

// {"kind": "esse"|"sse"|"se"|"intertwiner", ...}
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const MoveRecord& r);
MoveRecord move_from_json(const Json& j);

Json to_json(const DeltaClaim& c);
DeltaClaim delta_claim_from_json(const Json& j);

Json to_json(const Poly& p);  // coefficients, constant term first
Poly poly_from_json(const Json& j);
Json to_json(const AlgebraicReal& a);  // {"minpoly", "lo", "hi"}
AlgebraicReal algebraic_from_json(const Json& j);

// {"matrix_id", "v", "k"}
Json to_json(const DimElement& e);

Json to_json(const SmallGraphReport& r, const DirectedMultigraph& g);

// Indented output in which arrays of scalars (vectors, matrix rows) stay on one line.
std::string dump_pretty(const Json& j, int indent = 2);

}  // namespace sftkit
