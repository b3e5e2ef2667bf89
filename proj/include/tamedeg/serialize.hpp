#pragma once

#include "json.hpp"

#include "tamedeg/construct.hpp"
#include "tamedeg/poly.hpp"
#include "tamedeg/reduction.hpp"
#include "tamedeg/tame.hpp"

namespace tamedeg {

using Json = nlohmann::ordered_json;

// Polynomial: {"nvars": n, "terms": [{"c": "p/q", "e": [..]}]} in descending
// graded-lex order.
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

// PolyMap: {"n": n, "coords": [Polynomial, ...]}
Json to_json(const PolyMap& f);
PolyMap polymap_from_json(const Json& j);

// TameWord: {"n": n, "factors": [...]}, elementary indices one-based.
Json to_json(const TameWord& w);
TameWord tameword_from_json(const Json& j);

/// Accepts either a TameWord (expanded) or a PolyMap document.
PolyMap map_from_json(const Json& j);

Json to_json(const Inequality& q);
Json to_json(const FilterReport& r);
Json to_json(const NonMemberTrace& t);
NonMemberTrace trace_from_json(const Json& j);

// Verdict: {"verdict": ..., "representation"?, "index"?, "witness"?,
// "trace"?, "citation"?, "reason"?}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// ReductionWitness: {"target": t (one-based), "g": Polynomial, "new_degree":
// m or "-inf", "budget": B}
Json to_json(const ReductionWitness& w);
ReductionWitness reduction_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace tamedeg
