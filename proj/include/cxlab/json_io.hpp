#pragma once

// JSON forms of the reports, shared by the CLI, the Python module and the findings log.

#include "json.hpp"

#include "cxlab/harness.hpp"

namespace cxlab::io {

using Json = nlohmann::json;

/// {kind, M, N, range, is_zero, dims, certificate, window, horizon}.
Json to_json(const HomologyReport& r);
/// {n: {d: count}}.
Json to_json(const BettiTable& b);
Json to_json(const ComplexityEstimate& c);
Json to_json(const CheckReport& r);
Json to_json(const PushoutModule& p);
Json to_json(const ReductionVerdict& v);
Json to_json(const ReductionStep& s);
Json to_json(const PeriodicityVerdict& v);
Json to_json(const Finding& f);
Json to_json(const CorpusSummary& s);
Json to_json(const HypersurfaceExample& e);
Json to_json(const FreeResolution& r);

}  // namespace cxlab::io
