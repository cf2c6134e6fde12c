#pragma once

#include "homolab/betti.hpp"
#include "homolab/collapse.hpp"
#include "homolab/complex.hpp"
#include "homolab/duality.hpp"
#include "homolab/flow.hpp"
#include "homolab/report.hpp"
#include "homolab/snf.hpp"
#include "homolab/spansim.hpp"
#include "homolab/spectra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace homolab {

using Json = nlohmann::json;

/// Rationals serialize as "p" or "p/q" strings.
Json to_json(const Q& q);
/// Floats serialize rounded to 12 significant digits.
Json float_json(double x);
/// Accepts "p/q", decimal strings and JSON numbers.
Q rational_from_json(const Json& j);

struct Provenance {
    std::string family;
    int d = 0;
    int n = 0;
    std::optional<std::uint64_t> seed;
};

/// {"maximal_simplices": [...], "weights": {"0,1,2": "3/2"}, "provenance": {...}}
Json complex_to_json(const SimplicialComplex& k, const std::optional<Provenance>& prov = std::nullopt);
SimplicialComplex complex_from_json(const Json& j);

/**
 * Chains: {"dim": d, "coefficients": {"0,1": "1", ...}}; a bare simplex to
 * coefficient map is accepted on input.
 */
Json chain_to_json(const Chain& c);
Json chain_to_json(const FChain& c);
Chain chain_from_json(const Json& j, std::optional<int> dim = std::nullopt);
/// Bare signed simplex-coefficient map (void boundaries).
Json coefficient_map(const Chain& c);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Deterministic dump (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const SpectralReport& r);
Json to_json(const BettiRun& r);
Json to_json(const FlowResult& r);
Json to_json(const PotentialResult& r);
Json to_json(const SNFResult& r);
Json to_json(const TorsionReport& r);
Json to_json(const CollapseSequence& s);
Json to_json(const EvaluationResult& r);
Json to_json(const WitnessBounds& b);
Json to_json(const InitialState& s);
Json to_json(const DualityCheck& c);
Json to_json(const EmbeddedDualData& d);

}  // namespace homolab
