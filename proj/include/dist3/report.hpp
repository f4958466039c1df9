#pragma once

#include <optional>
#include <string>

#include "dist3/classifier.hpp"
#include "dist3/graph.hpp"
#include "dist3/oracle.hpp"

namespace dist3 {

/// Carried by every JSON object the tools emit.
inline constexpr int kSchemaVersion = 1;

struct ClassifyReport {
  Decision decision;
  bool oracle_connected = false;
  bool agree() const { return decision.connected == oracle_connected; }
  /// One JSON object, newline-terminated.
  std::string json;
};

/// Structural decision, confirmed against D3(g). The certificate in the JSON
/// is always built from D3(g), so it describes the true answer even when the
/// decision disagrees. Throws std::invalid_argument for disconnected input.
ClassifyReport classify_report(const Graph& g);

/// One JSON line for a corpus instance. `expected` is set for fixtures;
/// `counterexample` for disagreements.
std::string record_json(const AgreementRecord& rec, std::optional<bool> expected = std::nullopt,
                        const Graph* counterexample = nullptr);

}  // namespace dist3
