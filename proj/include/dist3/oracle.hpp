#pragma once

#include <functional>
#include <string>

#include "dist3/classifier.hpp"
#include "dist3/graph.hpp"
#include "dist3/structure.hpp"

namespace dist3 {

struct OracleResult {
  bool connected = false;
  Partition components;
};

/// Ground truth: build D3(g) and take its components.
OracleResult oracle_d3_connected(const Graph& g);

struct AgreementRecord {
  std::string instance_id;
  std::size_t n = 0;
  ShapeKind shape = ShapeKind::Other;
  bool classifier_connected = false;
  CaseTag case_tag;
  bool oracle_connected = false;
  bool agree = false;
};

/// Runs decide() and the oracle side by side. Precondition: g connected.
AgreementRecord cross_check(const Graph& g, std::string instance_id = {});

/// Predicate that is true while an instance still exhibits the failure.
using FailurePredicate = std::function<bool(const Graph&)>;

/// True iff decide(g) and the oracle disagree.
bool classifier_disagrees(const Graph& g);

/// Greedy shrinking: deletes leaves and suppresses degree-2 vertices off the
/// cycle while `still_fails` holds and the shape class (tree, or unicyclic
/// with the same cycle length) is kept. Returns a local minimum; calling it on
/// its own result returns that result unchanged.
/// Throws std::invalid_argument if `still_fails(g)` is false.
Graph minimize_counterexample(const Graph& g, const FailurePredicate& still_fails = classifier_disagrees);

}  // namespace dist3
