/* eulerian.hpp -- certified checks of the conditions for infinite Eulerian paths.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endgraph/separation.hpp"

namespace endgraph {

// Every odd-degree vertex lies in ball(basepoint, radius).
struct ParityCertificate {
  int radius = 0;
};

// If some even-inducing finite E has Comp(E) >= 2, one lies in ball(basepoint, radius).
struct LocalizationCertificate {
  int radius = 0;
};

struct EulerVerdict {
  enum class Value { Holds, Fails, Unknown };
  Value value = Value::Unknown;
  std::string clause;  // the violated or undecided condition
  std::string reason;
  std::vector<VertexId> odd_vertices;  // parity witness
  EdgeSet separating_set;              // even-inducing separating witness
  std::vector<std::string> certified;  // conditions taken from certificates
  std::vector<std::string> searched;   // conditions established by search
  std::int64_t fuel_spent = 0;

  bool holds() const { return value == Value::Holds; }
  bool fails() const { return value == Value::Fails; }
  bool unknown() const { return value == Value::Unknown; }
};

std::string to_string(const EulerVerdict &v);

// Odd-degree vertices of ball(basepoint, radius), loops counted twice, sorted.
std::vector<VertexId> odd_vertex_scan(const GraphOracle &g, int radius);

// One-way condition: one end and exactly one odd vertex.
EulerVerdict check_one_way(const GraphOracle &g, const EndsCertificate &ends_cert,
                           const std::optional<ParityCertificate> &parity_cert, const Fuel &fuel);

// Two-way condition: every degree even, one or two ends, and with two ends no
// even-inducing finite E leaves two infinite components.
EulerVerdict check_two_way(const GraphOracle &g, const EndsCertificate &ends_cert,
                           const std::optional<ParityCertificate> &parity_cert,
                           const std::optional<LocalizationCertificate> &loc_cert,
                           const Fuel &fuel);

// True iff every vertex has even degree in the subgraph formed by e.
bool induces_even_subgraph(const EdgeSet &e);

}  // namespace endgraph
