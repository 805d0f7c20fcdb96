#pragma once

#include <memory>
#include <optional>
#include <string>

#include "metricgeo/diamond.hpp"
#include "metricgeo/embedding.hpp"
#include "metricgeo/laakso.hpp"
#include "metricgeo/martingale.hpp"
#include "metricgeo/metric_graph.hpp"
#include "metricgeo/reflexivity.hpp"
#include "metricgeo/witness.hpp"

namespace metricgeo {

// Rationals serialize as {"num": N, "den": D}, never as floats; integers move
// to decimal strings when they do not fit in 64 bits. Floats and bare
// integers are accepted on input and converted to their exact values.

std::string to_json(const MetricGraph& g);
std::shared_ptr<MetricGraph> metric_graph_from_json(const std::string& text);

std::string to_json(const DiamondGraph& d, bool active_root_pair = true);
std::string to_json(const LaaksoGraph& g);

std::string to_json(const FiniteMetricSpace& space);
FiniteMetricSpace metric_space_from_json(const std::string& text);

std::string to_json(const Embedding& f, const std::string& space_ref);
Embedding embedding_from_json(const std::string& text);

// A generated space file: the graph plus family bookkeeping when present.
struct SpaceFile {
  std::string family;  // "diamond", "laakso2" or "" for a bare graph
  std::optional<DiamondGraph> diamond;
  std::optional<LaaksoGraph> laakso;
  std::shared_ptr<const MetricGraph> graph;
};

SpaceFile space_from_json(const std::string& text);

// Point keys: vertex ids, or "<edge-address>@<offset>" resolved through the
// family's locator.
GraphPoint point_from_key_in_space(const SpaceFile& space, const std::string& key);

std::string witness_to_json(const ThickWitness& witness, const WitnessReport& report);
std::string report_to_json(const WitnessReport& report);

struct IsoWitnessFile {
  std::vector<std::string> base, ext, ext_tilde;
  std::vector<int> common, distinct;
  Rational C;
};
IsoWitnessFile iso_witness_from_json(const std::string& text);
std::string iso_witness_to_json(const IsoWitnessFile& file);

// Delta trees: {"depth": n, "norm": tag, "weights": [...], "vectors": [...]}
// with vectors listed from index 1.
std::string to_json(const DeltaTree& tree);
DeltaTree delta_tree_from_json(const std::string& text);

// Reflexivity witnesses: {"vectors": [...], "functional": [...],
// "theta": {num,den}, "norm": tag}.
std::string to_json(const ReflexivityWitness& witness);

// Martingale traces: a CSV of (step, interval bounds, value coordinates) and
// a JSON certificate with the per-step differences and verdicts.
std::string trace_to_csv(const MartingaleTrace& trace);
std::string trace_certificate_json(const MartingaleTrace& trace, const TraceCheck& check);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace metricgeo
