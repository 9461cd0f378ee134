#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/graph.hpp"
#include "sftkit/witness.hpp"

namespace sftkit {

using EdgePartition = std::vector<std::vector<std::string>>;

struct SplitSpec {
  std::string vertex;
  EdgePartition partition;
  bool allow_empty_parts = false;
};

enum class MoveKind { OutSplit, InSplit, GenInSplit, SourceElim, SourceAdd };

const char* to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);  // throws std::invalid_argument

struct MoveRecord {
  MoveKind kind = MoveKind::OutSplit;
  DirectedMultigraph input;
  SplitSpec spec;                    // splits; spec.vertex alone for source elimination
  std::vector<std::string> targets;  // source addition
  DirectedMultigraph output;
  std::optional<EsseWitness> esse_witness;
};

// One part per edge.
EdgePartition maximal_out_partition(const DirectedMultigraph& g, const std::string& v);
EdgePartition maximal_in_partition(const DirectedMultigraph& g, const std::string& v);

// Split vertex v becomes v.1 .. v.n at v's position (plain v when n = 1); edges that are
// duplicated get the same suffixes.  Throws std::invalid_argument for a sink or a bad partition.
DirectedMultigraph out_split(const DirectedMultigraph& g, const SplitSpec& spec);
DirectedMultigraph in_split(const DirectedMultigraph& g, const SplitSpec& spec);
// Move (I-): parts may be empty; w must emit and receive an edge.
DirectedMultigraph gen_in_split(const DirectedMultigraph& g, const SplitSpec& spec);

DirectedMultigraph source_eliminate(const DirectedMultigraph& g, const std::string& v);
// Appends a fresh vertex with one edge to each listed target (repeats give parallel edges).
DirectedMultigraph source_add(const DirectedMultigraph& g, const std::vector<std::string>& targets);

// Builds the record, replaying the move and attaching the ESSE pair for splits.
MoveRecord make_move(MoveKind kind, const DirectedMultigraph& input, const SplitSpec& spec,
                     const std::vector<std::string>& targets = {});
// Replays the move and compares with the stored output (and witness, if any).
bool replay_matches(const MoveRecord& record);

// R S = A_input and S R = A_output, checked before returning; throws std::logic_error if the
// product check fails and std::invalid_argument for non-split kinds.
EsseWitness move_to_esse(const MoveRecord& record);

struct UnitalInSplitWitness {
  DirectedMultigraph G;
  std::string w;
  EdgePartition part_e;
  EdgePartition part_f;
};

struct CheckResult {
  bool ok = false;
  std::string reason;
};

// Move (I+): both generalised in-splits of G at w, with equally many parts, reproduce E and F.
CheckResult unital_in_split_check(const DirectedMultigraph& e, const DirectedMultigraph& f,
                                  const UnitalInSplitWitness& witness);

}  // namespace sftkit
