#pragma once

#include <optional>

#include "minors/grids.hpp"
#include "minors/minor_model.hpp"

namespace minors {

// swap_left: crosscap/handle pair at (i, i+1) becomes handle/crosscap.
// swap_right: handle/crosscap pair becomes crosscap/handle.
enum class StepKind { swap_left, swap_right, merge3, split };

const char* step_kind_name(StepKind k);

struct TransformStep {
  StepKind kind{};
  MixedSurfaceGridSpec source_spec;
  MixedSurfaceGridSpec target_spec;
  int position = 0;
  int blowup = 0;  // 9 for swaps, 18 for merge/split
};

struct TransformResult {
  TransformStep step;
  MinorModel model;  // verified before being returned
};

// Order-9k source with a crosscap/handle (or handle/crosscap) pair at
// positions i, i+1 contains the order-k grid with the pair exchanged.
TransformResult swap_handle_crosscap(const MixedSurfaceGridSpec& source, int position);

// Order-18k source with crosscaps at i, i+1, i+2 contains the order-k grid
// with a handle at i and a crosscap at i+1 (one position fewer).
TransformResult merge_three_crosscaps(const MixedSurfaceGridSpec& source,
                                      std::optional<int> position = std::nullopt);

// Order-18k source with a handle at i and a crosscap at i+1 contains the
// order-k grid with crosscaps at i, i+1, i+2 (one position more).
TransformResult split_handle_to_crosscaps(const MixedSurfaceGridSpec& source,
                                          std::optional<int> position = std::nullopt);

struct NormalizeResult {
  std::vector<TransformStep> plan;
  DyckGridSpec target;
  MinorModel model;
};

// Deterministic plan: gather handles to the front with swaps (leftmost
// eligible pair first), then merge crosscap triples left to right.
struct PlannedStep {
  StepKind kind{};
  int position = 0;
};
std::vector<PlannedStep> normalize_plan(const MixedSurfaceGridSpec& source);

// Exact source order the plan needs to land on order k_target.
long long normalize_required_order(const MixedSurfaceGridSpec& source, int k_target);

NormalizeResult normalize_to_dyck(const MixedSurfaceGridSpec& source, int k_target);

struct ContainResult {
  std::vector<TransformStep> plan;
  MinorModel model;
};

std::vector<PlannedStep> contain_plan(const DyckGridSpec& dyck, const MixedSurfaceGridSpec& target);
long long contain_required_order(const DyckGridSpec& dyck, const MixedSurfaceGridSpec& target);

// A Dyck grid of the planned order contains the given mixed surface grid.
// Orientable Dyck grids never contain grids with crosscaps; that case errors.
ContainResult dyck_contains_mixed(const DyckGridSpec& dyck, const MixedSurfaceGridSpec& target);

}  // namespace minors
