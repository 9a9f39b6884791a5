#pragma once

#include <vector>

#include "akr/kernels.hpp"
#include "akr/marked_set.hpp"
#include "akr/state.hpp"

namespace akr {

// In-place stepping engine for one marked configuration. A step is query
// (sign flip at marked cells), coin (Grover diffusion at unmarked cells,
// identity at marked cells), then the flip-flop shift. A walker holds
// per-run scratch and must not be shared between threads; each run owns one.
class Walker {
 public:
  Walker(const GridGeometry& geometry, MarkedSet marked,
         const kernels::KernelTable* table = nullptr);

  const GridGeometry& geometry() const { return geom_; }
  const MarkedSet& marked() const { return marked_; }
  const kernels::KernelTable& table() const { return *table_; }

  void apply_query(WalkState& s);
  void apply_coin(WalkState& s);
  void apply_shift(WalkState& s) const;
  void step(WalkState& s);

 private:
  GridGeometry geom_;
  MarkedSet marked_;
  const kernels::KernelTable* table_;
  std::vector<double> saved_;  // marked-cell amplitudes parked during the coin
};

// Value-returning forms of the step operators.
WalkState apply_query(const WalkState& s, const MarkedSet& marked);
WalkState apply_coin(const WalkState& s, const MarkedSet& marked);
WalkState apply_shift(const WalkState& s);
WalkState step(const WalkState& s, const MarkedSet& marked);

}  // namespace akr
