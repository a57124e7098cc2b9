#pragma once

#include <string>
#include <vector>

#include "qblocks/weight.hpp"

namespace qblocks {

struct Move {
  Root alpha;
  MoveKind kind = MoveKind::Typical;
  friend bool operator==(const Move&, const Move&) = default;
};

/// One factor q(size) of the Levi subalgebra, carrying weights in
/// Lambda_{s^ell}(size) with s = cls.representative.
struct LeviFactor {
  int size = 0;
  CosetClass cls;
  int ell = 0;
  std::string str() const;  // e.g. "q(3):IRR(0+pi*1) ell=1"
  friend bool operator==(const LeviFactor&, const LeviFactor&) = default;
};

struct ReductionResult {
  std::vector<LeviFactor> levi;
  Weight reduced;
  std::vector<Move> moves;
  /// Twisting functors only determine the target up to Pi; we never track it.
  bool parity_undetermined = true;
  std::vector<std::string> notes;
};

/// Stable adjacent-swap sort of lambda into class-contiguous order (INT,
/// HALF, then IRR classes by first occurrence, +s before -s inside an IRR
/// class). Every swap is a star action at a simple root alpha with
/// (lambda, alpha) not an integer.
ReductionResult normalize_block(const Weight& lambda);

/// Re-applies the moves, checking legality and that each logged flag agrees
/// with the recomputed one.
Weight replay_moves(const Weight& lambda, const std::vector<Move>& moves);

}  // namespace qblocks
