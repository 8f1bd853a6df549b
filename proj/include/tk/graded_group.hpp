// Finitely generated abelian groups in invariant-factor form, and their
// Z/2-graded pairs.
#pragma once

#include "tk/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tk {

struct AbelianGroup {
  std::size_t free_rank = 0;
  /// Invariant factors d_1 | d_2 | ..., each >= 2.
  std::vector<Integer> torsion;

  /// Z^n / (column span of relations).
  static AbelianGroup cokernel(const IntMatrix& relations);
  /// From a Smith diagonal d_1 | d_2 | ...: zeros count as free summands,
  /// units are dropped. ConsistencyError if the chain is broken.
  static AbelianGroup from_diagonal(std::size_t free_rank, const std::vector<Integer>& diagonal);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  /// `0`, `Z`, `Z^2 + Z/2 + Z/6`.
  std::string str() const;
};

struct GradedGroup {
  AbelianGroup parity0;
  AbelianGroup parity1;

  const AbelianGroup& operator[](int parity) const { return parity == 0 ? parity0 : parity1; }
  AbelianGroup& operator[](int parity) { return parity == 0 ? parity0 : parity1; }
  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

  /// `parity 0: Z/5, parity 1: 0`.
  std::string str() const;
};

/// Invariant factors become JSON numbers when they fit in 64 bits and
/// decimal strings otherwise.
nlohmann::ordered_json to_json(const AbelianGroup& g);
nlohmann::ordered_json to_json(const GradedGroup& g);

}  // namespace tk
