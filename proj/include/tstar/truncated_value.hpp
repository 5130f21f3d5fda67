#pragma once

#include <string>

#include "tstar/big_real.hpp"

namespace tstar {

/// Whether an error indicator comes from a proved tail bound or from an
/// empirical decay heuristic.
enum class BoundKind { rigorous, heuristic };

inline const char* to_string(BoundKind k) {
  return k == BoundKind::rigorous ? "rigorous" : "heuristic";
}

/// Estimate of an infinite series together with a nonnegative error indicator
/// and the truncation point that produced it.
struct TruncatedValue {
  BigReal estimate;
  BigReal error_indicator;
  long terms_used = 0;
  BoundKind bound_kind = BoundKind::heuristic;
};

}  // namespace tstar
