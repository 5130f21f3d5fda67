#pragma once

#include <vector>

#include "tstar/index.hpp"

namespace tstar::detail {

/// Node roles in the flattened summation chain k_0 >= ... >= k_d with the
/// separator kernels V^# expanded: every c_i >= 4 inserts c_i - 3 inner
/// nodes between k_{i-1} and k_i.
struct ChainNode {
  bool is_outer;  // true: some k_i; false: inner kernel node (weight 1/(2l-1))
  int block;      // i for outer nodes, owning block for inner nodes
};

/// Static shape data for the chain sums of the main generating-function
/// expansion: deltas, node list, and block structure derived from c_1..c_d.
struct ChainShape {
  std::vector<int> c;       // c_1..c_d
  std::vector<int> delta;   // delta_0..delta_d with c_0 = 1, c_{d+1} = 0
  std::vector<ChainNode> nodes;

  int d() const { return static_cast<int>(c.size()); }
  int last() const { return static_cast<int>(nodes.size()) - 1; }

  static ChainShape make(const std::vector<int>& c_seq) {
    ChainShape s;
    s.c = c_seq;
    int d = s.d();
    s.delta.resize(static_cast<std::size_t>(d) + 1);
    auto c_at = [&](int i) { return i == 0 ? 1 : (i == d + 1 ? 0 : s.c[static_cast<std::size_t>(i) - 1]); };
    for (int i = 0; i <= d; ++i)
      s.delta[static_cast<std::size_t>(i)] = delta_weight(c_at(i)) + delta_weight(c_at(i + 1));
    s.nodes.push_back({true, 0});
    for (int i = 1; i <= d; ++i) {
      for (int j = 0; j < c_at(i) - 3; ++j) s.nodes.push_back({false, i});
      s.nodes.push_back({true, i});
    }
    return s;
  }
};

/// Sum over nonincreasing chains K >= v_0 >= v_1 >= ... >= v_M >= 1 of
/// prod_j w(j, v_j) * prod_{j<M} 2^{triangle(v_j, v_{j+1})}, delivered as
/// per-v_0 shells through emit(k, shell) for k = 1..K. One ascending sweep
/// with per-node prefix sums, O(K*M) operations.
template <class T, class WeightFn, class EmitFn>
void chain_shells(long K, int M, const T& zero, const T& one, WeightFn&& w, EmitFn&& emit) {
  std::vector<T> cur(static_cast<std::size_t>(M) + 1, zero);
  std::vector<T> pre(static_cast<std::size_t>(M) + 1, zero);
  for (long k = 1; k <= K; ++k) {
    for (int j = M; j >= 0; --j) {
      // chains below node j at value k: equal value (factor 1) or a strict
      // descent into the prefix (factor 2)
      if (j == M) {
        cur[static_cast<std::size_t>(j)] = w(j, k) * one;
      } else {
        T below = cur[static_cast<std::size_t>(j) + 1];
        below += pre[static_cast<std::size_t>(j) + 1];
        below += pre[static_cast<std::size_t>(j) + 1];
        cur[static_cast<std::size_t>(j)] = w(j, k) * below;
      }
    }
    for (std::size_t j = 0; j < cur.size(); ++j) pre[j] += cur[j];
    emit(k, cur[0]);
  }
}

}  // namespace tstar::detail
