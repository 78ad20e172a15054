#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfdt/cover.hpp"

namespace sfdt {

enum class BuildTag { monoblock, tilde_complete, circular_ladder, mobius_ladder };
std::string to_string(BuildTag t);

struct BuildKind {
  BuildTag tag;
  // monoblock: witness[k] = host vertex the k-th kernel vertex maps to.
  // tilde_complete: witness[k] = component index of the k-th kernel vertex.
  // ladders: kernel vertex ids in cycle-walk order (circular: both cycles
  // concatenated, each starting at its smallest kernel id).
  std::vector<int> witness;
};

// f(v,1)=deg(v), other slots 0; identity matching on slot 1 of every edge.
Cover make_monoblock(const Graph& g, int kappa);

// Cover of K_p with full identity matchings on every positive slot;
// f(v,q) = fconst[q]; requires sum(fconst) = p-1.
Cover make_tilde_complete(int p, int kappa, const std::vector<int>& fconst);

// Cover of C_n with kappa=2, f=1 everywhere. kind "circular" (n odd):
// identity matchings on all edges - kernel is two disjoint n-cycles.
// kind "mobius" (n even): identity on path edges, swapped on the closing
// edge - kernel is a single 2n-cycle.
Cover make_ladder_cover(int n, const std::string& kind);

// The four base non-colorable shapes, checked in the declaration order above.
// pre: host connected. Returns nothing unless fsum(v) = deg(v) everywhere.
std::optional<BuildKind> is_building_cover(const Cover& c);

// Building covers closed under gluing two covers at one identified vertex
// with capacities added slot-wise. pre: host connected.
bool is_constructible(const Cover& c);

// Glue host of b onto host of a, identifying vb with va; capacities at the
// identified vertex add slot-wise. Both covers must share kappa.
Cover glue_at(const Cover& a, int va, const Cover& b, int vb);

struct MrReport {
  bool constructible = false;
  bool has_sfdt = false;
  bool consistent = false;  // exactly one of the two must hold
};
// pre: host connected, fsum(v) >= deg(v) everywhere.
MrReport theorem_mr_check(const Cover& c);

}  // namespace sfdt
