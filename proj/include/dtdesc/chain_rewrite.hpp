#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dtdesc/error.hpp"

namespace dtdesc {

// Classification of an expansion site by the surrounding triangle structure:
// a = pendant edge lies in a triangle with a fifth vertex,
// b = the triangle edge opposite the apex lies in a second triangle,
// c = the designated triangle vertex is adjacent to the pendant neighbour.
struct DteType {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const DteType&) const = default;
};

// Normalised chain vector. Open form: each chain's zigzag lengths followed by
// a 0 separator; the all-open empty vector is (0). Closed form: the cyclic
// lengths of the single closed chain, no zeros.
struct ChainVector {
  std::vector<int> entries;
  bool closed = false;

  int sum() const;
  std::string str() const;
  auto operator<=>(const ChainVector&) const = default;
};

enum class CvTag { Candidate, UnrealizableLemma, Invalid, ClosedSingle };

struct CvOutcome {
  CvTag tag = CvTag::Candidate;
};

ChainVector normalize(const std::vector<int>& raw, bool closed);

// All (site type, child vector) transitions a single expansion can induce.
std::vector<std::pair<DteType, ChainVector>> dte_children(const ChainVector& cv);

// Exact inverse relation: all (site type, parent vector) pairs such that the
// given vector is a child of the parent under that type.
std::vector<std::pair<DteType, ChainVector>> dtr_parents(const ChainVector& cv);

CvOutcome classify_outcome(const ChainVector& cv);

struct ClosureResult {
  ChainVector start;
  int max_sum = 0;
  bool reached_target = false;  // target is the closed vector (3,3)
  bool saturated = false;
  std::vector<ChainVector> closure;  // sorted, includes start
  std::string to_json() const;
};

// Breadth-first closure under single reductions (dtr_parents steps), pruning
// vectors that cannot belong to a descendant and stopping at visited states.
ClosureResult dtr_closure(const ChainVector& start, int max_sum);

struct TheoremReport {
  std::vector<ClosureResult> runs;
  bool ok = false;  // every run saturated without reaching (3,3)
  std::string to_json() const;
};

// Reduction closures from the four minimal-triangle starting vectors
// (2,0), (2,1,0), (2,0,1,0), (3,0).
TheoremReport verify_min_triangle_theorem(int max_sum = 12);

// Exhaustive enumeration of normalised vectors, used for cross-validation.
std::vector<ChainVector> all_open_vectors(int max_sum);
std::vector<ChainVector> all_closed_vectors(int max_sum);

}  // namespace dtdesc
