#pragma once

#include <vector>

#include "nfourier/cyclotomic.hpp"

namespace nfourier {

using CycloVec = std::vector<Cyclotomic>;
using CycloMat = std::vector<CycloVec>;

/// Exact rank by fraction-free-ish Gaussian elimination (divisions are exact
/// field operations in the cyclotomic field).
int rank(CycloMat m);

bool is_identity(const CycloMat& m);

CycloMat mat_mul(const CycloMat& a, const CycloMat& b, bool parallel = false);

/// Incremental independent-subset filter: returns indices of the input
/// vectors that form a basis of their span, scanning in order (deterministic).
std::vector<int> independent_subset(const std::vector<CycloVec>& vectors);

}  // namespace nfourier
