#pragma once

#include <string>
#include <vector>

#include "kscontext/vector_set.hpp"

namespace kscontext {

struct CatalogEntry {
  std::string name;
  int dimension;
  std::size_t ray_count;
  std::string description;
};

/// peres33, cabello18, peres_mermin24, stabilizer2q, e8 (in that order).
const std::vector<CatalogEntry>& builtin_catalog();

/// Throws InputError(kUnknownName) for names outside builtin_catalog().
VectorSet load_builtin(const std::string& name);

/// Embedded coordinate copy of a builtin. For stabilizer2q and e8 this is the
/// static fallback that the generators are cross-checked against.
VectorSet embedded_builtin(const std::string& name);

/// All 60 pure two-qubit stabilizer states as exact rays, obtained as the rank-one
/// projectors (1 + s P)(1 + t Q)/4 over commuting Pauli pairs P, Q and signs s, t.
VectorSet generate_stabilizer_rays();

/// The 240 roots of E8: (+-1, +-1, 0^6) permutations and (+-1/2)^8 with an even
/// number of minus signs.
std::vector<ExactVector> e8_roots();

/// e8_roots() with antipodal pairs identified: 120 rays, each represented by the
/// root whose first nonzero entry is positive.
VectorSet generate_e8_rays();

}  // namespace kscontext
