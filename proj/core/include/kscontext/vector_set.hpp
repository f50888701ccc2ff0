#pragma once

#include <string>
#include <vector>

#include "kscontext/exact_scalar.hpp"

namespace kscontext {

/// A named list of projective rays in C^d with exact entries.
struct VectorSet {
  std::string name;
  int dimension = 0;
  std::vector<ExactVector> rays;

  std::size_t size() const { return rays.size(); }
};

/// Representative of the ray through `v` whose first nonzero coordinate is 1.
/// Two nonzero vectors span the same ray iff their canonical forms are equal.
ExactVector canonical_ray(const ExactVector& v);

bool projectively_equal(const ExactVector& u, const ExactVector& v);

/// Checks dimension agreement, nonzero rays and projective distinctness.
/// Throws InputError describing the first violation.
void validate(const VectorSet& set);

/// Same dimension and the same rays up to scale and order.
bool same_rays(const VectorSet& a, const VectorSet& b);

/// JSON document: {"name", "dimension", "rays": [[[a_num,a_den,b_num,b_den,c_num,c_den,e_num,e_den], ...], ...]}.
std::string serialize_vector_set(const VectorSet& set);

/// Inverse of serialize_vector_set. Integers may be JSON numbers or decimal strings
/// (for values beyond 64 bits). Validates the result.
VectorSet parse_vector_set(const std::string& text);

}  // namespace kscontext
