#pragma once

// Internal polyhedral kernels: exact LP feasibility and the double
// description method. Not installed.

#include <optional>
#include <vector>

#include "toricq/arith.hpp"

namespace toricq::detail {

/// Finds lambda >= 0 with sum_i lambda_i * columns[i] = target, exactly, using
/// phase-one simplex with Bland's rule. nullopt if infeasible.
std::optional<RatVector> nonnegative_combination(const IntMatrix& columns, const IntVector& target);

/// Generator form of {y : <row, y> >= 0 for every row}. `lineality` is a
/// basis of the largest linear subspace; `rays` are the extreme rays modulo
/// that subspace, primitive.
struct ConeGenerators {
  IntMatrix lineality;
  IntMatrix rays;
};

ConeGenerators cone_from_inequalities(const IntMatrix& rows, std::size_t dim);

/// Canonical generator list of lin(lineality) + pos(rays): the lineality
/// subspace contributes +-(primitive RREF basis rows) and each ray is
/// projected onto the orthogonal complement of the lineality space. Sorted,
/// duplicate free.
IntMatrix canonical_generators(const ConeGenerators& g, std::size_t dim);

/// Integral orthogonal projection of v onto lineality^perp, made primitive.
IntVector project_off(const IntVector& v, const RatMatrix& lineality_rref);

}  // namespace toricq::detail
