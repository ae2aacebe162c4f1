#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gkverma/rootdata.hpp"

namespace gkverma {

// Entries of lambda + rho grouped into maximal congruence classes, order
// preserved within each class.  For type A two entries are related when
// their difference is an integer; for B/C/D when their difference *or* sum
// is.  B/C/D single out the all-integer and all-half-odd classes because
// those close under negation; type A puts every class in `others`.
struct ClassDecomposition {
  std::optional<std::vector<Rational>> class_int;
  std::optional<std::vector<Rational>> class_half;
  std::vector<std::vector<Rational>> others;
};

// (x_1, ..., x_n, -x_n, ..., -x_1).
std::vector<Rational> minus_extension(std::span<const Rational> x);

ClassDecomposition decompose_classes(const LieAlgebra& algebra, const Weight& weight);

// For a B/C/D class that is neither all-integer nor all-half-odd: keep the
// block y of entries differing from x_1 by integers, and append the negated
// reversal of the complement z, giving (y_1, ..., y_r, -z_s, ..., -z_1).
// The result has pairwise integral differences.
std::vector<Rational> tilde_normalize(std::span<const Rational> x);

// GK dimension of the simple highest weight module with highest weight
// (weight - rho); defined for arbitrary weights.
long gkdim_general(const LieAlgebra& algebra, const Weight& weight);

// Restriction of gkdim_general to weights it can handle directly, without
// splitting into classes: type A needs pairwise integral differences, B/D
// need all entries integral or all half-odd, C additionally accepts the
// half-odd case through the even-box count.  Throws std::domain_error
// outside that domain.  Exists as an independently-testable fast path.
long gkdim_integral(const LieAlgebra& algebra, const Weight& weight);

// gkdim_general at scalar_weight(choice, z).
long gkdim_scalar(const ParabolicChoice& choice, const Rational& z,
                  DRealization realization = DRealization::half_ones);

}  // namespace gkverma
