#pragma once

#include <vector>

#include "gkverma/rational.hpp"

namespace gkverma {

enum class LieType { A, B, C, D };

char lie_type_letter(LieType type);
LieType lie_type_from_letter(char letter);

// For type A the parameter n is the matrix size of sl(n): weights carry n
// coordinates but the rank is n - 1.  For B (odd orthogonal), C (symplectic)
// and D (even orthogonal) the rank and the coordinate length are both n.
// Accepted ranges: A/B/C need n >= 2, D needs n >= 3 (D_3 is just A_3 in
// disguise but is handled uniformly).
struct LieAlgebra {
  LieType type;
  int n;

  LieAlgebra(LieType type, int n);

  int coord_length() const { return n; }
  int rank() const { return type == LieType::A ? n - 1 : n; }
  long positive_root_count() const;

  bool operator==(const LieAlgebra&) const = default;
};

// Weights live in the e_i coordinates; throughout the library a "weight"
// argument means lambda + rho, not lambda itself.
using Weight = std::vector<Rational>;

// Maximal parabolic subalgebra: every simple root is kept except the p-th.
struct ParabolicChoice {
  LieAlgebra algebra;
  int p;

  ParabolicChoice(LieAlgebra algebra, int p);

  bool operator==(const ParabolicChoice&) const = default;
};

enum class RootKind { difference, sum, single, twice };  // e_i-e_j, e_i+e_j, e_i, 2e_i

struct Root {
  RootKind kind;
  int i = 0;
  int j = 0;  // only meaningful for difference and sum

  bool operator==(const Root&) const = default;
};

// Realization of the type D weight attached to p = n-1.  `half_ones` uses
// (1/2, ..., 1/2), making p = n-1 and p = n literally interchangeable;
// `standard` negates the last coordinate.  GK dimensions and reducibility
// verdicts agree between the two (checked by a property test), so the
// symmetric choice is the default.  Other (type, p) ignore the flag.
enum class DRealization { half_ones, standard };

Weight rho(const LieAlgebra& algebra);

Weight fundamental_weight(const ParabolicChoice& choice,
                          DRealization realization = DRealization::half_ones);

// lambda + rho for lambda = z * fundamental_weight(choice).
Weight scalar_weight(const ParabolicChoice& choice, const Rational& z,
                     DRealization realization = DRealization::half_ones);

std::vector<Root> positive_roots(const LieAlgebra& algebra);

Weight root_coordinates(const LieAlgebra& algebra, const Root& root);

long dim_nilradical(const ParabolicChoice& choice);

// Same number obtained by counting the positive roots whose expansion over
// the simple roots uses the p-th one.  Kept separate from the closed forms
// above so the two can cross-check each other.
long dim_nilradical_enumerated(const ParabolicChoice& choice);

}  // namespace gkverma
