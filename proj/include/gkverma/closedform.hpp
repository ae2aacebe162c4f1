#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkverma/gkdim.hpp"

namespace gkverma {

// Half-lattice of reducible parameters: z lies in base + step*Z>=0.
struct LatticeComponent {
  Rational base;
  Rational step;  // 1 or 1/2

  bool contains(const Rational& z) const;

  bool operator==(const LatticeComponent&) const = default;
};

struct ReducibilitySet {
  std::vector<LatticeComponent> components;

  bool contains(const Rational& z) const;
};

enum class LatticeTag { integer, half_odd, half_step };  // Z, 1/2+Z, (1/2)Z

std::string_view lattice_tag_name(LatticeTag tag);

struct FirstReduciblePoint {
  LatticeTag lattice;
  Rational z;

  bool operator==(const FirstReduciblePoint&) const = default;
};

// Algorithmic criterion: the scalar-type module at z is reducible exactly
// when the GK dimension falls below dim(u).
bool is_reducible(const ParabolicChoice& choice, const Rational& z);

// Closed-form description of {z : reducible}.  Two step-1 progressions
// whose minima differ by 1/2 are normalized into one step-1/2 progression.
ReducibilitySet reducibility_set(const ParabolicChoice& choice);

// Minimum of each reducibility_set component, tagged by its lattice.
std::vector<FirstReduciblePoint> first_reducible_point(const ParabolicChoice& choice);

// Formula-free counterpart: scans the Z and 1/2+Z lattices upward from
// z_floor using is_reducible.  A lattice with no hit up to a safe ceiling
// is reported absent; two hits 1/2 apart merge into one half-step point.
std::vector<FirstReduciblePoint> first_reducible_point_searched(const ParabolicChoice& choice,
                                                                const Rational& z_floor);

// Piecewise closed form of gkdim_scalar for types A, B and D.  Absent for
// type C, which is cross-checked through spot values instead.
std::optional<long> gkdim_closed_form(const ParabolicChoice& choice, const Rational& z);

// Label for the distinguished unitary modules that appear at specific
// negative z of Hermitian pairs.
std::optional<std::string> wallach_annotation(const ParabolicChoice& choice, const Rational& z);

}  // namespace gkverma
