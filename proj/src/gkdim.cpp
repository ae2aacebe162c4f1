#include "gkverma/gkdim.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkverma/tableaux.hpp"

namespace gkverma {

namespace {

// Fractional part in [0, 1).
Rational frac(const Rational& value) { return value - Rational(floor_rational(value)); }

void check_length(const LieAlgebra& algebra, const Weight& weight) {
  if (static_cast<int>(weight.size()) != algebra.coord_length())
    throw std::domain_error("weight must have " + std::to_string(algebra.coord_length()) +
                            " coordinates, got " + std::to_string(weight.size()));
}

}  // namespace

std::vector<Rational> minus_extension(std::span<const Rational> x) {
  std::vector<Rational> out;
  out.reserve(2 * x.size());
  out.assign(x.begin(), x.end());
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  return out;
}

ClassDecomposition decompose_classes(const LieAlgebra& algebra, const Weight& weight) {
  check_length(algebra, weight);
  ClassDecomposition classes;
  std::vector<Rational> keys;
  std::vector<std::vector<Rational>> groups;
  for (const Rational& value : weight) {
    Rational key = frac(value);
    if (algebra.type != LieType::A) key = std::min(key, Rational(1 - key));
    const auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      groups.push_back({value});
    } else {
      groups[static_cast<size_t>(it - keys.begin())].push_back(value);
    }
  }
  for (size_t g = 0; g < groups.size(); ++g) {
    if (algebra.type != LieType::A && keys[g] == 0) {
      classes.class_int = std::move(groups[g]);
    } else if (algebra.type != LieType::A && keys[g] == Rational(1, 2)) {
      classes.class_half = std::move(groups[g]);
    } else {
      classes.others.push_back(std::move(groups[g]));
    }
  }
  return classes;
}

std::vector<Rational> tilde_normalize(std::span<const Rational> x) {
  if (x.empty()) return {};
  std::vector<Rational> block, complement;
  for (const Rational& value : x) {
    if (is_integer(value - x.front())) {
      block.push_back(value);
    } else if (is_integer(value + x.front())) {
      complement.push_back(value);
    } else {
      throw std::domain_error("entries lie in different congruence classes");
    }
  }
  for (auto it = complement.rbegin(); it != complement.rend(); ++it) block.push_back(-*it);
  return block;
}

long gkdim_general(const LieAlgebra& algebra, const Weight& weight) {
  check_length(algebra, weight);
  const ClassDecomposition classes = decompose_classes(algebra, weight);
  long dimension = algebra.positive_root_count();
  if (algebra.type == LieType::A) {
    for (const auto& cls : classes.others) dimension -= f_a(cls);
    return dimension;
  }
  // B discards the odd boxes of both special classes, D the even ones; C
  // sits in between, treating the integral class like B and the half-odd
  // class like D.
  const auto special = [&](const std::vector<Rational>& cls, bool half_class) {
    const std::vector<Rational> extended = minus_extension(cls);
    if (algebra.type == LieType::D || (algebra.type == LieType::C && half_class))
      return g_ev(extended);
    return g_odd(extended);
  };
  if (classes.class_int) dimension -= special(*classes.class_int, false);
  if (classes.class_half) dimension -= special(*classes.class_half, true);
  for (const auto& cls : classes.others) dimension -= f_a(tilde_normalize(cls));
  return dimension;
}

long gkdim_integral(const LieAlgebra& algebra, const Weight& weight) {
  check_length(algebra, weight);
  if (algebra.type == LieType::A) {
    for (const Rational& value : weight)
      if (!is_integer(value - weight.front()))
        throw std::domain_error("type A needs pairwise integral differences");
    return algebra.positive_root_count() - f_a(weight);
  }
  const bool all_int = std::all_of(weight.begin(), weight.end(),
                                   [](const Rational& v) { return is_integer(v); });
  const bool all_half = !all_int && std::all_of(weight.begin(), weight.end(),
                                                [](const Rational& v) { return is_half_odd(v); });
  if (!all_int && !all_half)
    throw std::domain_error("weight entries must be all integral or all half-odd");
  const std::vector<Rational> extended = minus_extension(weight);
  const bool even_boxes = algebra.type == LieType::D || (algebra.type == LieType::C && all_half);
  return algebra.positive_root_count() - (even_boxes ? g_ev(extended) : g_odd(extended));
}

long gkdim_scalar(const ParabolicChoice& choice, const Rational& z, DRealization realization) {
  return gkdim_general(choice.algebra, scalar_weight(choice, z, realization));
}

}  // namespace gkverma
