#include "gkverma/closedform.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkverma {

namespace {

const Rational kHalf(1, 2);

long to_long(const Rational& value) { return numerator(value).convert_to<long>(); }

}  // namespace

bool LatticeComponent::contains(const Rational& z) const {
  return z >= base && is_integer((z - base) / step);
}

bool ReducibilitySet::contains(const Rational& z) const {
  return std::any_of(components.begin(), components.end(),
                     [&z](const LatticeComponent& c) { return c.contains(z); });
}

std::string_view lattice_tag_name(LatticeTag tag) {
  switch (tag) {
    case LatticeTag::integer: return "Z";
    case LatticeTag::half_odd: return "1/2+Z";
    case LatticeTag::half_step: return "1/2Z";
  }
  throw std::logic_error("bad LatticeTag");
}

bool is_reducible(const ParabolicChoice& choice, const Rational& z) {
  return gkdim_scalar(choice, z) < dim_nilradical(choice);
}

namespace {

ReducibilitySet normalized(std::vector<LatticeComponent> components) {
  std::sort(components.begin(), components.end(),
            [](const LatticeComponent& a, const LatticeComponent& b) { return a.base < b.base; });
  if (components.size() == 2 && components[0].step == 1 && components[1].step == 1 &&
      components[1].base - components[0].base == kHalf)
    components = {{components[0].base, kHalf}};
  std::vector<LatticeComponent> kept;
  for (const LatticeComponent& c : components) {
    const bool swallowed =
        std::any_of(kept.begin(), kept.end(), [&c](const LatticeComponent& k) {
          return k.contains(c.base) && (k.step == c.step || k.step == kHalf);
        });
    if (!swallowed) kept.push_back(c);
  }
  return {std::move(kept)};
}

}  // namespace

ReducibilitySet reducibility_set(const ParabolicChoice& choice) {
  const int n = choice.algebra.n;
  const int p = choice.p;
  const Rational one(1);
  switch (choice.algebra.type) {
    case LieType::A:
      return normalized({{Rational(1 - std::min(p, n - p)), one}});
    case LieType::B:
      if (p == 1) return normalized({{Rational(0), one}, {Rational(3 - 2 * n, 2), one}});
      if (p < n) {
        const bool shifted = p % 2 == 1 && 3 * p >= 2 * n + 1;
        return normalized({{Rational(p + 2 - 2 * n - (shifted ? 1 : 0), 2), kHalf}});
      }
      return normalized({{Rational(n % 2 == 0 ? 2 - n : 1 - n), one}});
    case LieType::C:
      if (p == 1) return normalized({{Rational(0), one}});
      if (p < n) {
        const bool shifted = p % 2 == 0 && 3 * p <= 2 * n;
        return normalized({{Rational(p + 1 - 2 * n - (shifted ? 1 : 0), 2), kHalf}});
      }
      return normalized({{Rational(1 - n, 2), kHalf}});
    case LieType::D:
      if (p == 1) return normalized({{Rational(2 - n), one}});
      if (p <= n - 2) {
        const bool shifted = p % 2 == 0 && 3 * p >= 2 * n;
        return normalized({{Rational(p + 3 - 2 * n - (shifted ? 1 : 0), 2), kHalf}});
      }
      return normalized({{Rational(n % 2 == 0 ? 2 - n : 3 - n), one}});
  }
  throw std::logic_error("bad LieType");
}

namespace {

LatticeTag tag_for(const LatticeComponent& component) {
  if (component.step == kHalf) return LatticeTag::half_step;
  return is_integer(component.base) ? LatticeTag::integer : LatticeTag::half_odd;
}

void sort_points(std::vector<FirstReduciblePoint>& points) {
  std::sort(points.begin(), points.end(),
            [](const FirstReduciblePoint& a, const FirstReduciblePoint& b) { return a.z < b.z; });
}

Rational ceil_rational(const Rational& value) { return Rational(-floor_rational(-value)); }

}  // namespace

std::vector<FirstReduciblePoint> first_reducible_point(const ParabolicChoice& choice) {
  std::vector<FirstReduciblePoint> points;
  for (const LatticeComponent& c : reducibility_set(choice).components)
    points.push_back({tag_for(c), c.base});
  sort_points(points);
  return points;
}

std::vector<FirstReduciblePoint> first_reducible_point_searched(const ParabolicChoice& choice,
                                                                const Rational& z_floor) {
  // Reducible z recur with period 1 once they start, and every z in Z>=0 is
  // reducible, so scanning up to n + 2 settles both lattices: the integer
  // lattice always hits by then, and a silent half-odd lattice is empty.
  const Rational ceiling(choice.algebra.n + 2);
  const auto scan = [&](Rational z) -> std::optional<Rational> {
    for (; z <= ceiling; z += 1)
      if (is_reducible(choice, z)) return z;
    return std::nullopt;
  };
  const std::optional<Rational> on_int = scan(ceil_rational(z_floor));
  const std::optional<Rational> on_half = scan(ceil_rational(z_floor - kHalf) + kHalf);
  std::vector<FirstReduciblePoint> points;
  if (on_int && on_half && abs(*on_int - *on_half) == kHalf) {
    points.push_back({LatticeTag::half_step, std::min(*on_int, *on_half)});
  } else {
    if (on_int) points.push_back({LatticeTag::integer, *on_int});
    if (on_half) points.push_back({LatticeTag::half_odd, *on_half});
  }
  sort_points(points);
  return points;
}

namespace {

// The tables below transcribe piecewise closed forms whose rows are keyed by
// the substitutions z = -k and z = p-n-k (integer z) or z = -k-1/2 and
// z = p-n-k-1/2 (half-odd z).  Rows are checked in print order; every (type,
// n, p) leaves gaps only below the generic threshold, where the generic
// value applies.  Adjacent rows agree wherever their k-ranges touch.

long table_A(long n, long p, const Rational& z) {
  const long generic = p * (n - p);
  if (!is_integer(z)) return generic;
  const long zz = to_long(z);
  if (zz >= 0) return 0;
  const long k = -zz;
  if (k <= std::min(p, n - p) - 1) return k * (n - k);
  return generic;
}

long table_B(long n, long p, const Rational& z) {
  if (p == 1) {
    if (is_integer(z)) return to_long(z) >= 0 ? 0 : 2 * n - 1;
    if (is_half_odd(z) && z >= Rational(3 - 2 * n, 2)) return 2 * n - 2;
    return 2 * n - 1;
  }
  if (p == n) {
    const long generic = n * (n + 1) / 2;
    if (!is_integer(z)) return generic;
    const long zz = to_long(z);
    if (zz >= 0) return 0;
    const long k = (-zz + 1) / 2;  // z = -2k and z = -2k+1 share a value
    if (k <= (n % 2 == 0 ? n - 2 : n - 1) / 2) return k * (2 * n - 2 * k + 1);
    return generic;
  }
  const long generic = p * (4 * n - 3 * p + 1) / 2;
  const long plateau = 2 * n * p - 2 * p * p;
  if (is_integer(z)) {
    const long zz = to_long(z);
    if (zz >= 0) return 0;
    const long k1 = -zz;        // rows written z = -k
    const long k2 = p - n - zz; // rows written z = p-n-k
    // On the rows keyed z = p-n-k the additive term is min(n-p, p-k), not a
    // bare n: the minus-extension has value-multiplicity profile
    // (3^{2t1}, 2^{2(t2-t1)}, 1^{2(t3-t2)}) with (t1,t2,t3) = sort(k, p-k, n-p),
    // whose odd-box weight gives n^2 - t1^2 - t2^2 - t3^2 + t2, and t2 here is
    // min(n-p, p-k).  A bare n would exceed dim(u) at k = n-p and break the
    // join with the adjacent rows keyed by +k and +(p-k).
    if (p % 2 == 1 && 3 * p >= 2 * n + 1) {
      if (k1 <= n - p) return k1 * (2 * n - 2 * k1 + 1);
      if (k2 <= n - p) return plateau + 2 * k2 * (p - k2) + std::min(n - p, p - k2);
      if (2 * k2 <= p - 1) return plateau + 2 * k2 * (p - k2) + k2;
    } else if (p % 2 == 0) {
      if (k1 <= std::min(p, n - p)) return k1 * (2 * n - 2 * k1 + 1);
      if (k1 <= n - p) return plateau + p;
      if (k2 <= n - p && 2 * k2 < p) return plateau + 2 * k2 * (p - k2) + std::min(n - p, p - k2);
      if (2 * k2 <= p - 2) return plateau + 2 * k2 * (p - k2) + k2;
    } else {
      if (k1 <= std::min(p, n - p)) return k1 * (2 * n - 2 * k1 + 1);
      if (k1 <= n - p) return plateau + p;
      if (k2 <= 2 * p - n) return plateau + 2 * k2 * (p - k2) + std::min(n - p, p - k2);
      if (2 * k2 <= p - 3) return plateau + (2 * k2 + 1) * (p - k2);
    }
    return generic;
  }
  if (is_half_odd(z)) {
    const long k1 = to_long(-z - kHalf);  // z = -k-1/2
    if (k1 < n - p) return plateau;
    const long k2 = to_long(Rational(p - n) - kHalf - z);  // z = p-n-k-1/2
    if (2 * k2 <= (p % 2 == 1 ? p - 3 : p - 4))
      return plateau + k2 * (2 * p - 2 * k2 - 3) + 2 * p - 1;
  }
  return generic;
}

long table_D(long n, long p, const Rational& z) {
  if (p == 1) {
    if (!is_integer(z)) return 2 * n - 2;
    const long zz = to_long(z);
    if (zz >= 0) return 0;
    if (zz >= 2 - n) return 2 * n - 3;
    return 2 * n - 2;
  }
  if (p >= n - 1) {
    const long generic = n * (n - 1) / 2;
    if (!is_integer(z)) return generic;
    const long zz = to_long(z);
    if (zz >= 0) return 0;
    const long k = (-zz + 1) / 2;  // z = -2k and z = -2k+1 share a value
    if (k <= (n % 2 == 0 ? n - 2 : n - 3) / 2) return k * (2 * n - 2 * k - 1);
    return generic;
  }
  const long generic = p * (4 * n - 3 * p - 1) / 2;
  const long plateau = 2 * n * p - 2 * p * p;
  if (is_integer(z)) {
    const long zz = to_long(z);
    if (zz >= 0) return 0;
    const long k1 = -zz;        // rows written z = -k
    const long k2 = p - n - zz; // rows written z = p-n-k
    if (p % 2 == 0 && 3 * p >= 2 * n) {
      if (k1 < n - p) return k1 * (2 * n - 2 * k1 - 1);
      if (k2 < n - p) return plateau + k2 * (2 * p - 2 * k2 - 2) + n - p - 1;
      if (2 * k2 < p) return plateau + k2 * (2 * p - 2 * k2 - 1);
    } else if (p % 2 == 1) {
      if (k1 < n - p && k1 <= p) return k1 * (2 * n - 2 * k1 - 1);
      if (k1 < n - p) return plateau - p;
      if (k2 <= 2 * p - n && k2 < n - p) return plateau + k2 * (2 * p - 2 * k2 - 2) + n - p - 1;
      if (k2 >= std::max(0L, 2 * p - n) && 2 * k2 <= p - 3)
        return plateau + k2 * (2 * p - 2 * k2 - 3) + p - 1;
      if (k2 >= n - p && 2 * k2 <= p - 3) return plateau + k2 * (2 * p - 2 * k2 - 1);
    } else {
      if (k1 < n - p && k1 < p) return k1 * (2 * n - 2 * k1 - 1);
      if (k1 < n - p) return plateau - p;
      if (k2 <= 2 * p - n) return plateau + k2 * (2 * p - 2 * k2 - 2) + n - p - 1;
      if (k2 >= std::max(0L, 2 * p - n) && 2 * k2 <= p - 3)
        return plateau + k2 * (2 * p - 2 * k2 - 3) + p - 1;
    }
    return generic;
  }
  if (is_half_odd(z)) {
    const long k1 = to_long(kHalf - z);  // z = -k+1/2
    if (k1 <= n - p) return plateau;
    const long k2 = to_long(Rational(p - n) - kHalf - z);  // z = p-n-k-1/2
    if (2 * k2 <= (p % 2 == 0 ? p - 4 : p - 5))
      return plateau + k2 * (2 * p - 2 * k2 - 5) + 2 * p - 3;
  }
  return generic;
}

}  // namespace

std::optional<long> gkdim_closed_form(const ParabolicChoice& choice, const Rational& z) {
  const long n = choice.algebra.n;
  const long p = choice.p;
  switch (choice.algebra.type) {
    case LieType::A: return table_A(n, p, z);
    case LieType::B: return table_B(n, p, z);
    case LieType::C: return std::nullopt;
    case LieType::D: return table_D(n, p, z);
  }
  throw std::logic_error("bad LieType");
}

namespace {

std::string ordinal(long k) {
  const long tail = k % 100;
  const char* suffix = "th";
  if (tail < 11 || tail > 13) {
    switch (k % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(k) + suffix;
}

}  // namespace

std::optional<std::string> wallach_annotation(const ParabolicChoice& choice, const Rational& z) {
  const long n = choice.algebra.n;
  const long p = choice.p;
  switch (choice.algebra.type) {
    case LieType::A: {
      if (!is_integer(z) || z >= 0) return std::nullopt;
      const long k = -to_long(z);
      if (k > std::min(p, n - p) - 1) return std::nullopt;
      return ordinal(k) + " Wallach rep of SU(" + std::to_string(p) + "," + std::to_string(n - p) +
             ")";
    }
    case LieType::B:
      if (p == 1 && z == Rational(3 - 2 * n, 2))
        return "Wallach rep of SO(2," + std::to_string(2 * n - 1) + ")";
      return std::nullopt;
    case LieType::C: {
      if (p != n) return std::nullopt;
      const Rational doubled = -2 * z;  // z = -k/2
      if (!is_integer(doubled)) return std::nullopt;
      const long k = to_long(doubled);
      if (k < 1 || k > n - 1) return std::nullopt;
      return ordinal(k) + " Wallach rep of Sp(" + std::to_string(n) + ",R)";
    }
    case LieType::D: {
      if (p == 1)
        return z == Rational(2 - n)
                   ? std::optional<std::string>("Wallach rep of SO(2," + std::to_string(2 * n - 2) + ")")
                   : std::nullopt;
      if (p != n || !is_integer(z) || z >= 0) return std::nullopt;
      const long zz = to_long(z);
      if (zz % 2 != 0) return std::nullopt;
      const long k = -zz / 2;
      if (k < 1 || k > n / 2 - 1) return std::nullopt;
      return ordinal(k) + " Wallach rep of SO*(" + std::to_string(2 * n) + ")";
    }
  }
  throw std::logic_error("bad LieType");
}

}  // namespace gkverma
