#include "gkverma/rootdata.hpp"

#include <stdexcept>
#include <string>

namespace gkverma {

char lie_type_letter(LieType type) {
  switch (type) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  throw std::logic_error("bad LieType");
}

LieType lie_type_from_letter(char letter) {
  switch (letter) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    default: throw std::invalid_argument("Lie type must be one of A, B, C, D");
  }
}

LieAlgebra::LieAlgebra(LieType type, int n) : type(type), n(n) {
  const int floor = type == LieType::D ? 3 : 2;
  if (n < floor)
    throw std::domain_error(std::string("type ") + lie_type_letter(type) + " needs n >= " +
                            std::to_string(floor) + ", got " + std::to_string(n));
}

long LieAlgebra::positive_root_count() const {
  const long m = n;
  switch (type) {
    case LieType::A: return m * (m - 1) / 2;
    case LieType::B:
    case LieType::C: return m * m;
    case LieType::D: return m * (m - 1);
  }
  throw std::logic_error("bad LieType");
}

ParabolicChoice::ParabolicChoice(LieAlgebra algebra, int p) : algebra(algebra), p(p) {
  if (p < 1 || p > algebra.rank())
    throw std::domain_error("p must be between 1 and " + std::to_string(algebra.rank()) +
                            " for this algebra, got " + std::to_string(p));
}

Weight rho(const LieAlgebra& algebra) {
  const int n = algebra.n;
  Weight w(n);
  for (int i = 0; i < n; ++i) {
    switch (algebra.type) {
      case LieType::A: w[i] = Rational(n - 1 - 2 * i, 2); break;
      case LieType::B: w[i] = Rational(2 * (n - i) - 1, 2); break;
      case LieType::C: w[i] = n - i; break;
      case LieType::D: w[i] = n - 1 - i; break;
    }
  }
  return w;
}

Weight fundamental_weight(const ParabolicChoice& choice, DRealization realization) {
  const int n = choice.algebra.n;
  const int p = choice.p;
  Weight w(n);
  const auto ones_then_zeros = [&] {
    for (int i = 0; i < n; ++i) w[i] = i < p ? 1 : 0;
  };
  switch (choice.algebra.type) {
    case LieType::A:
      // Projection of e_1 + ... + e_p onto the traceless subspace.
      for (int i = 0; i < n; ++i) w[i] = i < p ? Rational(n - p, n) : Rational(-p, n);
      break;
    case LieType::B:
      if (p == n) {
        w.assign(n, Rational(1, 2));
      } else {
        ones_then_zeros();
      }
      break;
    case LieType::C:
      // The weight dual to the long simple root 2e_n is e_1 + ... + e_n, so
      // p = n gives all ones here, not halves.
      ones_then_zeros();
      break;
    case LieType::D:
      if (p <= n - 2) {
        ones_then_zeros();
      } else {
        w.assign(n, Rational(1, 2));
        if (p == n - 1 && realization == DRealization::standard) w[n - 1] = Rational(-1, 2);
      }
      break;
  }
  return w;
}

Weight scalar_weight(const ParabolicChoice& choice, const Rational& z, DRealization realization) {
  Weight w = fundamental_weight(choice, realization);
  const Weight half_sum = rho(choice.algebra);
  for (size_t i = 0; i < w.size(); ++i) w[i] = z * w[i] + half_sum[i];
  return w;
}

std::vector<Root> positive_roots(const LieAlgebra& algebra) {
  const int n = algebra.n;
  std::vector<Root> roots;
  roots.reserve(static_cast<size_t>(algebra.positive_root_count()));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({RootKind::difference, i, j});
  if (algebra.type != LieType::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) roots.push_back({RootKind::sum, i, j});
  }
  if (algebra.type == LieType::B)
    for (int i = 1; i <= n; ++i) roots.push_back({RootKind::single, i});
  if (algebra.type == LieType::C)
    for (int i = 1; i <= n; ++i) roots.push_back({RootKind::twice, i});
  return roots;
}

Weight root_coordinates(const LieAlgebra& algebra, const Root& root) {
  const int n = algebra.n;
  const bool two_index = root.kind == RootKind::difference || root.kind == RootKind::sum;
  if (root.i < 1 || root.i > n || (two_index && (root.j <= root.i || root.j > n)))
    throw std::domain_error("root indices out of range");
  if ((root.kind == RootKind::single && algebra.type != LieType::B) ||
      (root.kind == RootKind::twice && algebra.type != LieType::C) ||
      (root.kind == RootKind::sum && algebra.type == LieType::A))
    throw std::domain_error("root kind not present in this type");
  Weight w(n, Rational(0));
  switch (root.kind) {
    case RootKind::difference:
      w[root.i - 1] = 1;
      w[root.j - 1] = -1;
      break;
    case RootKind::sum:
      w[root.i - 1] = 1;
      w[root.j - 1] = 1;
      break;
    case RootKind::single: w[root.i - 1] = 1; break;
    case RootKind::twice: w[root.i - 1] = 2; break;
  }
  return w;
}

long dim_nilradical(const ParabolicChoice& choice) {
  const long n = choice.algebra.n;
  const long p = choice.p;
  switch (choice.algebra.type) {
    case LieType::A: return p * (n - p);
    case LieType::B:
    case LieType::C: return p * (4 * n - 3 * p + 1) / 2;
    case LieType::D:
      // p = n-1 and p = n cut off the two fork legs, leaving the same
      // sl(n)-shaped Levi factor either way, so both nilradicals have
      // n(n-1)/2 roots; the quadratic below is only valid up to p = n-2.
      if (p >= n - 1) return n * (n - 1) / 2;
      return p * (4 * n - 3 * p - 1) / 2;
  }
  throw std::logic_error("bad LieType");
}

namespace {

// Coefficient of the p-th simple root in the expansion of `root`.  Simple
// roots are a_k = e_k - e_{k+1} for k < n together with a_n = e_n (B),
// a_n = 2e_n (C) or a_n = e_{n-1} + e_n (D).
int alpha_coefficient(const LieAlgebra& algebra, const Root& root, int p) {
  const int n = algebra.n;
  const int i = root.i;
  const int j = root.j;
  switch (root.kind) {
    case RootKind::difference:
      // e_i - e_j = a_i + ... + a_{j-1}
      return i <= p && p < j ? 1 : 0;
    case RootKind::single:
      // e_i = a_i + ... + a_n
      return p >= i ? 1 : 0;
    case RootKind::twice:
      // 2e_i = 2a_i + ... + 2a_{n-1} + a_n
      if (p == n) return 1;
      return p >= i ? 2 : 0;
    case RootKind::sum:
      if (p < i && algebra.type != LieType::D) return 0;
      switch (algebra.type) {
        case LieType::B:
          // e_i + e_j = a_i + ... + a_{j-1} + 2a_j + ... + 2a_n
          return p < j ? 1 : 2;
        case LieType::C:
          // e_i + e_j = a_i + ... + a_{j-1} + 2a_j + ... + 2a_{n-1} + a_n
          if (p == n) return 1;
          return p < j ? 1 : 2;
        case LieType::D:
          if (j == n) {
            // e_i + e_n = a_i + ... + a_{n-2} + a_n
            if (p == n) return 1;
            if (p == n - 1) return 0;
            return p >= i ? 1 : 0;
          }
          // e_i + e_j = a_i + ... + a_{j-1} + 2a_j + ... + 2a_{n-2} + a_{n-1} + a_n
          if (p >= n - 1) return 1;
          if (p < i) return 0;
          return p < j ? 1 : 2;
        default: break;
      }
      break;
  }
  throw std::logic_error("bad Root");
}

}  // namespace

long dim_nilradical_enumerated(const ParabolicChoice& choice) {
  long count = 0;
  for (const Root& root : positive_roots(choice.algebra))
    if (alpha_coefficient(choice.algebra, root, choice.p) != 0) ++count;
  return count;
}

}  // namespace gkverma
