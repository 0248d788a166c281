#pragma once

#include <span>
#include <vector>

#include "cutcert/intlinalg.hpp"
#include "cutcert/magnus.hpp"
#include "cutcert/magnus_series.hpp"
#include "cutcert/word.hpp"

namespace cutcert {

/// Jacobi relation in F/F'':
///   [x_i,[x_j,x_k]] [x_j,[x_k,x_i]] [x_k,[x_i,x_j]] = 1 mod F''.
/// Indices are 1-based and must satisfy 1 <= i < j < k <= m.
inline bool verify_jacobi(int i, int j, int k, int m) {
  if (!(1 <= i && i < j && j < k && k <= m))
    throw Error(Errc::invalid_argument, "verify_jacobi requires 1 <= i < j < k <= m");
  Alphabet a = Alphabet::indexed(m);
  Word xi = Word::generator(a, i - 1);
  Word xj = Word::generator(a, j - 1);
  Word xk = Word::generator(a, k - 1);
  Word product = commutator(xi, commutator(xj, xk)) * commutator(xj, commutator(xk, xi)) *
                 commutator(xk, commutator(xi, xj));
  return in_second_derived(product);
}

/// Shape of N/N' as a Z[t^{+-1}]-module, where N is the kernel of the
/// character on a free nilpotent group.
struct NilpotentModuleInfo {
  int additive_rank;
  int annihilator_exponent;  // smallest e with J^e (N/N') = 0
  bool cyclic;

  friend bool operator==(const NilpotentModuleInfo&, const NilpotentModuleInfo&) = default;
};

namespace detail {

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// Rank of the degree-n component of the free Lie ring on q generators.
inline int witt_dimension(int q, int n) {
  long long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long power = 1;
    for (int i = 0; i < n / d; ++i) power *= q;
    sum += mobius(d) * power;
  }
  return static_cast<int>(sum / n);
}

/// Degree-graded lattice of the free Lie ring inside the tensor algebra,
/// spanned by left-normed brackets of the generators.
inline IntLattice lie_component_lattice(int arity, int n) {
  const int D = n;
  auto symbol = [&](int i) {
    return MagnusSeries::generator(arity, D, i) - MagnusSeries::one(arity, D);
  };
  size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= static_cast<size_t>(arity);
  IntLattice lat(dim);
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  while (true) {
    MagnusSeries acc = symbol(tuple[static_cast<size_t>(n - 1)]);
    for (int pos = n - 2; pos >= 0; --pos) {
      MagnusSeries s = symbol(tuple[static_cast<size_t>(pos)]);
      acc = s * acc - acc * s;
    }
    lat.add(acc.homogeneous_component(n));
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == arity - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return lat;
}

}  // namespace detail

/// Computes the additive rank, annihilator exponent, and cyclicity of N/N'
/// for the free nilpotent group of the given class on two generators x, y,
/// with N the kernel of x -> t, y -> 1. Everything is decided exactly in the
/// truncated Magnus expansion:
///  - N is the normal closure of y, so N/N' is generated over Z[t^{+-1}] by
///    [y], and (t-1)^j [y] is the class of the left-normed commutator
///    c_j = [x,[x,...,[x,y]]];
///  - N' is generated by commutators of the conjugates x^s y x^{-s}, which in
///    class <= 3 all live in the top central layer, so it is the integer
///    lattice spanned by their top-degree coefficients;
///  - ranks and memberships then reduce to exact integer linear algebra on
///    graded coefficient lattices.
/// Supported: rank 2, character (1,0), class 1..3.
inline NilpotentModuleInfo free_nilpotent_alexander(int rank, int cls,
                                                    std::span<const long long> phi) {
  if (rank != 2) throw Error(Errc::unsupported, "free_nilpotent_alexander: rank must be 2");
  if (cls < 1 || cls > 3)
    throw Error(Errc::unsupported, "free_nilpotent_alexander: class must be 1, 2, or 3");
  if (phi.size() != 2 || phi[0] != 1 || phi[1] != 0)
    throw Error(Errc::unsupported, "free_nilpotent_alexander: character must be (1, 0)");

  const int D = cls;
  Alphabet a(std::vector<std::string>{"x", "y"});
  Word x = Word::generator(a, 0);
  Word y = Word::generator(a, 1);

  // c_j = (t-1)^j [y], as words.
  std::vector<Word> c;
  c.push_back(y);
  for (int j = 1; j <= cls; ++j) c.push_back(commutator(x, c.back()));

  // Generators of N' = [N, N]: commutators of conjugates of y by powers of x.
  size_t top_dim = 1;
  for (int i = 0; i < cls; ++i) top_dim *= 2;
  IntLattice nprime(top_dim);
  for (int s = -cls; s <= cls; ++s) {
    for (int r = s + 1; r <= cls; ++r) {
      Word ys = conjugate(y, x.pow(s));
      Word yr = conjugate(y, x.pow(r));
      MagnusSeries g = magnus_series(commutator(ys, yr), D);
      if (g.is_one()) continue;
      if (!g.vanishes_below_degree(cls))
        throw Error(Errc::unsupported,
                    "free_nilpotent_alexander: derived subgroup leaves the top central layer");
      nprime.add(g.homogeneous_component(cls));
    }
  }

  // Additive rank = Hirsch(N) - Hirsch(N').
  int hirsch_n = 1;
  for (int n = 2; n <= cls; ++n) hirsch_n += detail::witt_dimension(2, n);
  const int additive_rank = hirsch_n - nprime.rank();

  // Annihilator: smallest e with [c_e] = 0 in N/N'. c_cls lies in F_{cls+1},
  // so the loop always resolves by e = cls.
  int annihilator = 0;
  for (int e = 1; e <= cls; ++e) {
    MagnusSeries s = magnus_series(c[static_cast<size_t>(e)], D);
    if (s.is_one() ||
        (s.vanishes_below_degree(cls) && nprime.contains(s.homogeneous_component(cls)))) {
      annihilator = e;
      break;
    }
  }
  if (annihilator == 0)
    throw Error(Errc::check_failed, "free_nilpotent_alexander: annihilator not found");

  // Cyclic over Z[t^{+-1}] iff the integer span of the c_j together with N'
  // fills every graded layer of N.
  bool cyclic = true;
  for (int n = 2; n <= cls && cyclic; ++n) {
    IntLattice target = detail::lie_component_lattice(2, n);
    IntLattice have(target.dimension());
    have.add(magnus_series(c[static_cast<size_t>(n - 1)], n).homogeneous_component(n));
    if (n == cls) {
      for (int s = -cls; s <= cls; ++s)
        for (int r = s + 1; r <= cls; ++r) {
          Word ys = conjugate(y, x.pow(s));
          Word yr = conjugate(y, x.pow(r));
          MagnusSeries g = magnus_series(commutator(ys, yr), n);
          if (!g.is_one()) have.add(g.homogeneous_component(n));
        }
    }
    cyclic = (have == target);
  }

  return {additive_rank, annihilator, cyclic};
}

}  // namespace cutcert
