#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutcert/alexander.hpp"
#include "cutcert/intlinalg.hpp"
#include "cutcert/jet.hpp"
#include "cutcert/magnus.hpp"
#include "cutcert/nilpotent.hpp"
#include "cutcert/poly_matrix.hpp"
#include "cutcert/presentation.hpp"

namespace cutcert::harvey {

/// Family parameters: beta_1 = m, a primitive exponent vector n, and a
/// distinguished index N (1-based) with n_N != 0.
struct Params {
  int m = 0;
  std::vector<long long> n;
  int N = 1;

  long long n_N() const { return n[static_cast<size_t>(N - 1)]; }

  static Params validated(int m, std::vector<long long> n, std::optional<int> N = std::nullopt) {
    if (m < 1) throw Error(Errc::invalid_argument, "m must be >= 1");
    if (n.size() != static_cast<size_t>(m))
      throw Error(Errc::invalid_argument, "n must have length m");
    if (!is_primitive_vector(n))
      throw Error(Errc::non_primitive_phi, "n must be primitive (gcd 1)");
    int idx;
    if (N) {
      idx = *N;
      if (idx < 1 || idx > m) throw Error(Errc::invalid_argument, "N out of range");
      if (n[static_cast<size_t>(idx - 1)] == 0)
        throw Error(Errc::invalid_argument, "n_N must be nonzero");
    } else {
      idx = 0;
      for (int i = 1; i <= m; ++i)
        if (n[static_cast<size_t>(i - 1)] != 0) {
          idx = i;
          break;
        }
      if (idx == 0) throw Error(Errc::invalid_argument, "n must have a nonzero entry");
    }
    return Params{m, std::move(n), idx};
  }
};

/// Dictionary ordering of the pairs (i,j), 1 <= i < j <= m: linear position
/// of each pair and its inverse.
class PairTable {
 public:
  explicit PairTable(int m) : m_(m) {
    if (m < 1) throw Error(Errc::invalid_argument, "m must be >= 1");
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) pairs_.emplace_back(i, j);
  }

  int m() const { return m_; }
  int count() const { return static_cast<int>(pairs_.size()); }

  int position(int i, int j) const {
    if (!(1 <= i && i < j && j <= m_))
      throw Error(Errc::invalid_argument, "pair indices must satisfy 1 <= i < j <= m");
    return offset(i) + (j - i - 1);
  }

  std::pair<int, int> pair_at(int pos) const { return pairs_.at(static_cast<size_t>(pos)); }

 private:
  int offset(int i) const {
    // Number of pairs with first coordinate < i.
    int total = 0;
    for (int a = 1; a < i; ++a) total += m_ - a;
    return total;
  }

  int m_;
  std::vector<std::pair<int, int>> pairs_;
};

/// One mod-J^2 entry of the relation matrix, kept symbolically:
/// sign * (t^{n_index} - 1), or zero.
struct SymbolicEntry {
  int sign = 0;   // 0, +1, -1
  int index = 0;  // 1-based index into n when sign != 0

  friend bool operator==(const SymbolicEntry&, const SymbolicEntry&) = default;

  std::string str() const {
    if (sign == 0) return "0";
    std::string base = "t^n" + std::to_string(index);
    return sign > 0 ? base + "-1" : "1-" + base;
  }

  JetAtOne jet(std::span<const long long> n) const {
    if (sign == 0) return {0, 0};
    return {0, Int(sign) * Int(n[static_cast<size_t>(index - 1)])};
  }

  LaurentPoly poly(std::span<const long long> n) const {
    if (sign == 0) return LaurentPoly::zero(1);
    LaurentPoly p =
        LaurentPoly::t_power_minus_one(static_cast<int>(n[static_cast<size_t>(index - 1)]));
    return sign > 0 ? p : -p;
  }
};

using SymbolicMatrix = std::vector<std::vector<SymbolicEntry>>;
using JetMatrix = std::vector<std::vector<JetAtOne>>;

/// The mod-J^2 case table of the relation matrix. Row (i,j):
///   j = N:       entry (l,i) = 1-t^{n_l} for l<i, entry (i,k) = t^{n_k}-1 for k>i
///   i = N:       entry (l,j) = t^{n_l}-1 for l<j, entry (j,k) = 1-t^{n_k} for k>j
///   N < i < j:   (N,i) = t^{n_j}-1, (N,j) = 1-t^{n_i}, (i,j) = t^{n_N}-1
///   i < N < j:   (i,N) = 1-t^{n_j}, (i,j) = t^{n_N}-1, (N,j) = 1-t^{n_i}
///   i < j < N:   (i,j) = t^{n_N}-1, (i,N) = 1-t^{n_j}, (j,N) = t^{n_i}-1
/// All other entries vanish mod J^2; every diagonal entry is t^{n_N}-1.
inline SymbolicMatrix case_table(int m, int N) {
  if (N < 1 || N > m) throw Error(Errc::invalid_argument, "N out of range");
  PairTable pt(m);
  SymbolicMatrix mat(static_cast<size_t>(pt.count()),
                     std::vector<SymbolicEntry>(static_cast<size_t>(pt.count())));
  auto cell = [&](int row, int i, int j) -> SymbolicEntry& {
    return mat[static_cast<size_t>(row)][static_cast<size_t>(pt.position(i, j))];
  };
  for (int row = 0; row < pt.count(); ++row) {
    auto [i, j] = pt.pair_at(row);
    if (j == N) {
      for (int l = 1; l < i; ++l) cell(row, l, i) = {-1, l};
      for (int k = i + 1; k <= m; ++k) cell(row, i, k) = {+1, k};
    } else if (i == N) {
      for (int l = 1; l < j; ++l) cell(row, l, j) = {+1, l};
      for (int k = j + 1; k <= m; ++k) cell(row, j, k) = {-1, k};
    } else if (N < i) {
      cell(row, N, i) = {+1, j};
      cell(row, N, j) = {-1, i};
      cell(row, i, j) = {+1, N};
    } else if (j < N) {
      cell(row, i, j) = {+1, N};
      cell(row, i, N) = {-1, j};
      cell(row, j, N) = {+1, i};
    } else {  // i < N < j
      cell(row, i, N) = {-1, j};
      cell(row, i, j) = {+1, N};
      cell(row, N, j) = {-1, i};
    }
  }
  return mat;
}

/// Relation matrix mod J^2 as jets at t=1, from the case table.
inline JetMatrix relation_matrix_mod_J2(const Params& p) {
  SymbolicMatrix sym = case_table(p.m, p.N);
  JetMatrix jets(sym.size(), std::vector<JetAtOne>(sym.size(), JetAtOne{0, 0}));
  for (size_t r = 0; r < sym.size(); ++r)
    for (size_t c = 0; c < sym.size(); ++c) jets[r][c] = sym[r][c].jet(p.n);
  return jets;
}

struct DecompositionChecks {
  bool diagonal_ok = false;          // every diagonal jet = (0, n_N)
  bool off_diagonal_in_J = false;    // off-diagonal values vanish at t=1
  bool skew_ok = false;              // slope(ij,lk) = -slope(lk,ij)

  bool all() const { return diagonal_ok && off_diagonal_in_J && skew_ok; }
};

/// Checks the decomposition M = (t^{n_N}-1) I + (t-1) S + (t-1)^2 E on the
/// mod-J^2 matrix: diagonal jets, off-diagonal membership in J, and slope
/// antisymmetry.
inline DecompositionChecks verify_decomposition(const JetMatrix& jets, const Params& p) {
  DecompositionChecks out{true, true, true};
  const size_t n = jets.size();
  const Int nN = p.n_N();
  for (size_t r = 0; r < n; ++r) {
    if (!(jets[r][r].value == 0 && jets[r][r].slope == nN)) out.diagonal_ok = false;
    for (size_t c = 0; c < n; ++c) {
      if (r == c) continue;
      if (jets[r][c].value != 0) out.off_diagonal_in_J = false;
      if (jets[r][c].slope != -jets[c][r].slope) out.skew_ok = false;
    }
  }
  return out;
}

/// A(1) = n_N I + S(1), read off the jets: the diagonal carries n_N and each
/// off-diagonal entry carries its slope at t=1.
inline IntMat a_at_one(const JetMatrix& jets, const Params& p) {
  if (!verify_decomposition(jets, p).all())
    throw Error(Errc::check_failed, "a_at_one: decomposition checks failed");
  const int n = static_cast<int>(jets.size());
  IntMat a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a.at(r, c) = (r == c) ? Int(p.n_N()) : jets[static_cast<size_t>(r)][static_cast<size_t>(c)].slope;
  return a;
}

inline IntMat skew_part(const IntMat& a1, const Params& p) {
  IntMat s = a1;
  for (int i = 0; i < s.rows(); ++i) s.at(i, i) -= p.n_N();
  return s;
}

/// The quadratic-form identity: A(1) + A(1)^T = 2 n_N I, equivalently
/// z^T A(1) z = n_N * sum z_i^2, which forces nonsingularity when n_N != 0.
inline bool quadratic_form_check(const IntMat& a1, const Params& p) {
  if (a1.rows() != a1.cols()) return false;
  const Int two_nN = 2 * Int(p.n_N());
  for (int r = 0; r < a1.rows(); ++r)
    for (int c = 0; c < a1.cols(); ++c) {
      Int want = (r == c) ? two_nN : Int(0);
      if (a1.at(r, c) + a1.at(c, r) != want) return false;
    }
  return true;
}

/// Full relation matrix of the family member with all conjugators trivial,
/// straight from the longitude and Jacobi relations (so its jets are an
/// independent derivation of the mod-J^2 matrix):
///   row (i,N): l_i     = sum_{j<i} (t^{-n_j}-1) mu_{ji} + sum_{k>i} (1-t^{-n_k}) mu_{ik}
///   row (N,j): l_j^{-1} (the negated longitude row)
///   row (i,j), N not in {i,j}: the Jacobi row with the (t-1)^3 conjugator
///   terms identically zero.
inline PolyMatrix model_relation_matrix(const Params& p) {
  PairTable pt(p.m);
  PolyMatrix mat(pt.count(), pt.count(), 1);
  auto nexp = [&](int i) { return static_cast<int>(p.n[static_cast<size_t>(i - 1)]); };
  auto tm1 = [](int e) { return LaurentPoly::t_power_minus_one(e); };
  auto add = [&](int row, int i, int j, LaurentPoly q) {
    mat.at(row, pt.position(i, j)) += q;
  };
  auto add_longitude = [&](int row, int i, int sign) {
    for (int j = 1; j < i; ++j) {
      LaurentPoly q = tm1(-nexp(j));  // (t^{-n_j} - 1) on mu_{ji}
      add(row, j, i, sign > 0 ? q : -q);
    }
    for (int k = i + 1; k <= p.m; ++k) {
      LaurentPoly q = -tm1(-nexp(k));  // (1 - t^{-n_k}) on mu_{ik}
      add(row, i, k, sign > 0 ? q : -q);
    }
  };
  for (int row = 0; row < pt.count(); ++row) {
    auto [i, j] = pt.pair_at(row);
    if (j == p.N) {
      add_longitude(row, i, +1);
    } else if (i == p.N) {
      add_longitude(row, j, -1);
    } else if (p.N < i) {  // J(N,i,j)
      add(row, p.N, i, tm1(nexp(j)));
      add(row, p.N, j, -tm1(nexp(i)));
      add(row, i, j, tm1(nexp(p.N)));
    } else if (j < p.N) {  // J(i,j,N)
      add(row, i, j, tm1(nexp(p.N)));
      add(row, i, p.N, -tm1(nexp(j)));
      add(row, j, p.N, tm1(nexp(i)));
    } else {  // i < N < j: J(i,N,j)^{-1}
      add(row, i, p.N, -tm1(nexp(j)));
      add(row, i, j, tm1(nexp(p.N)));
      add(row, p.N, j, -tm1(nexp(i)));
    }
  }
  return mat;
}

inline JetMatrix jets_of(const PolyMatrix& m) {
  JetMatrix jets(static_cast<size_t>(m.rows()),
                 std::vector<JetAtOne>(static_cast<size_t>(m.cols()), JetAtOne{0, 0}));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      jets[static_cast<size_t>(r)][static_cast<size_t>(c)] = jet_at_one(m.at(r, c));
  return jets;
}

/// The family member's fundamental group in the trivial-conjugator model:
/// generators x_1..x_m, one longitude relator per component,
///   l_i = prod_{j<i} [x_j^-1, [x_j, x_i]] * prod_{k>i} [[x_i, x_k], x_k^-1].
/// Feeds the Fox-calculus pipeline as an independent route to the ranks.
inline Presentation model_group_presentation(int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "m must be >= 1");
  Alphabet a = Alphabet::indexed(m);
  std::vector<Word> gens;
  gens.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) gens.push_back(Word::generator(a, i));
  Presentation p{a, {}};
  for (int i = 1; i <= m; ++i) {
    Word l(a);
    for (int j = 1; j < i; ++j) {
      const Word& xj = gens[static_cast<size_t>(j - 1)];
      l = l * commutator(xj.inverse(), commutator(xj, gens[static_cast<size_t>(i - 1)]));
    }
    for (int k = i + 1; k <= m; ++k) {
      const Word& xk = gens[static_cast<size_t>(k - 1)];
      l = l * commutator(commutator(gens[static_cast<size_t>(i - 1)], xk), xk.inverse());
    }
    p.relators.push_back(std::move(l));
  }
  return p;
}

/// The meridian rewriting step mod G'': with v, w1 in the commutator
/// subgroup,
///   [x_i, v x_j v^-1]^{w1}  =  [x_i, [v, x_j]] [x_i, x_j]   mod F''.
inline bool verify_muij2_reduction(const Word& v, const Word& omega1, int i, int j, int m) {
  if (!(1 <= i && i <= m && 1 <= j && j <= m && i != j))
    throw Error(Errc::invalid_argument, "verify_muij2_reduction: need distinct 1-based i, j <= m");
  Alphabet a = Alphabet::indexed(m);
  if (!(v.alphabet() == a) || !(omega1.alphabet() == a))
    throw Error(Errc::alphabet_mismatch, "v, omega1 must live in the rank-m alphabet");
  if (!v.in_commutator_subgroup())
    throw Error(Errc::invalid_argument, "v must lie in the commutator subgroup");
  if (!omega1.in_commutator_subgroup())
    throw Error(Errc::invalid_argument, "omega1 must lie in the commutator subgroup");
  Word xi = Word::generator(a, i - 1);
  Word xj = Word::generator(a, j - 1);
  Word lhs = conjugate(commutator(xi, v * xj * v.inverse()), omega1);
  Word rhs = commutator(xi, commutator(v, xj)) * commutator(xi, xj);
  return equal_mod_second_derived(lhs, rhs);
}

/// The rearranged Jacobi relation with the meridian substitution applied:
/// with each v in the commutator subgroup and
/// mu(a,b) = [x_a, [v_ab, x_b]] [x_a, x_b],
///   [x_i, mu(j,k)] [x_j, mu(i,k)^-1] [x_k, mu(i,j)]
///   * [x_i, [[v_jk, x_k], x_j]] [x_j, [x_i, [v_ik, x_k]]] [x_k, [[v_ij, x_j], x_i]]
/// is trivial mod F''.
inline bool verify_freerel(int i, int j, int k, int m, const Word& v_ij, const Word& v_ik,
                           const Word& v_jk) {
  if (!(1 <= i && i < j && j < k && k <= m))
    throw Error(Errc::invalid_argument, "verify_freerel requires 1 <= i < j < k <= m");
  Alphabet a = Alphabet::indexed(m);
  for (const Word* v : {&v_ij, &v_ik, &v_jk}) {
    if (!(v->alphabet() == a))
      throw Error(Errc::alphabet_mismatch, "conjugator words must live in the rank-m alphabet");
    if (!v->in_commutator_subgroup())
      throw Error(Errc::invalid_argument, "conjugator words must lie in the commutator subgroup");
  }
  Word xi = Word::generator(a, i - 1);
  Word xj = Word::generator(a, j - 1);
  Word xk = Word::generator(a, k - 1);
  auto mu = [&](const Word& xa, const Word& xb, const Word& v) {
    return commutator(xa, commutator(v, xb)) * commutator(xa, xb);
  };
  Word product = commutator(xi, mu(xj, xk, v_jk)) * commutator(xj, mu(xi, xk, v_ik).inverse()) *
                 commutator(xk, mu(xi, xj, v_ij)) *
                 commutator(xi, commutator(commutator(v_jk, xk), xj)) *
                 commutator(xj, commutator(xi, commutator(v_ik, xk))) *
                 commutator(xk, commutator(commutator(v_ij, xj), xi));
  return in_second_derived(product);
}

/// Index-level decomposition check on the symbolic case table: for every
/// admissible distinguished index N, each diagonal entry is t^{n_N}-1 and
/// off-diagonal entries pair up as sign-opposite copies of the same
/// t^{n_k}-1. This holds as an identity in the symbols n_1..n_m, so
/// A(1) = n_N I + S(1) with S(1) skew for *every* exponent vector; together
/// with the quadratic form argument it certifies nonsingularity for every
/// primitive character at once.
inline bool symbolic_family_check(int m) {
  for (int N = 1; N <= m; ++N) {
    SymbolicMatrix sym = case_table(m, N);
    const size_t n = sym.size();
    for (size_t r = 0; r < n; ++r) {
      if (!(sym[r][r] == SymbolicEntry{+1, N})) return false;
      for (size_t c = 0; c < n; ++c) {
        if (r == c) continue;
        const SymbolicEntry &a = sym[r][c], &b = sym[c][r];
        if (a.sign != -b.sign) return false;
        if (a.sign != 0 && a.index != b.index) return false;
      }
    }
  }
  return true;
}

struct Conclusion {
  std::string statement;
  std::string cites;  // named fact; the README states each cited fact

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

/// Machine-checkable verdict for one family member: the matrix data, every
/// named check, and the conclusions those checks license. Conclusions are
/// present only when all prerequisite checks hold.
struct Certificate {
  std::string kind;  // "nonsingularity" or "f4-obstruction"
  Params params;
  SymbolicMatrix symbolic;
  JetMatrix jets;
  IntMat S1, A1;
  Int detA1 = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<Conclusion> conclusions;
  bool certified = false;
  NilpotentModuleInfo nilpotent_module{0, 0, false};
  bool has_nilpotent_module = false;

  bool check(const std::string& name) const {
    for (const auto& [k, v] : checks)
      if (k == name) return v;
    return false;
  }

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : checks)
      if (!v) out.push_back(k);
    return out;
  }
};

/// Validates a candidate (jets, A1) pair for the given parameters and
/// assembles the nonsingularity certificate; refuses (certified = false, no
/// conclusions) when any named check fails. Tests inject faults here.
inline Certificate assemble_nonsingularity(const Params& p, const JetMatrix& jets,
                                           const IntMat& a1) {
  Certificate cert;
  cert.kind = "nonsingularity";
  cert.params = p;
  cert.symbolic = case_table(p.m, p.N);
  cert.jets = jets;
  cert.A1 = a1;
  cert.S1 = (a1.rows() == a1.cols() && a1.rows() == static_cast<int>(jets.size()))
                ? skew_part(a1, p)
                : IntMat(0, 0);

  DecompositionChecks dec = verify_decomposition(jets, p);
  bool model_agreement = jets_of(model_relation_matrix(p)) == jets;
  bool shape_ok = a1.rows() == a1.cols() && a1.rows() == static_cast<int>(jets.size());
  bool qf = shape_ok && quadratic_form_check(a1, p);
  cert.detA1 = shape_ok ? det(a1) : Int(0);
  bool det_nonzero = shape_ok && cert.detA1 != 0;

  cert.checks = {{"diagonal", dec.diagonal_ok},
                 {"off_diagonal_in_J", dec.off_diagonal_in_J},
                 {"skew_symmetry", dec.skew_ok},
                 {"model_agreement", model_agreement},
                 {"quadratic_form", qf},
                 {"det_nonzero", det_nonzero}};
  cert.certified = dec.all() && model_agreement && qf && det_nonzero;
  if (cert.certified) {
    cert.conclusions = {
        {"the relation matrix M is nonsingular over Q(t)", "skew-quadratic-form"},
        {"every meridian class mu_ij is Z[t^+-1]-torsion in H_1(X_phi)",
         "handle-exact-sequence"},
        {"rank over Z[t^+-1] of H_1(X_phi) = 0 for every primitive phi "
         "(context: H_1(W_psi) = Z^(m-1) has rank 0)",
         "handle-exact-sequence"},
    };
  }
  return cert;
}

/// Runs the whole pipeline honestly for the given parameters.
inline Certificate nonsingularity_certificate(const Params& p) {
  JetMatrix jets = relation_matrix_mod_J2(p);
  IntMat a1 = a_at_one(jets, p);
  return assemble_nonsingularity(p, jets, a1);
}

/// Validates the lower-central-series obstruction data and assembles the
/// F/F_4 certificate; refuses when any check fails. Tests inject faults here.
inline Certificate assemble_f4(const Params& p, const JetMatrix& jets, const IntMat& a1,
                               const NilpotentModuleInfo& module_info) {
  Certificate cert = assemble_nonsingularity(p, jets, a1);
  cert.kind = "f4-obstruction";
  cert.nilpotent_module = module_info;
  cert.has_nilpotent_module = true;
  const bool module_ok = module_info == NilpotentModuleInfo{3, 3, true};
  cert.checks.emplace_back("nilpotent_module_shape", module_ok);
  bool all = cert.certified && module_ok;
  cert.certified = all;
  cert.conclusions.clear();
  if (all) {
    cert.conclusions = {
        {"det A(1) = " + cert.detA1.str() + " is nonzero", "skew-quadratic-form"},
        {"the Alexander module of the rank-2 free nilpotent group of class 3 at (1,0) is "
         "Z[t^+-1]/J^3: additive rank 3, annihilator J^3, cyclic",
         "nilpotent-alexander-module"},
        {"no epimorphism of pi_1(X) onto the rank-2 free nilpotent group of class 3",
         "lower-central-obstruction"},
    };
    if (p.m == 1)
      cert.conclusions.push_back(
          {"beta_1(X) = 1 already rules out any quotient with rank-2 abelianization",
           "abelianization-rank"});
  }
  return cert;
}

inline Certificate f4_obstruction_certificate(const Params& p) {
  JetMatrix jets = relation_matrix_mod_J2(p);
  IntMat a1 = a_at_one(jets, p);
  NilpotentModuleInfo info = free_nilpotent_alexander(2, 3, std::vector<long long>{1, 0});
  return assemble_f4(p, jets, a1, info);
}

/// Corank certificate for the m-component family member: Fox-calculus ranks
/// for a seeded sample of characters, with the universal conclusions
/// licensed by the symbolic all-character check rather than the sample.
inline RankCertificate family_corank_certificate(int m, int samples, uint64_t seed) {
  if (!symbolic_family_check(m))
    throw Error(Errc::check_failed, "symbolic decomposition check failed");
  Presentation pres = model_group_presentation(m);
  std::vector<PhiMap> phis = sample_consistent_primitive_phis(pres, samples, seed);
  if (phis.empty()) throw Error(Errc::check_failed, "no characters sampled");
  return corank_obstruction(pres, phis, /*exhaustive_for_family=*/true);
}

}  // namespace cutcert::harvey
