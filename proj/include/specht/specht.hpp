#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specht/groebner.hpp"
#include "specht/partition.hpp"
#include "specht/polynomial.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// Shape families with dedicated results. TwoRow is (n−d, d); HookTwoRow is
/// (d, d, 1); ColumnHook is (n−d, 1, ..., 1). (1,1,1) classifies as
/// HookTwoRow with d = 1; single rows are TwoRow with d = 0.
enum class SpechtFamily { TwoRow, HookTwoRow, ColumnHook, General };

std::string family_name(SpechtFamily f);

struct SpechtIdealSpec {
  Partition lambda;
  int n;
  SpechtFamily family;
  /// Family parameter: the short row d for TwoRow and HookTwoRow, the leg
  /// length for ColumnHook, 0 for General.
  int d;

  static SpechtIdealSpec of(const Partition& lambda);
};

/// f_T: over each column with entries j_1..j_m top to bottom, the product of
/// all differences (x_{j_s} − x_{j_t}) for s < t; single-box columns
/// contribute 1. Ambient must cover every letter.
Polynomial specht_polynomial(const YoungTableau& T, int ambient,
                             const Field& K, const MonomialOrder& order);
/// Ambient = max letter, rationals, default lex.
Polynomial specht_polynomial(const YoungTableau& T);

/// I^Sp_lambda, generated by { f_T : T standard }. The standard subset
/// generates the same ideal as all of Tab(lambda); syt_basis_rank asserts
/// the underlying span equality.
Ideal specht_ideal(const SpechtIdealSpec& spec, const Field& K);

/// Each height-2 column reordered so the top entry is smaller; fixes the
/// sign convention that initial_monomial_two_row relies on.
YoungTableau column_normalized(const YoungTableau& T);

/// For a column-normalized two-row tableau: product of the bottom-row
/// variables, which is the leading monomial of f_T under default lex.
Monomial initial_monomial_two_row(const YoungTableau& T, int ambient);

/// trm(f): drops every term whose support has size >= d+1.
Polynomial trimmed_form(const Polynomial& f, int d);

/// All C(n, k) squarefree monomials of degree k in n variables.
MonomialIdeal squarefree_monomial_ideal(int n, int k);

/// Structured basis of J^Sp_(d,d) = I^Sp_(d,d) + m^<d+1> in n = 2d
/// variables: { x^{2F} f_{T'} : F subset of [n], |F| = c <= d, T' of shape
/// (d, d−c) on [n] \ F } plus the squarefree monomials of degree d+1. With
/// syt_only the T' range over standard tableaux (certified downstream, not
/// assumed); otherwise over all column-normalized tableaux.
std::vector<Polynomial> structured_groebner_set(int d, const Field& K,
                                                bool syt_only = true);

/// P_F = (x_i − x_j : i, j in F), minimally (x_i − x_min F). F = {i} gives
/// the zero ideal.
Ideal prime_component(const std::vector<int>& F, int n, const Field& K);

/// The P_F whose intersection recovers the (radical) Specht ideal:
/// #F = n−d+1 for TwoRow, #F = d+1 for HookTwoRow. Subsets ascend
/// lexicographically. Throws FamilyError otherwise.
std::vector<Ideal> radical_decomposition(const SpechtIdealSpec& spec,
                                         const Field& K);
/// The F-subsets in the same order as radical_decomposition.
std::vector<std::vector<int>> radical_component_sets(
    const SpechtIdealSpec& spec);

/// Random-evaluation evidence for the vanishing characterization: points
/// with equal coordinates on a random #F-pattern kill every generator, and
/// a generic point keeps some generator nonzero.
struct VanishingReport {
  int trials = 0;
  std::uint64_t prime = 0;
  int pattern_size = 0;
  int vanish_failures = 0;
  int control_failures = 0;
  bool ok() const { return vanish_failures == 0 && control_failures == 0; }
};

VanishingReport vanishing_check(const SpechtIdealSpec& spec, int trials,
                                std::uint64_t seed);

/// Rank over Q of the coefficient matrix of { f_T : T standard }, plus the
/// pairwise-distinctness of their leading monomials. Both must agree with
/// the hook count for the span/basis claim.
struct SytBasisReport {
  long rank = 0;
  mpz_class expected;
  bool initials_distinct = false;
  bool ok() const {
    return mpz_class(rank) == expected && initials_distinct;
  }
};

SytBasisReport syt_basis_rank(const Partition& lambda);

}  // namespace specht
