#pragma once

#include <cstddef>
#include <vector>

#include "amsum/half_int.hpp"
#include "amsum/rational.hpp"

namespace amsum {

/// A weighted sum of squared 3jm symbols,
///   S_k(j1,m1,j2,m2) = sum_{j,m} (2j+1) [j(j+1)]^k 3j(j1 j2 j; m1 m2 -m)^2,
/// identified with the diagonal matrix element
/// <j1 m1 j2 m2 | (J^2)^k | j1 m1 j2 m2> of the total momentum squared.
struct SumRuleQuery {
  long k = 0;
  HalfInt j1, m1, j2, m2;

  /// Throws std::domain_error unless k >= 0 and both pairs are valid.
  void validate() const;
};

/// J^2 restricted to the ladder subspace spanned by |j1, m1+t, j2, m2-t>.
/// J^2 = A + B1 + B2 with A diagonal and B1 = J1+ J2-, B2 = J1- J2+ moving
/// one step along the ladder, so the block is tridiagonal. Off-diagonal
/// entries are stored as the product of the paired raising/lowering weights
/// (their squares): diagonal entries of powers of a symmetric tridiagonal
/// matrix only ever see edge-weight products, because a closed walk on a path
/// crosses each edge the same number of times in each direction. That keeps
/// every power computation inside Rational.
struct TridiagonalBlock {
  std::vector<Rational> diag;        // A on each ladder state
  std::vector<Rational> offdiag_sq;  // squared coupling between neighbours
  std::size_t origin_index = 0;      // position of (m1, m2) itself

  std::size_t dimension() const { return diag.size(); }

  /// (origin, origin) entry of the k-th power of the block.
  Rational diagonal_power_entry(long k) const;

  /// Experimental: the full origin column of the k-th power in the raw gauge
  /// (raising edges carry weight 1, lowering edges the squared product).
  /// Only the origin entry is gauge-invariant; off-origin entries have no
  /// independent closed form to validate against.
  std::vector<Rational> apply_power(long k) const;
};

/// Ladder subspace of (j1, m1, j2, m2); throws on invalid pairs.
TridiagonalBlock build_tridiagonal(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);

/// S_k by k sparse applications of the tridiagonal block to the origin unit
/// vector. The primary method: exact for any k, cost O(k * dimension).
Rational sumrule_operator(const SumRuleQuery& q);

/// S_k by direct summation over j of (2j+1) [j(j+1)]^k 3j(...)^2; the m sum
/// collapses to m = m1+m2 by the selection rule.
Rational sumrule_bruteforce(const SumRuleQuery& q);

/// One factor of J^2 = A + B1 + B2: the diagonal part, the raise-1/lower-2
/// ladder product J1+ J2-, or its mirror J1- J2+.
enum class LadderFactor { kA, kB1, kB2 };

/// A product of k factors, applied right to left to |j1 m1 j2 m2>.
using OperatorWord = std::vector<LadderFactor>;

/// Words contribute to diagonal matrix elements iff B1 and B2 appear
/// equally often (only those leave m1 and m2 unchanged).
bool contributes_to_diagonal(const OperatorWord& word);

/// Exact diagonal contribution <j1 m1 j2 m2| word |j1 m1 j2 m2> of one
/// word; the ladder radicands multiply to a perfect square, so the result
/// is rational. Zero for words that move the projections or step off the
/// ladder.
Rational word_contribution(const OperatorWord& word, HalfInt j1, HalfInt m1, HalfInt j2,
                           HalfInt m2);

inline constexpr long kPermutationWordCap = 6;

/// S_k by enumeration of all 3^k length-k operator words, summing
/// word_contribution over those with equal B1/B2 counts. Cost 3^k; k above
/// the cap is a capacity error (std::length_error).
Rational sumrule_permutation(const SumRuleQuery& q, long word_cap = kPermutationWordCap);

/// Closed polynomial forms of S_k for k in {1, 2, 3}.
Rational sumrule_closed(long k, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);

/// Closed forms of sum_l (2l+1) [l(l+1)]^k 3j(a c l; -x x 0)^2 for k in
/// {1, 2, 3}; the m1 = -x, m2 = x, m = 0 specialization of sumrule_closed.
Rational sumrule_zero_projection(long k, HalfInt a, HalfInt c, HalfInt x);

}  // namespace amsum
