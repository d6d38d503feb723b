#include "amsum/sumrule.hpp"

#include <algorithm>
#include <stdexcept>

#include "amsum/sqrt_rational.hpp"
#include "amsum/wigner.hpp"

namespace amsum {

namespace {

// Ladder weights at (m1, m2), all as exact rationals.
Rational raise_weight(HalfInt j, HalfInt m) { return jjp1(j) - m * (m + HalfInt(1)); }
Rational lower_weight(HalfInt j, HalfInt m) { return jjp1(j) - m * (m - HalfInt(1)); }

Rational diag_weight(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  return jjp1(j1) + jjp1(j2) + Rational(2) * (m1 * m2);
}

}  // namespace

void SumRuleQuery::validate() const {
  if (k < 0) throw std::domain_error("sum rule: k must be nonnegative");
  if (!valid_pair(j1, m1) || !valid_pair(j2, m2))
    throw std::domain_error("sum rule: malformed (j, m) pair");
}

TridiagonalBlock build_tridiagonal(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  if (!valid_pair(j1, m1) || !valid_pair(j2, m2))
    throw std::domain_error("build_tridiagonal: malformed (j, m) pair");

  // t ranges over integers with |m1+t| <= j1 and |m2-t| <= j2.
  const long t_min = std::max((-(j1 + m1)).whole(), (m2 - j2).whole());
  const long t_max = std::min((j1 - m1).whole(), (m2 + j2).whole());

  TridiagonalBlock block;
  block.origin_index = static_cast<std::size_t>(-t_min);
  for (long t = t_min; t <= t_max; ++t) {
    HalfInt u1 = m1 + HalfInt(t);
    HalfInt u2 = m2 - HalfInt(t);
    block.diag.push_back(diag_weight(j1, u1, j2, u2));
    if (t < t_max) block.offdiag_sq.push_back(raise_weight(j1, u1) * lower_weight(j2, u2));
  }
  return block;
}

Rational TridiagonalBlock::diagonal_power_entry(long k) const {
  return apply_power(k)[origin_index];
}

std::vector<Rational> TridiagonalBlock::apply_power(long k) const {
  if (k < 0) throw std::domain_error("TridiagonalBlock: negative power");
  const std::size_t d = dimension();
  std::vector<Rational> v(d, Rational(0));
  v[origin_index] = Rational(1);
  std::vector<Rational> w(d);
  for (long step = 0; step < k; ++step) {
    for (std::size_t i = 0; i < d; ++i) {
      w[i] = diag[i] * v[i];
      if (i + 1 < d) w[i] += v[i + 1];
      if (i > 0) w[i] += offdiag_sq[i - 1] * v[i - 1];
    }
    v.swap(w);
  }
  return v;
}

Rational sumrule_operator(const SumRuleQuery& q) {
  q.validate();
  return build_tridiagonal(q.j1, q.m1, q.j2, q.m2).diagonal_power_entry(q.k);
}

Rational sumrule_bruteforce(const SumRuleQuery& q) {
  q.validate();
  const HalfInt m = q.m1 + q.m2;
  Rational total(0);
  for (long tj = abs(q.j1 - q.j2).twice(); tj <= (q.j1 + q.j2).twice(); tj += 2) {
    HalfInt j = HalfInt::from_twice(tj);
    Rational sq = wigner_3jm(q.j1, q.j2, j, q.m1, q.m2, -m).square();
    if (sq.is_zero()) continue;
    total += Rational(tj + 1) * jjp1(j).pow(q.k) * sq;
  }
  return total;
}

bool contributes_to_diagonal(const OperatorWord& word) {
  long balance = 0;
  for (LadderFactor factor : word) {
    if (factor == LadderFactor::kB1) ++balance;
    if (factor == LadderFactor::kB2) --balance;
  }
  return balance == 0;
}

Rational word_contribution(const OperatorWord& word, HalfInt j1, HalfInt m1, HalfInt j2,
                           HalfInt m2) {
  if (!contributes_to_diagonal(word)) return Rational(0);

  HalfInt u1 = m1;
  HalfInt u2 = m2;
  SqrtRational value = SqrtRational::of_rational(Rational(1));
  for (auto factor = word.rbegin(); factor != word.rend() && !value.is_zero(); ++factor) {
    switch (*factor) {
      case LadderFactor::kA:
        value = value * diag_weight(j1, u1, j2, u2);
        break;
      case LadderFactor::kB1:
        value = value * sqrt_of_rational(raise_weight(j1, u1) * lower_weight(j2, u2));
        u1 = u1 + HalfInt(1);
        u2 = u2 - HalfInt(1);
        break;
      case LadderFactor::kB2:
        value = value * sqrt_of_rational(lower_weight(j1, u1) * raise_weight(j2, u2));
        u1 = u1 - HalfInt(1);
        u2 = u2 + HalfInt(1);
        break;
    }
  }
  if (value.is_zero()) return Rational(0);

  // Balanced words return to the origin, crossing each ladder edge equally
  // often in both directions, so the accumulated radicand is a perfect
  // square of a rational.
  auto exact = value.as_exact_rational();
  if (!exact) throw std::logic_error("word_contribution: radicand is not a perfect square");
  return *exact;
}

Rational sumrule_permutation(const SumRuleQuery& q, long word_cap) {
  q.validate();
  if (q.k > word_cap)
    throw std::length_error("sumrule_permutation: k exceeds the configured word cap");

  long words = 1;
  for (long i = 0; i < q.k; ++i) words *= 3;

  Rational total(0);
  OperatorWord word(static_cast<std::size_t>(q.k), LadderFactor::kA);
  for (long code = 0; code < words; ++code) {
    long rest = code;
    for (long pos = 0; pos < q.k; ++pos) {
      word[static_cast<std::size_t>(pos)] = static_cast<LadderFactor>(rest % 3);
      rest /= 3;
    }
    if (!contributes_to_diagonal(word)) continue;
    total += word_contribution(word, q.j1, q.m1, q.j2, q.m2);
  }
  return total;
}

Rational sumrule_closed(long k, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  SumRuleQuery q{k, j1, m1, j2, m2};
  q.validate();
  if (k < 1 || k > 3) throw std::domain_error("sumrule_closed: k must be 1, 2 or 3");

  const HalfInt one(1);
  const Rational p = diag_weight(j1, m1, j2, m2);
  const Rational up = raise_weight(j1, m1) * lower_weight(j2, m2);    // B2 B1 route
  const Rational down = lower_weight(j1, m1) * raise_weight(j2, m2);  // B1 B2 route

  switch (k) {
    case 1:
      return p;
    case 2:
      return p * p + down + up;
    default: {
      const Rational p_up = diag_weight(j1, m1 + one, j2, m2 - one);
      const Rational p_down = diag_weight(j1, m1 - one, j2, m2 + one);
      return p.pow(3) + up * p_up + Rational(2) * up * p + Rational(2) * down * p +
             down * p_down;
    }
  }
}

Rational sumrule_zero_projection(long k, HalfInt a, HalfInt c, HalfInt x) {
  if (!valid_pair(a, x) || !valid_pair(c, x))
    throw std::domain_error("sumrule_zero_projection: |x| <= min(a, c) with integral a-x, c-x required");
  if (k < 1 || k > 3) throw std::domain_error("sumrule_zero_projection: k must be 1, 2 or 3");

  const Rational A = jjp1(a);
  const Rational C = jjp1(c);
  const Rational X = x.to_rational();
  const Rational p = A + C - Rational(2) * X * X;
  const Rational minus = (A - X * (X - Rational(1))) * (C - X * (X - Rational(1)));
  const Rational plus = (A - X * (X + Rational(1))) * (C - X * (X + Rational(1)));

  switch (k) {
    case 1:
      return p;
    case 2:
      return p * p + minus + plus;
    default: {
      const Rational shift_up = A + C - Rational(2) * (X + Rational(1)).pow(2);
      const Rational shift_down = A + C - Rational(2) * (X - Rational(1)).pow(2);
      return p.pow(3) + plus * shift_up + Rational(2) * plus * p + Rational(2) * minus * p +
             minus * shift_down;
    }
  }
}

}  // namespace amsum
