#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ovalcode/field.hpp"

namespace ovalcode {

/// A sum of roots of unity zeta_n^t carried exactly as a count per exponent,
/// with a complex evaluation alongside. Each accumulated term contributes a
/// single non-negative count.
class CharacterSum {
 public:
  explicit CharacterSum(std::uint64_t order) : counts_(order, 0) {}

  static CharacterSum unit(std::uint64_t order, std::uint64_t exponent) {
    CharacterSum s(order);
    s.add_term(exponent);
    return s;
  }

  std::uint64_t order() const { return counts_.size(); }
  const std::vector<long long>& counts() const { return counts_; }

  void add_term(std::uint64_t exponent, long long count = 1) {
    counts_[exponent % counts_.size()] += count;
    terms_ += count;
  }
  void add(const CharacterSum& other);

  long long term_count() const { return terms_; }

  std::complex<double> value() const;

  // Exact |z|^2 for prime order: the autocorrelation must reduce to a
  // rational via 1 + zeta + ... + zeta^{p-1} = 0. Returns nothing when the
  // reduction does not close (order not prime or value irrational).
  std::optional<long long> norm_squared_exact() const;

  // Exact equality of the represented values; valid for prime order, where
  // two count vectors agree iff their difference is constant.
  bool value_equals(const CharacterSum& other) const;

 private:
  std::vector<long long> counts_;
  long long terms_ = 0;
};

// -- characters -------------------------------------------------------------

// chi_a(x) = zeta_p^{Tr(ax)}, a term of order p.
CharacterSum additive_character(const Field& f, Elem a, Elem x);

// psi_j(g^k) = zeta_{q-1}^{jk}; x must be nonzero.
CharacterSum multiplicative_character(const Field& f, std::uint64_t j, Elem x);

// -- sum families -----------------------------------------------------------

struct QuadraticPoly {
  Elem a2 = 0, a1 = 0, a0 = 0;  // f(x) = a2 x^2 + a1 x + a0
};

struct AffinePPoly {
  std::vector<Elem> coeffs;  // coeffs[i] multiplies x^{p^i}, i = 0..r
  Elem constant = 0;
};

// G(psi_j, chi_1) summed over the q-1 nonzero elements, carried over the
// order lcm(p, q-1) = p(q-1).
CharacterSum gauss_sum_exhaustive(const Field& f, std::uint64_t j);

// The quadratic Gauss sum G(eta, chi) as an order-p sum, computed through
// the identity G = sum_x chi(x^2) over all of GF(q). Requires odd q.
CharacterSum gauss_sum_quadratic_exhaustive(const Field& f);

// Closed form for odd p: (-1)^{m-1} sqrt(q) when p = 1 mod 4, and
// (-1)^{m-1} i^m sqrt(q) when p = 3 mod 4.
std::complex<double> gauss_sum_quadratic_closed_form(const Field& f);

// sum_c chi(f(c)) over all c, order p. Odd q.
CharacterSum weil_sum_quadratic_exhaustive(const Field& f, const QuadraticPoly& poly);

// chi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G(eta, chi); requires a2 != 0, odd q.
std::complex<double> weil_sum_quadratic_closed(const Field& f, const QuadraticPoly& poly);

// Characteristic 2: sum_c chi_b(f(c)) = chi_b(a0) q when a2 = b a1^2, else 0.
long long weil_sum_even_char_closed(const Field& f, const QuadraticPoly& poly, Elem b);
long long weil_sum_even_char_exhaustive(const Field& f, const QuadraticPoly& poly, Elem b);

// sum_c chi_b(f(c)) for an affine p-polynomial f: chi_b(constant) q when the
// twisted coefficient condition holds, else 0. Returned as an order-p sum.
CharacterSum weil_sum_affine_p_poly_closed(const Field& f, const AffinePPoly& poly, Elem b);
CharacterSum weil_sum_affine_p_poly_exhaustive(const Field& f, const AffinePPoly& poly, Elem b);

struct DeltaSegre {
  long long value = 0;  // sum_x chi(a x^6 + b x), an integer in char 2
  int sign = 0;         // sign of the nonzero +-2^{(m+1)/2} branch, else 0
};

// Requires p = 2 and m odd.
DeltaSegre delta_sum_segre(const Field& f, Elem a, Elem b);

}  // namespace ovalcode
