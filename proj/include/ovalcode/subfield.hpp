#pragma once

#include <cstdint>
#include <vector>

#include "ovalcode/linear_code.hpp"

namespace ovalcode {

/// An ordered GF(p)-basis of GF(p^m); validated invertible on construction.
class SubfieldBasis {
 public:
  SubfieldBasis(FieldPtr field, std::vector<Elem> elements);

  static SubfieldBasis polynomial(FieldPtr field);  // {1, alpha, ..., alpha^{m-1}}

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& elements() const { return elements_; }

  // Coordinates of e with respect to this basis, as a length-m vector over Z_p.
  std::vector<int> coordinates(Elem e) const;

 private:
  FieldPtr field_;
  std::vector<Elem> elements_;
  std::vector<std::vector<int>> inverse_;  // of the m x m coordinate matrix mod p
};

// Replace each entry of G by its m x 1 coordinate column: row i of G yields
// rows i*m .. i*m + m - 1 of the km x n result over GF(p).
Matrix expand_generator(const Matrix& g, const SubfieldBasis& basis);

// The subfield code C^{(p)}: row space of the expanded generator over GF(p).
LinearCode subfield_code(const LinearCode& code, const SubfieldBasis& basis);

bool basis_independence_check(const LinearCode& code,
                              const std::vector<SubfieldBasis>& bases);

// -- trace-representation families -------------------------------------------
//
// Codewords are ((Tr(a f(x) + b x) + c)_x, [Tr(a)], [Tr(b)]) over the
// canonical element order, trace coordinates appended last. Generators are
// materialized from a in {1, alpha, ..., alpha^{m-1}}, b likewise, c = 1;
// the rank is recomputed rather than assumed.

// p = 2, f = x^2, coordinates (..., Tr(a), Tr(b)); [2^m+2, m+2, 2].
LinearCode trace_code_translation(FieldPtr field);

// p = 2, f = x^6, coordinates (..., Tr(a), Tr(b)); the theorem needs m odd,
// even m is constructible but carries no closed-form oracle.
LinearCode trace_code_segre(FieldPtr field);

// p odd, f = x^2, coordinates (..., Tr(a), Tr(b)).
LinearCode trace_code_translation_odd(FieldPtr field);

// p odd, f = x^2, coordinates (..., Tr(a)) only; the conic subfield code.
LinearCode trace_code_conic(FieldPtr field);

// The codeword of a single defining triple (a, b, c); used for the
// repetition-multiplicity checks. include_tr_b mirrors the family layout.
std::vector<int> trace_codeword(const Field& f, std::uint64_t f_exponent,
                                Elem a, Elem b, std::uint64_t c, bool include_tr_b);

// Deletes one coordinate and re-derives the row space.
LinearCode puncture(const LinearCode& code, std::size_t coordinate);

}  // namespace ovalcode
