#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ovalcode/linear_code.hpp"

namespace ovalcode {

// Homogeneous triple normalized so the first nonzero coordinate is 1; two
// triples name the same point iff their normalized forms are equal.
struct ProjectivePoint {
  std::array<Elem, 3> x{0, 0, 0};

  auto operator<=>(const ProjectivePoint&) const = default;
};

ProjectivePoint normalize_point(const Field& f, std::array<Elem, 3> raw);

using ProjectivePointSet = std::vector<ProjectivePoint>;

struct ArcResult {
  bool is_arc = false;
  std::vector<ProjectivePoint> witness;  // a collinear triple on failure
};

// True iff every 3-subset spans: all 3x3 determinants nonzero.
ArcResult is_arc(const Field& f, const ProjectivePointSet& points);

/// Polynomial over GF(q) given as a coefficient list, constant term first.
/// `verified` is only set by is_o_polynomial / verify_o_polynomial.
struct OPolynomial {
  std::vector<Elem> coeffs;
  bool verified = false;
};

Elem poly_eval(const Field& f, const std::vector<Elem>& coeffs, Elem x);

struct OPolyCheck {
  bool ok = false;
  std::string reason;
};

// Exhaustive check of both o-polynomial conditions: f permutes GF(q) with
// f(0)=0, f(1)=1, and g_a(x) = (f(x+a)+f(a)) x^{q-2} permutes GF(q) for
// every a. Refuses q > 2^10 rather than sampling.
OPolyCheck is_o_polynomial(const Field& f, const std::vector<Elem>& coeffs);

// Runs the check and returns a verified OPolynomial on success.
OPolynomial verify_o_polynomial(const Field& f, std::vector<Elem> coeffs);

// {(f(c), c, 1)} + (1,0,0) + (0,1,0); q + 2 points, p = 2, f verified.
ProjectivePointSet hyperoval_points(const Field& f, const OPolynomial& opoly);

// {(x^2, x, 1)} + (1,0,0); q + 1 points, q odd.
ProjectivePointSet conic_points(const Field& f);

// Exact count of lines of PG(2,q) per intersection size with the set.
std::map<std::uint64_t, std::uint64_t> line_intersection_profile(
    const Field& f, const ProjectivePointSet& points);

// 3 x (q+2) / 3 x (q+1) codes whose columns are the construction's points:
// affine columns in canonical element order, special points last.
LinearCode hyperoval_code(FieldPtr f, const OPolynomial& opoly);
LinearCode conic_code(FieldPtr f);

}  // namespace ovalcode
