#include "ovalcode/geometry.hpp"

#include <algorithm>
#include <set>

namespace ovalcode {

ProjectivePoint normalize_point(const Field& f, std::array<Elem, 3> raw) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (raw[i] != 0) {
      Elem scale = f.inv(raw[i]);
      for (std::size_t j = 0; j < 3; ++j) raw[j] = f.mul(scale, raw[j]);
      return {raw};
    }
  }
  throw field_error("zero triple is not a projective point");
}

namespace {

Elem det3(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b,
          const ProjectivePoint& c) {
  Elem d = 0;
  d = f.add(d, f.mul(a.x[0], f.sub(f.mul(b.x[1], c.x[2]), f.mul(b.x[2], c.x[1]))));
  d = f.sub(d, f.mul(a.x[1], f.sub(f.mul(b.x[0], c.x[2]), f.mul(b.x[2], c.x[0]))));
  d = f.add(d, f.mul(a.x[2], f.sub(f.mul(b.x[0], c.x[1]), f.mul(b.x[1], c.x[0]))));
  return d;
}

}  // namespace

ArcResult is_arc(const Field& f, const ProjectivePointSet& points) {
  if (points.size() < 3) throw field_error("an arc needs at least 3 points");
  std::set<ProjectivePoint> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw field_error("duplicate projective points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (det3(f, points[i], points[j], points[k]) == 0)
          return {false, {points[i], points[j], points[k]}};
  return {true, {}};
}

Elem poly_eval(const Field& f, const std::vector<Elem>& coeffs, Elem x) {
  Elem v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    v = f.add(f.mul(v, x), coeffs[i]);
  return v;
}

OPolyCheck is_o_polynomial(const Field& f, const std::vector<Elem>& coeffs) {
  if (f.p() != 2) throw field_error("o-polynomials require characteristic 2");
  if (f.q() > (1ull << 10))
    throw budget_error("o-polynomial verification refuses q > 2^10");
  if (coeffs.size() > f.q()) return {false, "deg(f) must be < q"};
  const std::uint64_t q = f.q();

  std::vector<Elem> image(q);
  for (Elem x = 0; x < q; ++x) image[x] = poly_eval(f, coeffs, x);
  if (image[0] != 0) return {false, "f(0) != 0"};
  if (image[1] != 1) return {false, "f(1) != 1"};
  {
    std::vector<bool> hit(q, false);
    for (Elem x = 0; x < q; ++x) hit[image[x]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      return {false, "f is not a permutation"};
  }

  // Condition (ii): g_a(x) = (f(x+a)+f(a)) x^{q-2} permutes GF(q) for all a.
  // x^{q-2} is the inverse for x != 0 and zero at x = 0.
  for (Elem a = 0; a < q; ++a) {
    std::vector<bool> hit(q, false);
    Elem fa = image[a];
    for (Elem x = 0; x < q; ++x) {
      Elem g = x == 0 ? 0 : f.mul(f.add(image[f.add(x, a)], fa), f.inv(x));
      if (hit[g])
        return {false, "g_a is not a permutation for a = " + f.to_string(a)};
      hit[g] = true;
    }
  }
  return {true, ""};
}

OPolynomial verify_o_polynomial(const Field& f, std::vector<Elem> coeffs) {
  auto check = is_o_polynomial(f, coeffs);
  if (!check.ok) throw field_error("not an o-polynomial: " + check.reason);
  return {std::move(coeffs), true};
}

ProjectivePointSet hyperoval_points(const Field& f, const OPolynomial& opoly) {
  if (f.p() != 2) throw field_error("hyperovals require even q");
  if (!opoly.verified) throw field_error("o-polynomial is not verified");
  ProjectivePointSet pts;
  pts.reserve(f.q() + 2);
  for (Elem c : f.elements())
    pts.push_back(normalize_point(f, {poly_eval(f, opoly.coeffs, c), c, 1}));
  pts.push_back(normalize_point(f, {1, 0, 0}));
  pts.push_back(normalize_point(f, {0, 1, 0}));
  return pts;
}

ProjectivePointSet conic_points(const Field& f) {
  if (f.p() == 2) throw field_error("the conic construction requires odd q");
  ProjectivePointSet pts;
  pts.reserve(f.q() + 1);
  for (Elem x : f.elements())
    pts.push_back(normalize_point(f, {f.mul(x, x), x, 1}));
  pts.push_back(normalize_point(f, {1, 0, 0}));
  return pts;
}

std::map<std::uint64_t, std::uint64_t> line_intersection_profile(
    const Field& f, const ProjectivePointSet& points) {
  std::map<std::uint64_t, std::uint64_t> profile;
  // Canonical line representatives: [1,b,c], [0,1,c], [0,0,1].
  std::vector<std::array<Elem, 3>> lines;
  for (Elem b = 0; b < f.q(); ++b)
    for (Elem c = 0; c < f.q(); ++c) lines.push_back({1, b, c});
  for (Elem c = 0; c < f.q(); ++c) lines.push_back({0, 1, c});
  lines.push_back({0, 0, 1});

  for (const auto& line : lines) {
    std::uint64_t hits = 0;
    for (const auto& pt : points) {
      Elem dot = 0;
      for (std::size_t i = 0; i < 3; ++i) dot = f.add(dot, f.mul(line[i], pt.x[i]));
      if (dot == 0) ++hits;
    }
    profile[hits] += 1;
  }
  return profile;
}

namespace {

LinearCode code_from_columns(FieldPtr f, const std::vector<std::array<Elem, 3>>& raw_columns) {
  Matrix g(f, 3, raw_columns.size());
  for (std::size_t c = 0; c < raw_columns.size(); ++c)
    for (std::size_t r = 0; r < 3; ++r)
      g.at(r, c) = raw_columns[c][r];
  return LinearCode(std::move(g));
}

}  // namespace

LinearCode hyperoval_code(FieldPtr f, const OPolynomial& opoly) {
  if (f->p() != 2) throw field_error("hyperoval codes require even q");
  if (!opoly.verified) throw field_error("o-polynomial is not verified");
  std::vector<std::array<Elem, 3>> cols;
  for (Elem c : f->elements())
    cols.push_back({poly_eval(*f, opoly.coeffs, c), c, 1});
  cols.push_back({1, 0, 0});
  cols.push_back({0, 1, 0});
  return code_from_columns(f, cols);
}

LinearCode conic_code(FieldPtr f) {
  if (f->p() == 2) throw field_error("conic codes require odd q");
  std::vector<std::array<Elem, 3>> cols;
  for (Elem x : f->elements())
    cols.push_back({f->mul(x, x), x, 1});
  cols.push_back({1, 0, 0});
  return code_from_columns(f, cols);
}

}  // namespace ovalcode
