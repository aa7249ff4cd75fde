#include "ovalcode/charsum.hpp"

#include <cmath>
#include <numbers>

namespace ovalcode {

void CharacterSum::add(const CharacterSum& other) {
  if (other.order() != order()) throw field_error("character sum order mismatch");
  for (std::size_t t = 0; t < counts_.size(); ++t) counts_[t] += other.counts_[t];
  terms_ += other.terms_;
}

std::complex<double> CharacterSum::value() const {
  std::complex<double> z{0.0, 0.0};
  const double n = static_cast<double>(counts_.size());
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    if (counts_[t] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / n;
    z += static_cast<double>(counts_[t]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::optional<long long> CharacterSum::norm_squared_exact() const {
  const std::size_t n = counts_.size();
  if (!is_prime(n)) return std::nullopt;
  // |z|^2 = sum_d r_d zeta^d with r_d the cyclic autocorrelation.
  std::vector<long long> r(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (counts_[s] == 0) continue;
    for (std::size_t t = 0; t < n; ++t)
      r[(s + n - t) % n] += counts_[s] * counts_[t];
  }
  for (std::size_t d = 2; d < n; ++d)
    if (r[d] != r[1]) return std::nullopt;
  return r[0] - (n > 1 ? r[1] : 0);
}

bool CharacterSum::value_equals(const CharacterSum& other) const {
  if (order() != other.order()) return false;
  if (!is_prime(order())) throw field_error("exact sum equality needs a prime order");
  long long diff = counts_[0] - other.counts_[0];
  for (std::size_t t = 1; t < counts_.size(); ++t)
    if (counts_[t] - other.counts_[t] != diff) return false;
  return true;
}

CharacterSum additive_character(const Field& f, Elem a, Elem x) {
  return CharacterSum::unit(f.p(), static_cast<std::uint64_t>(f.trace(f.mul(a, x))));
}

CharacterSum multiplicative_character(const Field& f, std::uint64_t j, Elem x) {
  if (x == 0) throw field_error("multiplicative character of zero");
  if (j > f.q() - 2) throw field_error("character index out of range");
  return CharacterSum::unit(f.q() - 1, (j * f.log(x)) % (f.q() - 1));
}

CharacterSum gauss_sum_exhaustive(const Field& f, std::uint64_t j) {
  const std::uint64_t qm1 = f.q() - 1;
  const std::uint64_t n = f.p() * qm1;  // gcd(p, q-1) = 1
  CharacterSum s(n);
  for (Elem x = 1; x < f.q(); ++x) {
    std::uint64_t mult_e = (j * f.log(x)) % qm1;   // zeta_{q-1}^{jk}
    std::uint64_t add_e = static_cast<std::uint64_t>(f.trace(x));
    s.add_term((mult_e * f.p() + add_e * qm1) % n);
  }
  return s;
}

CharacterSum gauss_sum_quadratic_exhaustive(const Field& f) {
  if (f.p() == 2) throw field_error("quadratic Gauss sum needs odd q");
  CharacterSum s(f.p());
  for (Elem x = 0; x < f.q(); ++x)
    s.add_term(static_cast<std::uint64_t>(f.trace(f.mul(x, x))));
  return s;
}

std::complex<double> gauss_sum_quadratic_closed_form(const Field& f) {
  if (f.p() == 2) throw field_error("quadratic Gauss sum needs odd p");
  const double root_q = std::sqrt(static_cast<double>(f.q()));
  const double sign = f.m() % 2 == 0 ? -1.0 : 1.0;  // (-1)^{m-1}
  if (f.p() % 4 == 1) return {sign * root_q, 0.0};
  // p = 3 mod 4: (-1)^{m-1} i^m sqrt(q)
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return sign * i_pow[f.m() % 4] * root_q;
}

CharacterSum weil_sum_quadratic_exhaustive(const Field& f, const QuadraticPoly& poly) {
  CharacterSum s(f.p());
  for (Elem c = 0; c < f.q(); ++c) {
    Elem v = f.add(f.add(f.mul(poly.a2, f.mul(c, c)), f.mul(poly.a1, c)), poly.a0);
    s.add_term(static_cast<std::uint64_t>(f.trace(v)));
  }
  return s;
}

std::complex<double> weil_sum_quadratic_closed(const Field& f, const QuadraticPoly& poly) {
  if (f.p() == 2) throw field_error("closed quadratic Weil sum needs odd q");
  if (poly.a2 == 0) throw field_error("closed quadratic Weil sum needs a2 != 0");
  Elem four = f.scalar(4);
  Elem shift = f.sub(poly.a0, f.mul(f.mul(poly.a1, poly.a1), f.inv(f.mul(four, poly.a2))));
  double angle = 2.0 * std::numbers::pi * f.trace(shift) / static_cast<double>(f.p());
  std::complex<double> chi{std::cos(angle), std::sin(angle)};
  double eta = static_cast<double>(f.quadratic_character(poly.a2));
  return chi * eta * gauss_sum_quadratic_closed_form(f);
}

long long weil_sum_even_char_closed(const Field& f, const QuadraticPoly& poly, Elem b) {
  if (f.p() != 2) throw field_error("even-characteristic Weil sum needs p = 2");
  if (b == 0) throw field_error("character must be nontrivial");
  if (poly.a2 != f.mul(b, f.mul(poly.a1, poly.a1))) return 0;
  long long sign = f.trace(f.mul(b, poly.a0)) == 0 ? 1 : -1;
  return sign * static_cast<long long>(f.q());
}

long long weil_sum_even_char_exhaustive(const Field& f, const QuadraticPoly& poly, Elem b) {
  if (f.p() != 2) throw field_error("even-characteristic Weil sum needs p = 2");
  long long s = 0;
  for (Elem c = 0; c < f.q(); ++c) {
    Elem v = f.add(f.add(f.mul(poly.a2, f.mul(c, c)), f.mul(poly.a1, c)), poly.a0);
    s += f.trace(f.mul(b, v)) == 0 ? 1 : -1;
  }
  return s;
}

namespace {

Elem eval_affine_p_poly(const Field& f, const AffinePPoly& poly, Elem x) {
  Elem v = poly.constant;
  Elem frob = x;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    v = f.add(v, f.mul(poly.coeffs[i], frob));
    frob = f.pow(frob, f.p());
  }
  return v;
}

}  // namespace

CharacterSum weil_sum_affine_p_poly_closed(const Field& f, const AffinePPoly& poly, Elem b) {
  if (b == 0) throw field_error("character must be nontrivial");
  if (poly.coeffs.empty()) throw field_error("affine p-polynomial needs a_0");
  // b a_r + b^p a_{r-1}^p + ... + b^{p^r} a_0^{p^r} = 0
  Elem cond = 0;
  const std::size_t r = poly.coeffs.size() - 1;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    std::uint64_t pe = 1;
    for (std::size_t j = 0; j < r - i; ++j) pe *= f.p();
    cond = f.add(cond, f.mul(f.pow(b, pe), f.pow(poly.coeffs[i], pe)));
  }
  CharacterSum s(f.p());
  if (cond != 0) return s;  // empty sum, value 0 with zero terms
  s.add_term(static_cast<std::uint64_t>(f.trace(f.mul(b, poly.constant))),
             static_cast<long long>(f.q()));
  return s;
}

CharacterSum weil_sum_affine_p_poly_exhaustive(const Field& f, const AffinePPoly& poly, Elem b) {
  CharacterSum s(f.p());
  for (Elem c = 0; c < f.q(); ++c)
    s.add_term(static_cast<std::uint64_t>(f.trace(f.mul(b, eval_affine_p_poly(f, poly, c)))));
  return s;
}

DeltaSegre delta_sum_segre(const Field& f, Elem a, Elem b) {
  if (f.p() != 2) throw field_error("Segre delta sum needs p = 2");
  if (f.m() % 2 == 0) throw field_error("Segre delta sum needs odd m");
  DeltaSegre out;
  for (Elem x = 0; x < f.q(); ++x) {
    Elem x2 = f.mul(x, x);
    Elem x6 = f.mul(f.mul(x2, x2), x2);
    Elem v = f.add(f.mul(a, x6), f.mul(b, x));
    out.value += f.trace(v) == 0 ? 1 : -1;
  }
  if (a != 0 && out.value != 0)
    out.sign = out.value > 0 ? 1 : -1;
  return out;
}

}  // namespace ovalcode
