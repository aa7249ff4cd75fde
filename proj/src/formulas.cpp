#include "ovalcode/formulas.hpp"

#include <fstream>
#include <sstream>

namespace ovalcode {

WeightDistribution PredictedDistribution::merged() const {
  WeightDistribution out;
  out.n = n;
  for (const auto& [w, mult] : rows) {
    if (mult == 0) continue;
    if (w > n) throw std::runtime_error("predicted weight exceeds the length");
    out.counts[w] += mult;
  }
  return out;
}

int sign_power(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0)
    throw std::runtime_error("sign exponent is not an integer");
  return (num / den) % 2 == 0 ? 1 : -1;
}

namespace {

bool is_power_of(std::uint64_t q, std::uint64_t p, unsigned* m_out = nullptr) {
  unsigned m = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= p;
    ++m;
  }
  if (v != q) return false;
  if (m_out) *m_out = m;
  return true;
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// i^((p-1)m/2) as an exact integer; the exponent is even in every in-scope
// parameter set, so the value is (-1)^{(p-1)m/4}.
int epsilon_term(std::uint64_t p, unsigned m) {
  std::int64_t e = static_cast<std::int64_t>(p - 1) * m / 2;
  if ((static_cast<std::int64_t>(p - 1) * m) % 2 != 0 || e % 2 != 0)
    throw std::runtime_error("sqrt(-1) power is not real in this parameter range");
  return (e / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

PredictedDistribution predict_hyperoval(std::uint64_t q) {
  unsigned m = 0;
  if (!is_power_of(q, 2, &m) || q <= 2)
    throw field_error("hyperoval codes require q = 2^m > 2");
  PredictedDistribution d;
  d.family = "hyperoval";
  d.p = 2;
  d.m = m;
  d.n = q + 2;
  d.k = 3;
  d.rows = {{0, 1},
            {q, BigInt(q + 2) * (q * q - 1) / 2},
            {q + 2, BigInt(q) * (q - 1) * (q - 1) / 2}};
  return d;
}

PredictedDistribution predict_conic(std::uint64_t q) {
  if (q % 2 == 0 || q < 3) throw field_error("conic codes require odd q >= 3");
  std::uint64_t p = 3;
  while (q % p != 0) p += 2;
  unsigned m = 0;
  if (!is_power_of(q, p, &m)) throw field_error("q must be an odd prime power");
  PredictedDistribution d;
  d.family = "conic";
  d.p = p;
  d.m = m;
  d.n = q + 1;
  d.k = 3;
  d.rows = {{0, 1},
            {q - 1, BigInt(q) * (q * q - 1) / 2},
            {q, BigInt(q) * q - 1},
            {q + 1, BigInt(q) * (q - 1) * (q - 1) / 2}};
  return d;
}

PredictedDistribution predict_translation_binary(unsigned m) {
  if (m < 2) throw field_error("translation-binary requires m >= 2");
  const std::uint64_t q = upow(2, m);
  const std::uint64_t h = q / 2;  // 2^{m-1}
  PredictedDistribution d;
  d.family = "translation-binary";
  d.p = 2;
  d.m = m;
  d.n = q + 2;
  d.k = m + 2;
  d.rows = {{0, 1},
            {2, 1},
            {q, 1},
            {q + 2, 1},
            {h, BigInt(2) * (h - 1)},
            {h + 1, BigInt(2) * q},
            {h + 2, BigInt(2) * (h - 1)}};
  return d;
}

PredictedDistribution predict_segre_binary(unsigned m) {
  if (m < 3 || m % 2 == 0)
    throw field_error("segre closed form requires odd m >= 3");
  const std::uint64_t q = upow(2, m);
  const std::uint64_t h = q / 2;            // 2^{m-1}
  const std::uint64_t s = upow(2, (m - 1) / 2);
  PredictedDistribution d;
  d.family = "segre";
  d.p = 2;
  d.m = m;
  d.n = q + 2;
  d.k = 2 * m + 1;
  d.rows = {{0, 1},
            {q, 1},
            {h, BigInt(h - 1) * (h + 2)},
            {h + 1, BigInt(q) * (h + 1)},
            {h + 2, BigInt(h) * (h - 1)},
            {h + s, BigInt(h / 2) * (h - 1)},
            {h - s, BigInt(h / 2) * (h - 1)},
            {h + s + 1, BigInt(h) * (h - 1)},
            {h - s + 1, BigInt(h) * (h - 1)},
            {h + s + 2, BigInt(h / 2) * (h + 1)},
            {h - s + 2, BigInt(h / 2) * (h + 1)}};
  return d;
}

PredictedDistribution predict_translation_odd(std::uint64_t p, unsigned m) {
  if (p == 2) throw field_error("the p-ary translation family requires odd p");
  const std::uint64_t q = upow(p, m);
  const std::uint64_t pm1 = upow(p, m - 1);
  const std::uint64_t base = pm1 * (p - 1);  // p^{m-1}(p-1)
  PredictedDistribution d;
  d.family = "translation-odd";
  d.p = p;
  d.m = m;
  d.n = q + 2;
  d.k = 2 * m + 1;
  d.rows = {{0, 1}, {q, BigInt(p - 1)}};
  if (m % 2 == 1) {
    const std::uint64_t t = upow(p, (m - 1) / 2);
    const int s = sign_power(static_cast<std::int64_t>(p - 1) * (m + 1), 4);
    d.rows.push_back({base, BigInt(pm1 - 1) * (p + pm1)});
    d.rows.push_back({base + 1, BigInt(q - pm1) * (p + 2 * pm1 - 1)});
    d.rows.push_back({base + 2, BigInt(q - pm1) * (q - pm1)});
    for (int dir : {-1, +1}) {
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>(t));
      d.rows.push_back({w, BigInt(pm1) * (p - 1) * (pm1 - 1) / 2});
      d.rows.push_back({w + 1, BigInt(pm1) * (p - 1) * (p - 1) * (2 * pm1 - 1) / 2});
      d.rows.push_back({w + 2, BigInt(pm1) * pm1 * (p - 1) * (p - 1) * (p - 1) / 2});
    }
  } else {
    const std::uint64_t u = upow(p, (m - 2) / 2);
    const int s = sign_power(static_cast<std::int64_t>(m) * (p - 1), 4);
    const int eps = epsilon_term(p, m);
    const BigInt ue = BigInt(u) * eps;
    d.rows.push_back({base, BigInt(p) * (pm1 - 1)});
    d.rows.push_back({base + 1, BigInt(q) * (p - 1)});
    for (int dir : {+1, -1}) {
      // weight offset (p-1) u s in direction dir; eps enters multiplicities
      // with the opposite orientation.
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>((p - 1) * u));
      BigInt sue = dir * ue;  // signed u*eps as it appears with this branch
      d.rows.push_back({w, BigInt(pm1) * (BigInt(pm1) - 1 - BigInt(p - 1) * sue) / 2});
      d.rows.push_back({w + 1, BigInt(pm1) * (p - 1) *
                                   (BigInt(2 * pm1) - 1 - BigInt(p - 2) * sue) / 2});
      d.rows.push_back({w + 2, BigInt(pm1) * (p - 1) * (p - 1) * (BigInt(pm1) + sue) / 2});
    }
    for (int dir : {-1, +1}) {
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>(u));
      BigInt sue = -dir * ue;
      d.rows.push_back({w, BigInt(pm1) * (p - 1) * (BigInt(pm1) - 1 - BigInt(p - 1) * sue) / 2});
      d.rows.push_back({w + 1, BigInt(pm1) * (p - 1) * (p - 1) *
                                   (BigInt(2 * pm1) - 1 - BigInt(p - 2) * sue) / 2});
      d.rows.push_back({w + 2, BigInt(pm1) * (p - 1) * (p - 1) * (p - 1) *
                                   (BigInt(pm1) + sue) / 2});
    }
  }
  return d;
}

PredictedDistribution predict_conic_subfield(std::uint64_t p, unsigned m) {
  if (p == 2) throw field_error("the conic subfield family requires odd p");
  if (m < 2)
    throw field_error("the conic subfield closed form requires m > 1");
  const std::uint64_t q = upow(p, m);
  const std::uint64_t pm1 = upow(p, m - 1);
  const std::uint64_t base = pm1 * (p - 1);
  PredictedDistribution d;
  d.family = "conic-subfield";
  d.p = p;
  d.m = m;
  d.n = q + 1;
  d.k = 2 * m + 1;
  d.rows = {{0, 1}, {q, BigInt(p - 1)}};
  if (m % 2 == 1) {
    const std::uint64_t t = upow(p, (m - 1) / 2);
    const int s = sign_power(static_cast<std::int64_t>(p - 1) * (m + 1), 4);
    d.rows.push_back({base, BigInt(p) * (q - 1) + BigInt(q) * (pm1 - 1)});
    d.rows.push_back({base + 1, BigInt(q) * (q - pm1)});
    for (int dir : {-1, +1}) {
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>(t));
      d.rows.push_back({w, BigInt(q) * (pm1 - 1) * (p - 1) / 2});
      d.rows.push_back({w + 1, BigInt(q) * pm1 * (p - 1) * (p - 1) / 2});
    }
  } else {
    const std::uint64_t u = upow(p, (m - 2) / 2);
    const int s = sign_power(static_cast<std::int64_t>(m) * (p - 1), 4);
    const int eps = epsilon_term(p, m);
    const BigInt ue = BigInt(u) * eps;
    d.rows.push_back({base, BigInt(p) * (q - 1)});
    for (int dir : {+1, -1}) {
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>((p - 1) * u));
      BigInt sue = dir * ue;
      d.rows.push_back({w, BigInt(q) * (BigInt(pm1) - 1 - BigInt(p - 1) * sue) / 2});
      d.rows.push_back({w + 1, BigInt(q) * (p - 1) * (BigInt(pm1) + sue) / 2});
    }
    for (int dir : {-1, +1}) {
      std::uint64_t w = static_cast<std::uint64_t>(
          static_cast<std::int64_t>(base) + dir * s * static_cast<std::int64_t>(u));
      BigInt sue = -dir * ue;
      d.rows.push_back({w, BigInt(q) * (p - 1) * (BigInt(pm1) - 1 - BigInt(p - 1) * sue) / 2});
      d.rows.push_back({w + 1, BigInt(q) * (p - 1) * (p - 1) * (BigInt(pm1) + sue) / 2});
    }
  }
  return d;
}

// -- counting lemmas ----------------------------------------------------------

std::uint64_t n0_translation_even_predicted(const Field& f, Elem a, Elem b) {
  if (f.p() != 2) throw field_error("even-characteristic count requires p = 2");
  return a == f.mul(b, b) ? f.q() : f.q() / 2;
}

std::uint64_t n0_translation_even_direct(const Field& f, Elem a, Elem b) {
  std::uint64_t count = 0;
  for (Elem x = 0; x < f.q(); ++x) {
    Elem v = f.add(f.mul(a, f.mul(x, x)), f.mul(b, x));
    if (f.trace(v) == 0) ++count;
  }
  return count;
}

namespace {

Elem segre_ya(const Field& f, Elem a) {
  // The unique y with a y^6 = 1: gcd(6, q-1) = 1 for odd m.
  std::uint64_t qm1 = f.q() - 1;
  std::uint64_t d = 0;
  for (std::uint64_t cand = 1; cand < qm1; ++cand)
    if ((cand * 6) % qm1 == 1) {
      d = cand;
      break;
    }
  if (d == 0) throw field_error("6 is not invertible mod q-1");
  return f.pow(f.inv(a), d);
}

int legendre(std::uint64_t p, std::int64_t v) {
  v %= static_cast<std::int64_t>(p);
  if (v < 0) v += static_cast<std::int64_t>(p);
  if (v == 0) return 0;
  for (std::int64_t y = 1; y < static_cast<std::int64_t>(p); ++y)
    if ((y * y) % static_cast<std::int64_t>(p) == v) return 1;
  return -1;
}

}  // namespace

std::vector<std::uint64_t> n0_segre_allowed(const Field& f, Elem a, Elem b) {
  if (f.p() != 2 || f.m() % 2 == 0)
    throw field_error("segre count requires p = 2, m odd");
  const std::uint64_t q = f.q();
  if (a == 0 && b == 0) return {q};
  if (a == 0) return {q / 2};
  Elem ya = segre_ya(f, a);
  if (f.trace(f.mul(b, ya)) == 0) return {q / 2};
  std::uint64_t s = 1;
  for (unsigned i = 0; i < (f.m() - 1) / 2; ++i) s *= 2;
  return {q / 2 - s, q / 2 + s};
}

std::uint64_t n0_segre_direct(const Field& f, Elem a, Elem b) {
  std::uint64_t count = 0;
  for (Elem x = 0; x < f.q(); ++x) {
    Elem x2 = f.mul(x, x);
    Elem v = f.add(f.mul(a, f.mul(f.mul(x2, x2), x2)), f.mul(b, x));
    if (f.trace(v) == 0) ++count;
  }
  return count;
}

std::uint64_t n0_odd_predicted(const Field& f, Elem a, Elem b, int c) {
  if (f.p() == 2) throw field_error("odd-characteristic count requires odd p");
  const std::uint64_t p = f.p();
  const unsigned m = f.m();
  const std::uint64_t q = f.q();
  const std::uint64_t pm1 = q / p;
  c = ((c % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
  if (a == 0 && b == 0) return c == 0 ? q : 0;
  if (a == 0) return pm1;

  // Tr(b^2 / (4a))
  Elem shift = f.mul(f.mul(b, b), f.inv(f.mul(f.scalar(4), a)));
  int tr_shift = f.trace(shift);
  if (m % 2 == 1) {
    if (c == tr_shift) return pm1;
    const std::uint64_t t = [&] {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < (m - 1) / 2; ++i) v *= p;
      return v;
    }();
    const int s1 = sign_power(static_cast<std::int64_t>(p - 1) * (m + 1), 4);
    int joint = f.quadratic_character(a) * legendre(p, c - tr_shift);
    std::int64_t val = static_cast<std::int64_t>(pm1) +
                       static_cast<std::int64_t>(t) * (joint == 1 ? s1 : -s1);
    return static_cast<std::uint64_t>(val);
  }
  const std::uint64_t u = [&] {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < (m - 2) / 2; ++i) v *= p;
    return v;
  }();
  const int s = sign_power(static_cast<std::int64_t>(m) * (p - 1), 4);
  const int eta_a = f.quadratic_character(a);
  std::int64_t val;
  if (c == tr_shift)
    val = static_cast<std::int64_t>(pm1) -
          eta_a * s * static_cast<std::int64_t>((p - 1) * u);
  else
    val = static_cast<std::int64_t>(pm1) + eta_a * s * static_cast<std::int64_t>(u);
  return static_cast<std::uint64_t>(val);
}

std::uint64_t n0_odd_direct(const Field& f, Elem a, Elem b, int c) {
  const int p = static_cast<int>(f.p());
  c = ((c % p) + p) % p;
  std::uint64_t count = 0;
  for (Elem x = 0; x < f.q(); ++x) {
    Elem v = f.add(f.mul(a, f.mul(x, x)), f.mul(b, x));
    if ((f.trace(v) + c) % p == 0) ++count;
  }
  return count;
}

std::uint64_t lemma_segre_count_predicted(const Field& f, Elem a, bool tr_b_one,
                                          bool tr_bya_one) {
  if (f.p() != 2 || f.m() % 2 == 0)
    throw field_error("the count requires p = 2, m odd");
  if (a == 0) throw field_error("a must be nonzero");
  const std::uint64_t q = f.q();
  if (a != 1) return q / 4;
  // a = 1: y_a = 1, the two trace conditions coincide.
  return tr_b_one == tr_bya_one ? q / 2 : 0;
}

std::uint64_t lemma_segre_count_direct(const Field& f, Elem a, bool tr_b_one,
                                       bool tr_bya_one) {
  Elem ya = segre_ya(f, a);
  std::uint64_t count = 0;
  for (Elem b = 0; b < f.q(); ++b) {
    bool t1 = f.trace(b) == 1;
    bool t2 = f.trace(f.mul(b, ya)) == 1;
    if (t1 == tr_b_one && t2 == tr_bya_one) ++count;
  }
  return count;
}

std::uint64_t lemma_eta_trace_count_predicted(std::uint64_t p, unsigned m, int sign,
                                              bool trace_zero) {
  if (p == 2) throw field_error("the count requires odd p");
  std::uint64_t pm1 = 1;
  for (unsigned i = 0; i + 1 < m; ++i) pm1 *= p;
  if (m % 2 == 1) {
    if (trace_zero) return (pm1 - 1) / 2;
    return pm1 * (p - 1) / 2;
  }
  std::uint64_t u = 1;
  for (unsigned i = 0; 2 * i + 2 < m; ++i) u *= p;  // p^{(m-2)/2}
  const int eps = epsilon_term(p, m);
  std::int64_t term = static_cast<std::int64_t>(p - 1) * static_cast<std::int64_t>(u) * eps;
  if (trace_zero) {
    std::int64_t v = static_cast<std::int64_t>(pm1) - 1 - sign * term;
    return static_cast<std::uint64_t>(v / 2);
  }
  std::int64_t inner = static_cast<std::int64_t>(pm1) +
                       sign * static_cast<std::int64_t>(u) * eps;
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p - 1) * inner / 2);
}

std::uint64_t lemma_eta_trace_count_direct(const Field& f, int sign, bool trace_zero) {
  std::uint64_t count = 0;
  for (Elem a = 1; a < f.q(); ++a) {
    if (f.quadratic_character(a) != sign) continue;
    if ((f.trace(a) == 0) == trace_zero) ++count;
  }
  return count;
}

// -- optimality ---------------------------------------------------------------

std::string to_string(OptimalityLabel label) {
  switch (label) {
    case OptimalityLabel::Optimal: return "Optimal";
    case OptimalityLabel::AlmostOptimal: return "AlmostOptimal";
    case OptimalityLabel::DistanceOptimalBySpherePacking:
      return "DistanceOptimalBySpherePacking";
    case OptimalityLabel::Unknown: return "Unknown";
  }
  return "Unknown";
}

void BestKnownTable::add(std::uint64_t p, std::uint64_t n, std::uint64_t k,
                         std::uint64_t d_best, std::string source) {
  rows_[{p, n, k}] = {d_best, std::move(source)};
}

std::optional<std::uint64_t> BestKnownTable::lookup(std::uint64_t p, std::uint64_t n,
                                                    std::uint64_t k) const {
  auto it = rows_.find({p, n, k});
  if (it == rows_.end()) return std::nullopt;
  return it->second.first;
}

BestKnownTable BestKnownTable::bundled() {
  BestKnownTable t;
  // Binary subfield codes and their duals.
  t.add(2, 6, 4, 2, "paper");
  t.add(2, 6, 2, 4, "paper");
  t.add(2, 10, 7, 2, "paper");
  t.add(2, 34, 11, 12, "paper");
  t.add(2, 130, 15, 56, "paper");
  // p-ary translation subfield codes.
  t.add(3, 5, 3, 2, "paper");
  t.add(5, 7, 3, 4, "paper");
  t.add(7, 9, 3, 6, "paper");
  t.add(3, 29, 7, 15, "paper");
  t.add(3, 83, 9, 49, "paper");  // [83,9,48] is almost optimal
  t.add(5, 127, 7, 95, "paper");
  // Conic subfield codes.
  t.add(3, 10, 5, 5, "paper");   // [10,5,4] is almost optimal
  t.add(3, 28, 7, 15, "paper");
  t.add(3, 82, 9, 48, "paper");
  t.add(5, 26, 5, 17, "paper");  // [26,5,16] is almost optimal
  t.add(5, 126, 7, 95, "paper");
  return t;
}

BestKnownTable BestKnownTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open best-known table: " + path);
  BestKnownTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      first = false;
      if (cells.size() >= 1 && cells[0] == "p") continue;  // header
    }
    if (cells.size() < 4)
      throw std::runtime_error("malformed best-known table row: " + line);
    t.add(std::stoull(cells[0]), std::stoull(cells[1]), std::stoull(cells[2]),
          std::stoull(cells[3]), cells.size() > 4 ? cells[4] : "");
  }
  return t;
}

OptimalityLabel optimality_label(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                 std::uint64_t p, const BestKnownTable& table) {
  if (auto best = table.lookup(p, n, k)) {
    if (d == *best) return OptimalityLabel::Optimal;
    if (d + 1 == *best) return OptimalityLabel::AlmostOptimal;
  }
  if (d == sphere_packing_max_d(n, k, p))
    return OptimalityLabel::DistanceOptimalBySpherePacking;
  return OptimalityLabel::Unknown;
}

}  // namespace ovalcode
