#include "ovalcode/field.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ovalcode {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<int>;  // constant term first

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by monic g over Z_p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
    int c = f[df];
    for (int i = 0; i <= dg; ++i) {
      long long v = f[df - dg + i] - static_cast<long long>(c) * g[i];
      f[df - dg + i] = static_cast<int>(((v % (long long)p) + p) % p);
    }
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// Trial division against every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, std::uint64_t p, unsigned m) {
  if (m == 1) return true;
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(d + 1, 0);
      std::uint64_t v = low;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned m,
                                         std::optional<std::vector<int>> modulus,
                                         std::uint64_t enumeration_limit) {
  if (!is_prime(p)) throw field_error("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw field_error("degree m must be positive");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (1ull << 63) / p) throw field_error("p^m overflows 64 bits");
    q *= p;
  }
  if (q > enumeration_limit)
    throw field_error("q = " + std::to_string(q) + " exceeds the enumeration guard");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;

  if (modulus) {
    Poly mod = *modulus;
    if (poly_deg(mod) != static_cast<int>(m) || mod[m] != 1)
      throw field_error("modulus must be monic of degree m");
    for (int& c : mod) {
      c %= static_cast<int>(p);
      if (c < 0) c += static_cast<int>(p);
    }
    if (!is_irreducible(mod, p, m))
      throw field_error("modulus is reducible over Z_p");
    f->modulus_ = mod;
  } else {
    // Smallest monic irreducible: scan the low coefficients in packed order.
    std::uint64_t low_count = q;
    bool found = false;
    for (std::uint64_t low = 0; low < low_count; ++low) {
      Poly cand(m + 1, 0);
      std::uint64_t v = low;
      for (unsigned i = 0; i < m; ++i) {
        cand[i] = static_cast<int>(v % p);
        v /= p;
      }
      cand[m] = 1;
      if (is_irreducible(cand, p, m)) {
        f->modulus_ = cand;
        found = true;
        break;
      }
    }
    if (!found) throw field_error("no irreducible modulus found");  // unreachable
  }

  // Find the smallest primitive element by checking the order via the
  // prime factorization of q-1.
  auto factors = prime_factors(q - 1);
  Elem gen = 0;
  for (Elem cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (f->pow_poly(cand, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (q == 2) primitive = (cand == 1);
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw field_error("no primitive element found");  // unreachable
  f->generator_ = gen;

  f->exp_table_.resize(q - 1);
  f->log_table_.assign(q, 0);
  Elem cur = 1;
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    f->exp_table_[k] = cur;
    f->log_table_[cur] = k;
    cur = f->mul_poly(cur, gen);
  }
  if (cur != 1) throw field_error("generator order check failed");

  f->elements_.reserve(q);
  f->elements_.push_back(0);
  f->elements_.insert(f->elements_.end(), f->exp_table_.begin(), f->exp_table_.end());

  f->trace_table_.assign(q, 0);
  for (Elem x = 1; x < q; ++x) {
    Elem s = 0;
    Elem t = x;
    for (unsigned i = 0; i < m; ++i) {
      s = f->add(s, t);
      t = f->pow_poly(t, p);
    }
    if (s >= p) throw field_error("trace left the prime subfield");
    f->trace_table_[x] = static_cast<int>(s);
  }
  return f;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  Elem mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0;
  Elem mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_table_[(log_table_[a] + log_table_[b]) % (q_ - 1)];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw field_error("inversion of zero");
  return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  // log fits in 64 bits and q-1 <= 2^20, no overflow in the product below.
  return exp_table_[(log_table_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0) throw field_error("log of zero");
  return log_table_[a];
}

int Field::quadratic_character(Elem a) const {
  if (a == 0) throw field_error("quadratic character of zero");
  if (p_ == 2) throw field_error("quadratic character needs odd q");
  return log_table_[a] % 2 == 0 ? 1 : -1;
}

bool Field::is_square(Elem a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return log_table_[a] % 2 == 0;
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
  if (c.size() > m_) throw field_error("coefficient vector too long");
  Elem a = 0;
  Elem mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    int v = i < c.size() ? c[i] : 0;
    v %= static_cast<int>(p_);
    if (v < 0) v += static_cast<int>(p_);
    a += static_cast<Elem>(v) * mult;
    mult *= p_;
  }
  return a;
}

std::string Field::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  std::ostringstream os;
  bool first = true;
  auto c = coeffs(a);
  for (unsigned i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) {
      if (c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Elem Field::mul_poly(Elem a, Elem b) const {
  std::vector<int> prod(2 * m_, 0);
  auto ca = coeffs(a), cb = coeffs(b);
  for (unsigned i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long long>(ca[i]) * cb[j]) % p_);
  }
  // Reduce by the monic modulus.
  for (int d = static_cast<int>(2 * m_) - 1; d >= static_cast<int>(m_); --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      long long v = prod[d - m_ + i] - static_cast<long long>(c) * modulus_[i];
      prod[d - m_ + i] = static_cast<int>(((v % (long long)p_) + p_) % p_);
    }
  }
  prod.resize(m_);
  return from_coeffs(prod);
}

Elem Field::pow_poly(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::vector<int>> lookup_modulus_config(const std::string& path,
                                                      std::uint64_t p, unsigned m) {
  std::ifstream in(path);
  if (!in) throw field_error("cannot open modulus config: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto parse_ints = [](const std::string& s) {
      std::vector<long long> out;
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(std::stoll(tok));
      }
      return out;
    };
    auto key = parse_ints(line.substr(0, eq));
    if (key.size() != 2) continue;
    if (static_cast<std::uint64_t>(key[0]) != p || static_cast<unsigned>(key[1]) != m)
      continue;
    auto vals = parse_ints(line.substr(eq + 1));
    return std::vector<int>(vals.begin(), vals.end());
  }
  return std::nullopt;
}

}  // namespace ovalcode
