#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovalcode {

// A field element is a packed base-p coefficient vector: the residue
// polynomial c0 + c1*x + ... + c_{m-1}*x^{m-1} is stored as the integer
// sum(c_i * p^i). Elements of GF(p) therefore coincide with 0..p-1.
using Elem = std::uint64_t;

class field_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Concrete GF(p^m) with a verified irreducible modulus, a verified
/// primitive element, and full exp/log/trace tables. Immutable after
/// construction; all operations are pure.
class Field {
 public:
  // modulus, when given, is the coefficient list constant-term first and
  // must be monic of degree m. Without it the lexicographically smallest
  // monic irreducible is found by deterministic search.
  static std::shared_ptr<const Field> make(
      std::uint64_t p, unsigned m,
      std::optional<std::vector<int>> modulus = std::nullopt,
      std::uint64_t enumeration_limit = (1ull << 20));

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // Embed a scalar of Z_p; c may exceed p and is reduced.
  Elem scalar(std::uint64_t c) const { return c % p_; }

  // Tr_{q/p}(x), a value in [0, p).
  int trace(Elem a) const { return trace_table_[a]; }

  // Canonical order: 0, g^0, g^1, ..., g^{q-2}.
  const std::vector<Elem>& elements() const { return elements_; }

  // Discrete log base the generator; a must be nonzero.
  std::uint64_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_table_[k % (q_ - 1)]; }

  // Quadratic character eta(a) in {+1,-1}; a must be nonzero, q odd.
  int quadratic_character(Elem a) const;

  bool is_square(Elem a) const;

  // Coefficients of the residue polynomial, constant term first, length m.
  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;

  std::string to_string(Elem a) const;

 private:
  Field() = default;

  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<int> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_table_;        // exp_table_[k] = g^k, k in [0, q-1)
  std::vector<std::uint64_t> log_table_;
  std::vector<int> trace_table_;
  std::vector<Elem> elements_;

  Elem mul_poly(Elem a, Elem b) const;  // schoolbook, no tables
  Elem pow_poly(Elem a, std::uint64_t e) const;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Parses a modulus config file of lines "p,m = c0,c1,...,cm" and returns
// the entry for (p, m) if present.
std::optional<std::vector<int>> lookup_modulus_config(
    const std::string& path, std::uint64_t p, unsigned m);

}  // namespace ovalcode
