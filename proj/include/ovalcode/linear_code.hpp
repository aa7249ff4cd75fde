#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ovalcode/field.hpp"

namespace ovalcode {

using BigInt = boost::multiprecision::cpp_int;

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Matrix {
  FieldPtr field;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> entries;  // row-major

  Matrix() = default;
  Matrix(FieldPtr f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), entries(r * c, 0) {}

  Elem& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Reduced row-echelon form; the returned matrix keeps the original shape
// (zero rows at the bottom) and rank is written through the pointer.
Matrix rref(const Matrix& mat, std::size_t* rank = nullptr);

std::size_t rank(const Matrix& mat);

struct WeightDistribution {
  std::uint64_t n = 0;
  std::map<std::uint64_t, BigInt> counts;

  BigInt total() const;
  std::uint64_t min_positive_weight() const;  // throws when only weight 0 exists
  BigInt at(std::uint64_t w) const;
  bool operator==(const WeightDistribution&) const = default;
};

/// A linear code defined by the row space of its generator matrix. The
/// generator may be rank-deficient; the dimension is the recomputed rank.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  const FieldPtr& field() const { return generator_.field; }
  const Matrix& generator() const { return generator_; }
  const Matrix& row_basis() const { return basis_; }  // k nonzero rref rows
  std::uint64_t n() const { return generator_.cols; }
  std::uint64_t k() const { return k_; }

 private:
  Matrix generator_;
  Matrix basis_;
  std::uint64_t k_ = 0;
};

constexpr std::uint64_t kDefaultEnumerationBudget = 1ull << 28;

// Exact weight counts by iterating all q^k messages over the row basis.
WeightDistribution weight_distribution(const LinearCode& code,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

std::uint64_t minimum_distance(const LinearCode& code,
                               std::uint64_t budget = kDefaultEnumerationBudget);
bool is_mds(const LinearCode& code, std::uint64_t budget = kDefaultEnumerationBudget);
bool is_almost_mds(const LinearCode& code, std::uint64_t budget = kDefaultEnumerationBudget);

// Generator of the null space; throws when the code is the full space.
LinearCode dual_code(const LinearCode& code);
bool has_trivial_dual(const LinearCode& code);

// Exact MacWilliams identity over the integers.
WeightDistribution macwilliams_transform(const WeightDistribution& dist,
                                         std::uint64_t n, std::uint64_t k, std::uint64_t q);

struct DualDistanceResult {
  std::optional<std::uint64_t> d;       // empty means >= limit + 1
  std::vector<std::size_t> certificate; // dependent column set when found
};

// Smallest s <= limit with s linearly dependent columns of the generator;
// this is the dual minimum distance, the generator being the dual's check
// matrix.
DualDistanceResult dual_min_distance_via_columns(const LinearCode& code,
                                                 std::size_t limit = 6);

// Largest d admitted by the sphere-packing bound for [n, k] over GF(q).
std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// Row-space equality via mutual rank of the stacked generators.
bool codes_equal_as_sets(const LinearCode& a, const LinearCode& b);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt big_pow(std::uint64_t base, std::uint64_t e);

}  // namespace ovalcode
