#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ovalcode/field.hpp"
#include "ovalcode/linear_code.hpp"

namespace ovalcode {

/// A closed-form weight distribution as the table states it: symbolic rows
/// evaluated to exact integers, before merging coinciding weights.
struct PredictedDistribution {
  std::string family;
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::pair<std::uint64_t, BigInt>> rows;

  // Rows with equal weight summed; the comparable WeightDistribution.
  WeightDistribution merged() const;
};

// (-1)^num/den with an exact integrality check on the exponent.
int sign_power(std::int64_t num, std::int64_t den);

// Hyperoval code over GF(q), q = 2^m > 2: three-row two-weight distribution.
PredictedDistribution predict_hyperoval(std::uint64_t q);

// Conic code over odd GF(q): the four-term enumerator.
PredictedDistribution predict_conic(std::uint64_t q);

// Binary translation subfield code, m >= 2.
PredictedDistribution predict_translation_binary(unsigned m);

// Binary Segre subfield code, m odd >= 3.
PredictedDistribution predict_segre_binary(unsigned m);

// p-ary translation subfield code, p odd.
PredictedDistribution predict_translation_odd(std::uint64_t p, unsigned m);

// p-ary conic subfield code, p odd, m >= 2.
PredictedDistribution predict_conic_subfield(std::uint64_t p, unsigned m);

// -- counting lemmas ----------------------------------------------------------

// #{x : Tr(a x^2 + b x) = 0} in characteristic 2: q when a = b^2, else q/2.
std::uint64_t n0_translation_even_predicted(const Field& f, Elem a, Elem b);
std::uint64_t n0_translation_even_direct(const Field& f, Elem a, Elem b);

// #{x : Tr(a x^6 + b x) = 0}, p = 2, m odd. The prediction is a set: one
// value when determined, the +- pair when the proof leaves the sign open.
std::vector<std::uint64_t> n0_segre_allowed(const Field& f, Elem a, Elem b);
std::uint64_t n0_segre_direct(const Field& f, Elem a, Elem b);

// #{x : Tr(a x^2 + b x) + c = 0}, p odd; fully determined closed form.
std::uint64_t n0_odd_predicted(const Field& f, Elem a, Elem b, int c);
std::uint64_t n0_odd_direct(const Field& f, Elem a, Elem b, int c);

// The four b-counts indexed by (Tr(b), Tr(b y_a)) with a y_a^6 = 1;
// p = 2, m odd, a != 0.
std::uint64_t lemma_segre_count_predicted(const Field& f, Elem a, bool tr_b_one,
                                          bool tr_bya_one);
std::uint64_t lemma_segre_count_direct(const Field& f, Elem a, bool tr_b_one,
                                       bool tr_bya_one);

// #{a != 0 : eta(a) = sign, Tr(a) = 0 / != 0}; p odd.
std::uint64_t lemma_eta_trace_count_predicted(std::uint64_t p, unsigned m, int sign,
                                              bool trace_zero);
std::uint64_t lemma_eta_trace_count_direct(const Field& f, int sign, bool trace_zero);

// -- optimality ---------------------------------------------------------------

enum class OptimalityLabel { Optimal, AlmostOptimal, DistanceOptimalBySpherePacking, Unknown };

std::string to_string(OptimalityLabel label);

/// Best-known-codes lookup (p, n, k) -> d_best, with a provenance string
/// per row.
class BestKnownTable {
 public:
  void add(std::uint64_t p, std::uint64_t n, std::uint64_t k, std::uint64_t d_best,
           std::string source);
  std::optional<std::uint64_t> lookup(std::uint64_t p, std::uint64_t n,
                                      std::uint64_t k) const;

  static BestKnownTable bundled();
  static BestKnownTable load_csv(const std::string& path);  // header p,n,k,d_best,source

 private:
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>,
           std::pair<std::uint64_t, std::string>> rows_;
};

OptimalityLabel optimality_label(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                 std::uint64_t p, const BestKnownTable& table);

}  // namespace ovalcode
