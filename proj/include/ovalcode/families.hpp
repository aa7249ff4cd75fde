#pragma once

#include <optional>
#include <string>

#include "ovalcode/formulas.hpp"
#include "ovalcode/geometry.hpp"
#include "ovalcode/subfield.hpp"

#include <json.hpp>

namespace ovalcode {

enum class Family {
  HyperovalTranslation,  // [q+2,3,q] over GF(2^m), columns from f(x)=x^2
  HyperovalSegre,        // [q+2,3,q] over GF(2^m), m odd, f(x)=x^6
  Conic,                 // [q+1,3,q-1] over odd GF(q)
  TranslationBinary,     // binary subfield code of the x^2 hyperoval code
  Segre,                 // binary subfield code of the x^6 hyperoval code
  TranslationOdd,        // p-ary analogue of the translation family, p odd
  ConicSubfield,         // p-ary subfield code of the conic code
};

Family parse_family(const std::string& name);
std::string family_name(Family family);

// Characteristic and m-parity preconditions, checked before any field is
// built. Throws field_error with a usable message.
void check_family_params(Family family, std::uint64_t p, unsigned m);

struct BuiltCode {
  Family family;
  FieldPtr field;  // the extension field GF(p^m) the construction lives in
  LinearCode code;
};

BuiltCode build_family_code(Family family, std::uint64_t p, unsigned m,
                            const std::optional<std::vector<int>>& modulus = std::nullopt);

// Closed-form oracle per family; nullopt when none is proven (Segre, even m).
std::optional<PredictedDistribution> predict_family(Family family, std::uint64_t p,
                                                    unsigned m);

struct VerifyReport {
  Family family;
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t k = 0;        // recomputed dimension
  std::uint64_t code_q = 0;   // alphabet of the constructed code
  WeightDistribution predicted;
  WeightDistribution enumerated;
  bool match = false;
  // Weights where the two distributions disagree.
  std::vector<std::uint64_t> mismatch_rows;
  // Dual parameters when the search certifies them within budget.
  std::optional<std::uint64_t> dual_k;
  std::optional<std::uint64_t> dual_d;
};

VerifyReport verify_family(Family family, std::uint64_t p, unsigned m,
                           std::uint64_t budget = kDefaultEnumerationBudget,
                           const std::optional<std::vector<int>>& modulus = std::nullopt);

// -- serialization ------------------------------------------------------------

// BigInt as a JSON number when it fits 64 bits, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& v);

nlohmann::json distribution_to_json(const WeightDistribution& dist, std::uint64_t k,
                                    std::uint64_t q);
std::string distribution_to_csv(const WeightDistribution& dist);

nlohmann::json point_set_to_json(const Field& f, const ProjectivePointSet& points);

// Code file: header (family, p, m, modulus, basis) plus generator rows, so a
// run reproduces bit-exactly.
nlohmann::json code_to_json(const BuiltCode& built);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace ovalcode
