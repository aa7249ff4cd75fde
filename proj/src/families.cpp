#include "ovalcode/families.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace ovalcode {

Family parse_family(const std::string& name) {
  if (name == "hyperoval-translation") return Family::HyperovalTranslation;
  if (name == "hyperoval-segre") return Family::HyperovalSegre;
  if (name == "conic") return Family::Conic;
  if (name == "translation-binary") return Family::TranslationBinary;
  if (name == "segre") return Family::Segre;
  if (name == "translation-odd") return Family::TranslationOdd;
  if (name == "conic-subfield") return Family::ConicSubfield;
  throw field_error("unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::HyperovalTranslation: return "hyperoval-translation";
    case Family::HyperovalSegre: return "hyperoval-segre";
    case Family::Conic: return "conic";
    case Family::TranslationBinary: return "translation-binary";
    case Family::Segre: return "segre";
    case Family::TranslationOdd: return "translation-odd";
    case Family::ConicSubfield: return "conic-subfield";
  }
  throw field_error("unknown family");
}

void check_family_params(Family family, std::uint64_t p, unsigned m) {
  if (m == 0) throw field_error("m must be positive");
  switch (family) {
    case Family::HyperovalTranslation:
      if (p != 2 || m < 2) throw field_error("hyperoval-translation needs p = 2, m >= 2");
      break;
    case Family::HyperovalSegre:
      if (p != 2 || m < 3 || m % 2 == 0)
        throw field_error("hyperoval-segre needs p = 2 and odd m >= 3");
      break;
    case Family::Conic:
      if (p == 2 || !is_prime(p)) throw field_error("conic needs an odd prime p");
      break;
    case Family::TranslationBinary:
      if (p != 2 || m < 2) throw field_error("translation-binary needs p = 2, m >= 2");
      break;
    case Family::Segre:
      if (p != 2 || m < 3) throw field_error("segre needs p = 2, m >= 3");
      break;
    case Family::TranslationOdd:
      if (p == 2 || !is_prime(p)) throw field_error("translation-odd needs an odd prime p");
      break;
    case Family::ConicSubfield:
      if (p == 2 || !is_prime(p)) throw field_error("conic-subfield needs an odd prime p");
      break;
  }
}

BuiltCode build_family_code(Family family, std::uint64_t p, unsigned m,
                            const std::optional<std::vector<int>>& modulus) {
  check_family_params(family, p, m);
  FieldPtr f = Field::make(p, m, modulus);
  switch (family) {
    case Family::HyperovalTranslation: {
      auto opoly = verify_o_polynomial(*f, {0, 0, 1});  // x^2
      return {family, f, hyperoval_code(f, opoly)};
    }
    case Family::HyperovalSegre: {
      std::vector<Elem> coeffs(7, 0);
      coeffs[6] = 1;  // x^6
      auto opoly = verify_o_polynomial(*f, coeffs);
      return {family, f, hyperoval_code(f, opoly)};
    }
    case Family::Conic:
      return {family, f, conic_code(f)};
    case Family::TranslationBinary:
      return {family, f, trace_code_translation(f)};
    case Family::Segre:
      return {family, f, trace_code_segre(f)};
    case Family::TranslationOdd:
      return {family, f, trace_code_translation_odd(f)};
    case Family::ConicSubfield:
      return {family, f, trace_code_conic(f)};
  }
  throw field_error("unknown family");
}

std::optional<PredictedDistribution> predict_family(Family family, std::uint64_t p,
                                                    unsigned m) {
  check_family_params(family, p, m);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  switch (family) {
    case Family::HyperovalTranslation:
    case Family::HyperovalSegre:
      return predict_hyperoval(q);
    case Family::Conic:
      return predict_conic(q);
    case Family::TranslationBinary:
      return predict_translation_binary(m);
    case Family::Segre:
      if (m % 2 == 0) return std::nullopt;  // no closed-form oracle
      return predict_segre_binary(m);
    case Family::TranslationOdd:
      if (m == 1) {
        // Almost MDS [p+2, 3, p-1]: same distribution as the conic code with
        // an extra length-1 extension; derive it from the structure below.
        PredictedDistribution d;
        d.family = "translation-odd";
        d.p = p;
        d.m = 1;
        d.n = p + 2;
        d.k = 3;
        // For m = 1 the trace is the identity: codewords are
        // (a x^2 + b x + c)_x with the coordinates a, b appended. Weights
        // follow from the root count of the quadratic via the discriminant.
        d.rows = {{0, 1},
                  {p - 1, BigInt(p - 1) * (p - 1) / 2},
                  {p, BigInt(2) * (p - 1) + BigInt(p) * (p - 1) +
                          BigInt(p - 1) * (p - 1) * (p - 1) / 2},
                  {p + 1, BigInt(3) * (p - 1) * (p - 1) / 2},
                  {p + 2, BigInt(p - 1) * (p - 1) * (p - 1) / 2}};
        return d;
      }
      return predict_translation_odd(p, m);
    case Family::ConicSubfield:
      if (m == 1) return std::nullopt;  // outside theorem scope
      return predict_conic_subfield(p, m);
  }
  return std::nullopt;
}

VerifyReport verify_family(Family family, std::uint64_t p, unsigned m,
                           std::uint64_t budget,
                           const std::optional<std::vector<int>>& modulus) {
  BuiltCode built = build_family_code(family, p, m, modulus);
  VerifyReport report;
  report.family = family;
  report.p = p;
  report.m = m;
  report.k = built.code.k();
  report.code_q = built.code.field()->q();
  report.enumerated = weight_distribution(built.code, budget);

  auto predicted = predict_family(family, p, m);
  if (!predicted)
    throw field_error("no closed-form oracle for " + family_name(family) +
                      " at m = " + std::to_string(m));
  report.predicted = predicted->merged();

  std::set<std::uint64_t> weights;
  for (const auto& [w, c] : report.predicted.counts) weights.insert(w);
  for (const auto& [w, c] : report.enumerated.counts) weights.insert(w);
  for (std::uint64_t w : weights)
    if (report.predicted.at(w) != report.enumerated.at(w))
      report.mismatch_rows.push_back(w);
  report.match = report.mismatch_rows.empty() &&
                 report.predicted.n == report.enumerated.n &&
                 predicted->k == built.code.k() &&
                 big_pow(report.code_q, report.k) == report.enumerated.total();

  report.dual_k = built.code.n() - built.code.k();
  auto dd = dual_min_distance_via_columns(built.code);
  report.dual_d = dd.d;
  return report;
}

// -- serialization ------------------------------------------------------------

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<std::uint64_t>(v);
  return v.str();
}

nlohmann::json distribution_to_json(const WeightDistribution& dist, std::uint64_t k,
                                    std::uint64_t q) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [w, c] : dist.counts)
    counts[std::to_string(w)] = bigint_to_json(c);
  return {{"n", dist.n}, {"k", k}, {"q", q}, {"counts", counts}};
}

std::string distribution_to_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, c] : dist.counts) out << w << "," << c << "\n";
  return out.str();
}

nlohmann::json point_set_to_json(const Field& f, const ProjectivePointSet& points) {
  (void)f;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& pt : points)
    arr.push_back({pt.x[0], pt.x[1], pt.x[2]});
  return arr;
}

nlohmann::json code_to_json(const BuiltCode& built) {
  const Field& f = *built.field;
  nlohmann::json gen = nlohmann::json::array();
  const Matrix& g = built.code.generator();
  for (std::size_t r = 0; r < g.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cols; ++c) row.push_back(g.at(r, c));
    gen.push_back(row);
  }
  SubfieldBasis basis = SubfieldBasis::polynomial(built.field);
  return {{"family", family_name(built.family)},
          {"p", f.p()},
          {"m", f.m()},
          {"modulus", f.modulus()},
          {"basis", basis.elements()},
          {"n", built.code.n()},
          {"k", built.code.k()},
          {"generator", gen}};
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json j = {
      {"family", family_name(report.family)},
      {"p", report.p},
      {"m", report.m},
      {"predicted", distribution_to_json(report.predicted, report.k, report.code_q)},
      {"enumerated", distribution_to_json(report.enumerated, report.k, report.code_q)},
      {"match", report.match},
      {"mismatch_rows", report.mismatch_rows},
  };
  if (report.dual_k) j["dual_k"] = *report.dual_k;
  if (report.dual_d) j["dual_d"] = *report.dual_d;
  return j;
}

}  // namespace ovalcode
