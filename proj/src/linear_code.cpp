#include "ovalcode/linear_code.hpp"

#include <algorithm>

namespace ovalcode {

Matrix rref(const Matrix& mat, std::size_t* rank_out) {
  Matrix r = mat;
  const Field& f = *r.field;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols && pivot_row < r.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < r.cols; ++c)
        std::swap(r.at(sel, c), r.at(pivot_row, c));
    Elem scale = f.inv(r.at(pivot_row, col));
    for (std::size_t c = col; c < r.cols; ++c)
      r.at(pivot_row, c) = f.mul(scale, r.at(pivot_row, c));
    for (std::size_t row = 0; row < r.rows; ++row) {
      if (row == pivot_row || r.at(row, col) == 0) continue;
      Elem factor = r.at(row, col);
      for (std::size_t c = col; c < r.cols; ++c)
        r.at(row, c) = f.sub(r.at(row, c), f.mul(factor, r.at(pivot_row, c)));
    }
    ++pivot_row;
  }
  if (rank_out) *rank_out = pivot_row;
  return r;
}

std::size_t rank(const Matrix& mat) {
  std::size_t rk = 0;
  rref(mat, &rk);
  return rk;
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

std::uint64_t WeightDistribution::min_positive_weight() const {
  for (const auto& [w, c] : counts)
    if (w > 0 && c > 0) return w;
  throw std::runtime_error("no positive-weight codeword");
}

BigInt WeightDistribution::at(std::uint64_t w) const {
  auto it = counts.find(w);
  return it == counts.end() ? BigInt(0) : it->second;
}

LinearCode::LinearCode(Matrix generator) : generator_(std::move(generator)) {
  if (!generator_.field) throw field_error("generator matrix has no field");
  std::size_t rk = 0;
  Matrix reduced = rref(generator_, &rk);
  if (rk == 0) throw field_error("zero generator matrix: k >= 1 required");
  k_ = rk;
  basis_ = Matrix(generator_.field, rk, generator_.cols);
  std::copy(reduced.entries.begin(), reduced.entries.begin() + rk * generator_.cols,
            basis_.entries.begin());
}

WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t budget) {
  const Field& f = *code.field();
  const std::uint64_t q = f.q();
  const std::uint64_t n = code.n();
  const std::uint64_t k = code.k();

  BigInt space = big_pow(q, k);
  if (space > BigInt(budget))
    throw budget_error("q^k exceeds the enumeration budget");

  WeightDistribution dist;
  dist.n = n;

  // Depth-first over message digits, keeping a partial row combination per
  // level so each codeword costs O(n).
  const Matrix& basis = code.row_basis();
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n, 0));
  std::vector<std::uint64_t> digit(k, 0);
  std::size_t level = 0;
  while (true) {
    if (level == k) {
      std::uint64_t w = 0;
      for (std::uint64_t c = 0; c < n; ++c)
        if (partial[k][c] != 0) ++w;
      dist.counts[w] += 1;
      // backtrack to the next message
      while (level > 0 && digit[level - 1] == q - 1) {
        --level;
        digit[level] = 0;
      }
      if (level == 0) break;
      ++digit[level - 1];
      --level;  // recompute the partial sum for the advanced digit
    }
    // extend partial sums down to the leaves
    while (level < k) {
      Elem scale = static_cast<Elem>(digit[level]);
      // digit value is an element code in [0, q): the message alphabet is
      // the field itself, enumerated by code.
      for (std::uint64_t c = 0; c < n; ++c)
        partial[level + 1][c] =
            f.add(partial[level][c], f.mul(scale, basis.at(level, c)));
      ++level;
    }
  }
  return dist;
}

std::uint64_t minimum_distance(const LinearCode& code, std::uint64_t budget) {
  return weight_distribution(code, budget).min_positive_weight();
}

bool is_mds(const LinearCode& code, std::uint64_t budget) {
  return minimum_distance(code, budget) == code.n() - code.k() + 1;
}

bool is_almost_mds(const LinearCode& code, std::uint64_t budget) {
  return minimum_distance(code, budget) == code.n() - code.k();
}

bool has_trivial_dual(const LinearCode& code) { return code.k() == code.n(); }

LinearCode dual_code(const LinearCode& code) {
  if (has_trivial_dual(code))
    throw field_error("full-space code has the trivial dual");
  const Field& f = *code.field();
  const Matrix& basis = code.row_basis();  // rref, k x n
  const std::uint64_t n = code.n();
  const std::uint64_t k = code.k();

  // Pivot columns of the rref basis.
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (basis.at(r, c) != 0) {
        pivots.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }

  Matrix d(code.field(), n - k, n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    d.at(row, c) = 1;
    for (std::size_t r = 0; r < k; ++r)
      d.at(row, pivots[r]) = f.neg(basis.at(r, c));
    ++row;
  }
  return LinearCode(std::move(d));
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist,
                                         std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  // A'_j = q^{-k} sum_i A_i K_j(i), with the Krawtchouk polynomial
  // K_j(i) = sum_s (-1)^s binom(i, s) binom(n-i, j-s) (q-1)^{j-s}.
  WeightDistribution out;
  out.n = n;
  BigInt qk = big_pow(q, k);
  for (std::uint64_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (const auto& [i, a] : dist.counts) {
      if (a == 0) continue;
      BigInt kraw = 0;
      for (std::uint64_t s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        BigInt term = binomial(i, s) * binomial(n - i, j - s) * big_pow(q - 1, j - s);
        if (s % 2 == 0)
          kraw += term;
        else
          kraw -= term;
      }
      acc += a * kraw;
    }
    if (acc % qk != 0)
      throw std::runtime_error("MacWilliams transform: non-integer coefficient");
    BigInt aj = acc / qk;
    if (aj != 0) out.counts[j] = aj;
  }
  return out;
}

namespace {

bool columns_dependent(const LinearCode& code, const std::vector<std::size_t>& cols) {
  const Matrix& basis = code.row_basis();
  Matrix sub(code.field(), basis.rows, cols.size());
  for (std::size_t r = 0; r < basis.rows; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      sub.at(r, c) = basis.at(r, cols[c]);
  return rank(sub) < cols.size();
}

bool search_subsets(const LinearCode& code, std::size_t s, std::size_t start,
                    std::vector<std::size_t>& chosen) {
  if (chosen.size() == s) return columns_dependent(code, chosen);
  for (std::size_t c = start; c + (s - chosen.size()) <= code.n(); ++c) {
    chosen.push_back(c);
    if (search_subsets(code, s, c + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

DualDistanceResult dual_min_distance_via_columns(const LinearCode& code, std::size_t limit) {
  if (limit > 6) throw budget_error("column-subset search limited to s <= 6");
  for (std::size_t s = 1; s <= limit && s <= code.n(); ++s) {
    std::vector<std::size_t> chosen;
    if (search_subsets(code, s, 0, chosen))
      return {s, chosen};
  }
  return {std::nullopt, {}};
}

std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  BigInt qn = big_pow(q, n);
  BigInt qk = big_pow(q, k);
  std::uint64_t best = 1;
  for (std::uint64_t d = 1; d <= n + 1; ++d) {
    BigInt balls = 0;
    for (std::uint64_t i = 0; i <= (d - 1) / 2; ++i)
      balls += binomial(n, i) * big_pow(q - 1, i);
    if (qk * balls <= qn)
      best = d;
    else
      break;
  }
  return best;
}

bool codes_equal_as_sets(const LinearCode& a, const LinearCode& b) {
  if (a.field()->q() != b.field()->q() || a.n() != b.n()) return false;
  if (a.k() != b.k()) return false;
  Matrix stacked(a.field(), a.k() + b.k(), a.n());
  for (std::size_t r = 0; r < a.k(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c)
      stacked.at(r, c) = a.row_basis().at(r, c);
  for (std::size_t r = 0; r < b.k(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c)
      stacked.at(a.k() + r, c) = b.row_basis().at(r, c);
  return rank(stacked) == a.k();
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t e) {
  BigInt r = 1;
  BigInt b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace ovalcode
