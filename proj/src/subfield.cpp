#include "ovalcode/subfield.hpp"

namespace ovalcode {

namespace {

// Inverse of an m x m matrix over Z_p by Gauss-Jordan; throws when singular.
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> a, std::uint64_t p) {
  const std::size_t m = a.size();
  auto inv_scalar = [p](int v) {
    for (int c = 1; c < static_cast<int>(p); ++c)
      if ((v * c) % static_cast<int>(p) == 1) return c;
    throw field_error("scalar not invertible mod p");
  };
  std::vector<std::vector<int>> inv(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t sel = col;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) throw field_error("basis is linearly dependent over Z_p");
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    int scale = inv_scalar(a[col][col]);
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] = (a[col][j] * scale) % static_cast<int>(p);
      inv[col][j] = (inv[col][j] * scale) % static_cast<int>(p);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      int factor = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] = ((a[r][j] - factor * a[col][j]) % static_cast<int>(p) + p) % p;
        inv[r][j] = ((inv[r][j] - factor * inv[col][j]) % static_cast<int>(p) + p) % p;
      }
    }
  }
  return inv;
}

}  // namespace

SubfieldBasis::SubfieldBasis(FieldPtr field, std::vector<Elem> elements)
    : field_(std::move(field)), elements_(std::move(elements)) {
  const unsigned m = field_->m();
  if (elements_.size() != m)
    throw field_error("a basis of GF(p^m) needs exactly m elements");
  // Column j holds the polynomial-basis coordinates of basis element j.
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  for (unsigned j = 0; j < m; ++j) {
    auto c = field_->coeffs(elements_[j]);
    for (unsigned i = 0; i < m; ++i) mat[i][j] = c[i];
  }
  inverse_ = invert_mod_p(std::move(mat), field_->p());
}

SubfieldBasis SubfieldBasis::polynomial(FieldPtr field) {
  std::vector<Elem> elems;
  Elem cur = 1;
  for (unsigned i = 0; i < field->m(); ++i) {
    elems.push_back(cur);
    cur = field->mul(cur, field->generator());
  }
  return SubfieldBasis(std::move(field), std::move(elems));
}

std::vector<int> SubfieldBasis::coordinates(Elem e) const {
  const unsigned m = field_->m();
  auto v = field_->coeffs(e);
  std::vector<int> out(m, 0);
  const int p = static_cast<int>(field_->p());
  for (unsigned i = 0; i < m; ++i) {
    long long acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += static_cast<long long>(inverse_[i][j]) * v[j];
    out[i] = static_cast<int>(acc % p);
  }
  return out;
}

Matrix expand_generator(const Matrix& g, const SubfieldBasis& basis) {
  if (g.field != basis.field())
    throw field_error("basis belongs to a different field");
  const unsigned m = g.field->m();
  auto prime = Field::make(g.field->p(), 1);
  Matrix out(prime, g.rows * m, g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      auto coords = basis.coordinates(g.at(r, c));
      for (unsigned i = 0; i < m; ++i)
        out.at(r * m + i, c) = static_cast<Elem>(coords[i]);
    }
  return out;
}

LinearCode subfield_code(const LinearCode& code, const SubfieldBasis& basis) {
  return LinearCode(expand_generator(code.generator(), basis));
}

bool basis_independence_check(const LinearCode& code,
                              const std::vector<SubfieldBasis>& bases) {
  if (bases.empty()) throw field_error("at least one basis required");
  auto first = subfield_code(code, bases.front());
  for (std::size_t i = 1; i < bases.size(); ++i)
    if (!codes_equal_as_sets(first, subfield_code(code, bases[i])))
      return false;
  return true;
}

namespace {

// Generator rows for the trace family with f(x) = x^f_exponent: a and b run
// over the polynomial basis, plus the constant row c = 1.
LinearCode trace_family(FieldPtr field, std::uint64_t f_exponent, bool include_tr_b) {
  const Field& f = *field;
  const std::uint64_t q = f.q();
  const unsigned m = f.m();
  const std::size_t n = q + 1 + (include_tr_b ? 1 : 0);
  auto prime = Field::make(f.p(), 1);
  Matrix g(prime, 2 * m + 1, n);

  Elem basis_elem = 1;
  for (unsigned i = 0; i < m; ++i) {
    std::size_t col = 0;
    for (Elem x : f.elements()) {
      Elem fx = f.pow(x, f_exponent);
      g.at(i, col) = static_cast<Elem>(f.trace(f.mul(basis_elem, fx)));           // a-row
      g.at(m + i, col) = static_cast<Elem>(f.trace(f.mul(basis_elem, x)));        // b-row
      ++col;
    }
    g.at(i, q) = static_cast<Elem>(f.trace(basis_elem));          // Tr(a)
    if (include_tr_b) g.at(m + i, q + 1) = static_cast<Elem>(f.trace(basis_elem));  // Tr(b)
    basis_elem = f.mul(basis_elem, f.generator());
  }
  for (std::size_t col = 0; col < q; ++col) g.at(2 * m, col) = 1;  // c-row
  return LinearCode(std::move(g));
}

}  // namespace

LinearCode trace_code_translation(FieldPtr field) {
  if (field->p() != 2) throw field_error("translation family needs p = 2");
  if (field->m() < 2) throw field_error("translation family needs m >= 2");
  return trace_family(std::move(field), 2, true);
}

LinearCode trace_code_segre(FieldPtr field) {
  if (field->p() != 2) throw field_error("Segre family needs p = 2");
  if (field->m() < 3) throw field_error("Segre family needs m >= 3");
  return trace_family(std::move(field), 6, true);
}

LinearCode trace_code_translation_odd(FieldPtr field) {
  if (field->p() == 2) throw field_error("p-ary translation family needs odd p");
  return trace_family(std::move(field), 2, true);
}

LinearCode trace_code_conic(FieldPtr field) {
  if (field->p() == 2) throw field_error("conic subfield family needs odd p");
  return trace_family(std::move(field), 2, false);
}

std::vector<int> trace_codeword(const Field& f, std::uint64_t f_exponent,
                                Elem a, Elem b, std::uint64_t c, bool include_tr_b) {
  std::vector<int> word;
  word.reserve(f.q() + 2);
  const int p = static_cast<int>(f.p());
  for (Elem x : f.elements()) {
    Elem v = f.add(f.mul(a, f.pow(x, f_exponent)), f.mul(b, x));
    word.push_back(static_cast<int>((f.trace(v) + c) % p));
  }
  word.push_back(f.trace(a));
  if (include_tr_b) word.push_back(f.trace(b));
  return word;
}

LinearCode puncture(const LinearCode& code, std::size_t coordinate) {
  const Matrix& g = code.generator();
  if (coordinate >= g.cols) throw field_error("puncture coordinate out of range");
  Matrix out(code.field(), g.rows, g.cols - 1);
  for (std::size_t r = 0; r < g.rows; ++r) {
    std::size_t cc = 0;
    for (std::size_t c = 0; c < g.cols; ++c) {
      if (c == coordinate) continue;
      out.at(r, cc++) = g.at(r, c);
    }
  }
  return LinearCode(std::move(out));
}

}  // namespace ovalcode
