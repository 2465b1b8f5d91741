#include "cracq/cracovian.hpp"

#include <cmath>
#include <utility>

#include "cracq/errors.hpp"

namespace cracq {

namespace {

void require_finite(Scalar value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw ArgumentError("non-finite scalar rejected");
}

std::string dims(const Cracovian& a) { return a.shape() + " (rows x cols)"; }

// Row display of a square table as a flat row-major buffer.
std::vector<Scalar> to_display(const Cracovian& a) {
  const std::size_t n = a.n_rows();
  std::vector<Scalar> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = a(c, r);
  return m;
}

// Partial-pivot Gauss-Jordan inverse of a row-major square buffer. The pivot
// threshold scales with the largest absolute row sum of the input.
std::vector<Scalar> display_inverse(std::vector<Scalar> m, std::size_t n) {
  double max_row_norm = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += std::abs(m[r * n + c]);
    max_row_norm = std::max(max_row_norm, s);
  }
  const double threshold = kSingularityScale * max_row_norm;

  std::vector<Scalar> inv(n * n, Scalar{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = Scalar{1.0, 0.0};

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(m[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(m[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > threshold) || best == 0.0)
      throw SingularError("singular table: pivot magnitude " + std::to_string(best) +
                          " at elimination step " + std::to_string(col + 1) +
                          " is below threshold " + std::to_string(threshold));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m[pivot * n + c], m[col * n + c]);
        std::swap(inv[pivot * n + c], inv[col * n + c]);
      }
    }
    const Scalar p = m[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col * n + c] /= p;
      inv[col * n + c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = m[r * n + col];
      if (f == Scalar{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m[r * n + c] -= f * m[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

}  // namespace

Cracovian::Cracovian(std::size_t n_cols, std::size_t n_rows)
    : n_cols_(n_cols), n_rows_(n_rows), data_(n_cols * n_rows, Scalar{0.0, 0.0}) {
  if (n_cols == 0 || n_rows == 0)
    throw ArgumentError("cracovian dimensions must be positive");
}

Cracovian Cracovian::from_rows(const std::vector<std::vector<Scalar>>& display_rows) {
  if (display_rows.empty() || display_rows.front().empty())
    throw ArgumentError("cracovian dimensions must be positive");
  const std::size_t rows = display_rows.size();
  const std::size_t cols = display_rows.front().size();
  Cracovian out(cols, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (display_rows[r].size() != cols)
      throw ArgumentError("ragged row display: row " + std::to_string(r + 1) + " has " +
                          std::to_string(display_rows[r].size()) + " entries, expected " +
                          std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      require_finite(display_rows[r][c]);
      out(c, r) = display_rows[r][c];
    }
  }
  return out;
}

Cracovian Cracovian::from_column_major(std::size_t n_cols, std::size_t n_rows,
                                       std::vector<Scalar> data) {
  Cracovian out(n_cols, n_rows);
  if (data.size() != n_cols * n_rows)
    throw ArgumentError("column-major data has " + std::to_string(data.size()) +
                        " entries, expected " + std::to_string(n_cols * n_rows));
  for (Scalar v : data) require_finite(v);
  out.data_ = std::move(data);
  return out;
}

void Cracovian::set(std::size_t col, std::size_t row, Scalar value) {
  if (col >= n_cols_ || row >= n_rows_)
    throw DimensionError("entry (" + std::to_string(col) + ", " + std::to_string(row) +
                         ") outside " + shape() + " table");
  require_finite(value);
  (*this)(col, row) = value;
}

Scalar Cracovian::at(std::size_t col, std::size_t row) const {
  if (col >= n_cols_ || row >= n_rows_)
    throw DimensionError("entry (" + std::to_string(col) + ", " + std::to_string(row) +
                         ") outside " + shape() + " table");
  return (*this)(col, row);
}

std::vector<std::vector<Scalar>> Cracovian::rows() const {
  std::vector<std::vector<Scalar>> out(n_rows_, std::vector<Scalar>(n_cols_));
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (std::size_t c = 0; c < n_cols_; ++c) out[r][c] = (*this)(c, r);
  return out;
}

std::string Cracovian::shape() const {
  return std::to_string(n_rows_) + "x" + std::to_string(n_cols_);
}

VectorColumn::VectorColumn(std::vector<Scalar> components)
    : table_(Cracovian::from_column_major(1, components.size(), std::move(components))) {}

VectorColumn::VectorColumn(Cracovian table) : table_(std::move(table)) {
  if (table_.n_cols() != 1)
    throw DimensionError("vector column must have exactly one column, got " +
                         dims(table_));
}

std::vector<Scalar> VectorColumn::components() const {
  const auto view = table_.entries();
  return {view.begin(), view.end()};
}

Cracovian crac_product(const Cracovian& a, const Cracovian& b) {
  if (a.n_rows() != b.n_rows())
    throw DimensionError("column product needs equal row counts: " + dims(a) + " vs " +
                         dims(b));
  const std::size_t depth = a.n_rows();
  Cracovian out(a.n_cols(), b.n_cols());
  const Scalar* da = a.entries().data();
  const Scalar* db = b.entries().data();
  for (std::size_t k = 0; k < a.n_cols(); ++k) {
    const Scalar* col_a = da + k * depth;
    for (std::size_t l = 0; l < b.n_cols(); ++l) {
      const Scalar* col_b = db + l * depth;
      Scalar sum{0.0, 0.0};
      for (std::size_t i = 0; i < depth; ++i) sum += col_a[i] * col_b[i];
      out(k, l) = sum;
    }
  }
  return out;
}

Cracovian transposing_cracovian(std::size_t n) {
  if (n == 0) throw ArgumentError("transposing cracovian needs a positive size");
  Cracovian t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(i, i) = Scalar{1.0, 0.0};
  return t;
}

Cracovian transpose(const Cracovian& a) {
  Cracovian out(a.n_rows(), a.n_cols());
  for (std::size_t k = 0; k < a.n_cols(); ++k)
    for (std::size_t l = 0; l < a.n_rows(); ++l) out(l, k) = a(k, l);
  return out;
}

Cracovian chain_product(std::span<const Cracovian> factors) {
  if (factors.empty()) throw ArgumentError("chain product of an empty factor list");
  Cracovian acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].n_rows() != acc.n_rows())
      throw DimensionError("chain product mismatch at factor " + std::to_string(i + 1) +
                           ": it has " + std::to_string(factors[i].n_rows()) +
                           " rows but the preceding resultant has " +
                           std::to_string(acc.n_rows()));
    acc = crac_product(acc, factors[i]);
  }
  return acc;
}

Cracovian chain_product(std::initializer_list<Cracovian> factors) {
  return chain_product(std::span<const Cracovian>(factors.begin(), factors.size()));
}

Cracovian matrix_product(const Cracovian& a, const Cracovian& b) {
  if (a.n_cols() != b.n_rows())
    throw DimensionError("row-by-column product mismatch: " + dims(a) + " vs " + dims(b));
  Cracovian out(b.n_cols(), a.n_rows());
  for (std::size_t r = 0; r < a.n_rows(); ++r) {
    for (std::size_t c = 0; c < b.n_cols(); ++c) {
      Scalar sum{0.0, 0.0};
      for (std::size_t j = 0; j < a.n_cols(); ++j) sum += a(j, r) * b(c, j);
      out(c, r) = sum;
    }
  }
  return out;
}

Cracovian crac_inverse(const Cracovian& a) {
  if (!a.square())
    throw DimensionError("only square tables have inverses, got " + dims(a));
  const std::size_t n = a.n_rows();
  const std::vector<Scalar> inv = display_inverse(to_display(a), n);
  // The cracovian inverse is the transpose of the classical inverse, so the
  // display inverse maps straight into column-major storage.
  return Cracovian::from_column_major(n, n, inv);
}

VectorColumn apply_linear_mapping(const VectorColumn& x, const Cracovian& a) {
  if (!a.square())
    throw DimensionError("linear mapping table must be square, got " + dims(a));
  if (a.n_rows() != x.size())
    throw DimensionError("mapping size mismatch: table " + dims(a) + " vs column of " +
                         std::to_string(x.size()));
  return VectorColumn(crac_product(x.table(), transpose(a)));
}

Cracovian similarity_transform(const Cracovian& a, const Cracovian& s) {
  if (!a.square() || !s.square() || a.n_rows() != s.n_rows())
    throw DimensionError("similarity transform needs equal square tables: " + dims(a) +
                         " vs " + dims(s));
  return chain_product({s, transpose(a), crac_inverse(s)});
}

VectorColumn change_basis(const VectorColumn& e, const Cracovian& s) {
  if (!s.square())
    throw DimensionError("basis transformation must be square, got " + dims(s));
  if (e.size() != s.n_rows())
    throw DimensionError("basis change mismatch: column of " + std::to_string(e.size()) +
                         " vs table " + dims(s));
  return VectorColumn(crac_product(e.table(), s));
}

bool commutes(const Cracovian& a, const Cracovian& b, double tol) {
  if (!a.square() || !b.square() || a.n_rows() != b.n_rows())
    throw DimensionError("commutation check needs equal square tables: " + dims(a) +
                         " vs " + dims(b));
  return approx_equal(crac_product(a, transpose(b)), crac_product(b, transpose(a)), tol);
}

bool approx_equal(const Cracovian& a, const Cracovian& b, double tol) {
  if (a.n_cols() != b.n_cols() || a.n_rows() != b.n_rows()) return false;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (std::abs(ea[i] - eb[i]) > tol) return false;
  return true;
}

double max_abs_difference(const Cracovian& a, const Cracovian& b) {
  if (a.n_cols() != b.n_cols() || a.n_rows() != b.n_rows())
    throw DimensionError("difference of unequal shapes: " + dims(a) + " vs " + dims(b));
  const auto ea = a.entries();
  const auto eb = b.entries();
  double worst = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i)
    worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

bool all_gaussian_integer(const Cracovian& a) {
  for (Scalar v : a.entries()) {
    if (v.real() != std::trunc(v.real()) || v.imag() != std::trunc(v.imag())) return false;
  }
  return true;
}

Cracovian operator-(const Cracovian& a) {
  Cracovian out(a.n_cols(), a.n_rows());
  const auto src = a.entries();
  for (std::size_t k = 0; k < a.n_cols(); ++k)
    for (std::size_t l = 0; l < a.n_rows(); ++l) out(k, l) = -src[k * a.n_rows() + l];
  return out;
}

}  // namespace cracq
