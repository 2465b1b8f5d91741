#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cracq {

using Scalar = std::complex<double>;

/// Default absolute per-entry tolerance for table comparisons. Zero selects
/// exact comparison, intended for (Gaussian-)integer tables.
inline constexpr double kDefaultTolerance = 1e-10;

/// Pivot threshold for inversion is kSingularityScale times the largest
/// absolute row sum of the input.
inline constexpr double kSingularityScale = 1e-12;

/// Dense rectangular table of complex scalars multiplied column by column.
///
/// Entry (k, l) lives in column k and row l; storage is column-major, so a
/// column is contiguous. For I/O and error messages the canonical display is
/// by rows: display row l lists entries (0, l), (1, l), ..., which is what
/// `rows()` returns and what the CSV format stores line by line.
class Cracovian {
 public:
  /// Zero-filled table. Both dimensions must be positive.
  Cracovian(std::size_t n_cols, std::size_t n_rows);

  /// Builds from the canonical row display (all rows the same length,
  /// entries finite).
  static Cracovian from_rows(const std::vector<std::vector<Scalar>>& display_rows);

  /// Builds from column-major data; `data.size()` must equal n_cols * n_rows.
  static Cracovian from_column_major(std::size_t n_cols, std::size_t n_rows,
                                     std::vector<Scalar> data);

  std::size_t n_cols() const noexcept { return n_cols_; }
  std::size_t n_rows() const noexcept { return n_rows_; }

  Scalar operator()(std::size_t col, std::size_t row) const {
    return data_[col * n_rows_ + row];
  }
  Scalar& operator()(std::size_t col, std::size_t row) {
    return data_[col * n_rows_ + row];
  }

  /// Bounds- and finiteness-checked entry write.
  void set(std::size_t col, std::size_t row, Scalar value);

  /// Bounds-checked read.
  Scalar at(std::size_t col, std::size_t row) const;

  std::span<const Scalar> entries() const noexcept { return data_; }

  /// Canonical row display: result[row][col] == (*this)(col, row).
  std::vector<std::vector<Scalar>> rows() const;

  bool square() const noexcept { return n_cols_ == n_rows_; }

  /// "RxC" in display terms (rows x cols), for error messages.
  std::string shape() const;

 private:
  std::size_t n_cols_;
  std::size_t n_rows_;
  std::vector<Scalar> data_;
};

/// One-column cracovian holding vector components (or basis labels).
class VectorColumn {
 public:
  explicit VectorColumn(std::vector<Scalar> components);
  /// Wraps an existing table; throws DimensionError unless it has one column.
  explicit VectorColumn(Cracovian table);

  const Cracovian& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.n_rows(); }
  Scalar operator[](std::size_t i) const { return table_(0, i); }
  std::vector<Scalar> components() const;

 private:
  Cracovian table_;
};

/// Column-by-column product: result(k, l) = sum_i a(k, i) * b(l, i), summed
/// over all rows. Requires matching row counts; the result has a.n_cols()
/// columns and b.n_cols() rows.
Cracovian crac_product(const Cracovian& a, const Cracovian& b);

/// The square diagonal-ones table: right unit of the column product and a
/// left transposer.
Cracovian transposing_cracovian(std::size_t n);

/// Plain transposition: result(k, l) = a(l, k), dimensions swapped.
Cracovian transpose(const Cracovian& a);

/// Left-to-right fold of the column product over a nonempty factor list.
/// Every factor must have as many rows as the preceding resultant.
Cracovian chain_product(std::span<const Cracovian> factors);
Cracovian chain_product(std::initializer_list<Cracovian> factors);

/// Classical row-by-column product of the two tables read in row display.
Cracovian matrix_product(const Cracovian& a, const Cracovian& b);

/// Inverse under the column product: crac_product(a, result) == T. Equals the
/// transpose of the classical matrix inverse; computed by partial-pivot
/// elimination on the row display. Throws SingularError below the pivot
/// threshold.
Cracovian crac_inverse(const Cracovian& a);

/// Image of a vector under the linear mapping whose classical matrix is the
/// row display of `a`: crac_product(x, transpose(a)).
VectorColumn apply_linear_mapping(const VectorColumn& x, const Cracovian& a);

/// The same mapping referred to the basis transformed by `s`: the chain
/// s . transpose(a) . inverse(s), equal to the classical conjugation of a
/// by s.
Cracovian similarity_transform(const Cracovian& a, const Cracovian& s);

/// Basis-change image of a one-column table: crac_product(e, s).
VectorColumn change_basis(const VectorColumn& e, const Cracovian& s);

/// True iff a . transpose(b) and b . transpose(a) agree within `tol`;
/// equivalent to the classical products commuting.
bool commutes(const Cracovian& a, const Cracovian& b, double tol = kDefaultTolerance);

/// Per-entry comparison: dimensions match and |a - b| <= tol everywhere.
bool approx_equal(const Cracovian& a, const Cracovian& b, double tol = kDefaultTolerance);

/// Largest per-entry |a - b|; dimensions must match.
double max_abs_difference(const Cracovian& a, const Cracovian& b);

/// True iff every entry has integral real and imaginary parts.
bool all_gaussian_integer(const Cracovian& a);

Cracovian operator-(const Cracovian& a);

}  // namespace cracq
