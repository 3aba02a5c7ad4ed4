#pragma once

// Matrix categories Mat(R), Mat(C) and Mat(R>=0). Objects are dimensions; an
// arrow m -> n is an n x m matrix, composition is the matrix product and the
// homset monoid is the entrywise sum.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "specat/cmon_core.hpp"
#include "specat/error.hpp"
#include "specat/random.hpp"
#include "specat/tolerance.hpp"

namespace specat {

struct RealDomain {
  using Scalar = double;
  static constexpr std::string_view name = "real";
  static constexpr bool has_negation = true;
  static bool admissible(Scalar x) { return std::isfinite(x); }
  static double magnitude(Scalar x) { return std::abs(x); }
};

struct NonNegativeRealDomain {
  using Scalar = double;
  static constexpr std::string_view name = "nonnegative-real";
  static constexpr bool has_negation = false;
  static bool admissible(Scalar x) { return std::isfinite(x) && x >= 0.0; }
  static double magnitude(Scalar x) { return std::abs(x); }
};

struct ComplexDomain {
  using Scalar = std::complex<double>;
  static constexpr std::string_view name = "complex";
  static constexpr bool has_negation = true;
  static bool admissible(Scalar x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
  static double magnitude(Scalar x) { return std::abs(x); }
};

template <class D>
concept ScalarDomain = requires(typename D::Scalar s) {
  { D::name } -> std::convertible_to<std::string_view>;
  { D::has_negation } -> std::convertible_to<bool>;
  { D::admissible(s) } -> std::convertible_to<bool>;
  { D::magnitude(s) } -> std::convertible_to<double>;
};

std::string format_scalar(double x);
std::string format_scalar(std::complex<double> x);

template <ScalarDomain D>
class ScalarMatrix {
 public:
  using Domain = D;
  using Scalar = typename D::Scalar;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DomainError("matrix: " + std::to_string(entries_.size()) + " entries for shape " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    for (std::size_t k = 0; k < entries_.size(); ++k) validate(k / (cols_ ? cols_ : 1), k % (cols_ ? cols_ : 1), entries_[k]);
  }

  static ScalarMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Scalar> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DomainError("matrix: ragged rows");
      data.insert(data.end(), row.begin(), row.end());
    }
    return ScalarMatrix(r, c, std::move(data));
  }

  static ScalarMatrix identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) {
    validate(i, j, v);
    entries_[i * cols_ + j] = v;
  }
  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  static void validate(std::size_t i, std::size_t j, Scalar v) {
    if (!D::admissible(v))
      throw DomainError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        format_scalar(v) + " is not a valid " + std::string(D::name) + " scalar");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

template <ScalarDomain D>
ScalarMatrix<D> multiply(const ScalarMatrix<D>& g, const ScalarMatrix<D>& f) {
  if (g.cols() != f.rows())
    throw TypeMismatch("compose: " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " after " +
                       std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  std::vector<typename D::Scalar> out(g.rows() * f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const auto gik = g(i, k);
      if (gik == typename D::Scalar(0)) continue;
      for (std::size_t j = 0; j < f.cols(); ++j) out[i * f.cols() + j] += gik * f(k, j);
    }
  return ScalarMatrix<D>(g.rows(), f.cols(), std::move(out));
}

template <ScalarDomain D>
ScalarMatrix<D> add(const ScalarMatrix<D>& a, const ScalarMatrix<D>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw TypeMismatch("add: shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<typename D::Scalar> out(a.entries().begin(), a.entries().end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.entries()[k];
  return ScalarMatrix<D>(a.rows(), a.cols(), std::move(out));
}

template <ScalarDomain D>
ScalarMatrix<D> subtract(const ScalarMatrix<D>& a, const ScalarMatrix<D>& b) {
  if constexpr (!D::has_negation) {
    throw DomainError("subtract: the " + std::string(D::name) + " domain has no negation");
  } else {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw TypeMismatch("subtract: shape mismatch");
    std::vector<typename D::Scalar> out(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.entries()[k];
    return ScalarMatrix<D>(a.rows(), a.cols(), std::move(out));
  }
}

template <ScalarDomain D>
ScalarMatrix<D> scale(const ScalarMatrix<D>& a, typename D::Scalar s) {
  std::vector<typename D::Scalar> out(a.entries().begin(), a.entries().end());
  for (auto& v : out) v *= s;
  return ScalarMatrix<D>(a.rows(), a.cols(), std::move(out));
}

template <ScalarDomain D>
ScalarMatrix<D> transpose(const ScalarMatrix<D>& a) {
  ScalarMatrix<D> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a(i, j));
  return out;
}

// Places `block` with its top-left corner at (row, col) of a rows x cols zero matrix.
template <ScalarDomain D>
ScalarMatrix<D> embed(const ScalarMatrix<D>& block, std::size_t rows, std::size_t cols, std::size_t row,
                      std::size_t col) {
  ScalarMatrix<D> out(rows, cols);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) out.set(row + i, col + j, block(i, j));
  return out;
}

template <ScalarDomain D>
std::string describe_matrix(const ScalarMatrix<D>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_scalar(m(i, j));
    }
    os << ']';
  }
  os << ']';
  if (m.rows() == 0) os << " (0x" << m.cols() << ')';
  return os.str();
}

// Inverse of a monomial matrix (one nonzero per row and column): the
// transposed pattern with reciprocal entries.
template <ScalarDomain D>
ScalarMatrix<D> monomial_inverse(const ScalarMatrix<D>& m) {
  using Scalar = typename D::Scalar;
  if (m.rows() != m.cols()) throw PreconditionError("monomial_inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> col_of_row(n, n);
  std::vector<bool> col_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == Scalar(0)) continue;
      if (col_of_row[i] != n || col_used[j])
        throw PreconditionError("monomial_inverse: matrix is not monomial (row " + std::to_string(i) + ")");
      col_of_row[i] = j;
      col_used[j] = true;
    }
    if (col_of_row[i] == n)
      throw PreconditionError("monomial_inverse: row " + std::to_string(i) + " has no nonzero entry");
  }
  ScalarMatrix<D> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.set(col_of_row[i], i, Scalar(1) / m(i, col_of_row[i]));
  return inv;
}

template <ScalarDomain D>
class MatCategory {
 public:
  using Domain = D;
  using Object = std::size_t;
  using Arrow = ScalarMatrix<D>;
  using Witness = BiproductWitness<Object, Arrow>;

  Object source(const Arrow& f) const { return f.cols(); }
  Object target(const Arrow& f) const { return f.rows(); }
  Arrow compose(const Arrow& g, const Arrow& f) const { return multiply(g, f); }
  Arrow add(const Arrow& f, const Arrow& g) const { return specat::add(f, g); }
  Arrow zero(Object x, Object y) const { return Arrow(y, x); }
  Arrow identity(Object x) const { return Arrow::identity(x); }
  Object zero_object() const { return 0; }

  // m (+) n = m + n with pi1 = [I|0], pi2 = [0|I] and the transposes as injections.
  Witness biproduct(Object m, Object n) const {
    const Object c = m + n;
    return Witness{m,
                   n,
                   c,
                   embed(Arrow::identity(m), m, c, 0, 0),
                   embed(Arrow::identity(n), n, c, 0, m),
                   embed(Arrow::identity(m), c, m, 0, 0),
                   embed(Arrow::identity(n), c, n, m, 0)};
  }

  // Basis-changed witness: pi1 = [f|0], pi2 = [0|g], iota1 = [f^-1;0], iota2 = [0;g^-1].
  // Inverses are supplied by the caller; see monomial_inverse for the monomial case.
  Witness generalized_biproduct(const Arrow& f, const Arrow& f_inv, const Arrow& g, const Arrow& g_inv) const {
    const Object m = f.rows();
    const Object n = g.rows();
    if (f.cols() != m || g.cols() != n || f_inv.rows() != m || f_inv.cols() != m || g_inv.rows() != n ||
        g_inv.cols() != n)
      throw TypeMismatch("generalized_biproduct: basis changes must be square and match their inverses");
    const Object c = m + n;
    return Witness{m,           n,          c, embed(f, m, c, 0, 0), embed(g, n, c, 0, m),
                   embed(f_inv, c, m, 0, 0), embed(g_inv, c, n, m, 0)};
  }

  double residual(const Arrow& f, const Arrow& g) const {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t k = 0; k < f.entries().size(); ++k)
      worst = std::max(worst, D::magnitude(f.entries()[k] - g.entries()[k]));
    return worst;
  }

  bool equal(const Arrow& f, const Arrow& g, Tolerance tol) const {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
    for (std::size_t k = 0; k < f.entries().size(); ++k)
      if (!tol.close(f.entries()[k], g.entries()[k])) return false;
    return true;
  }

  std::string describe(const Arrow& f) const { return describe_matrix(f); }
  std::string describe_object(Object x) const { return std::to_string(x); }
};

using MatR = MatCategory<RealDomain>;
using MatC = MatCategory<ComplexDomain>;
using MatNN = MatCategory<NonNegativeRealDomain>;

static_assert(CMonCategory<MatR>);
static_assert(CMonCategory<MatC>);
static_assert(CMonCategory<MatNN>);

// Random dimensions in [0, max_dim]; entries uniform in [-2, 2] (real, and
// both parts of complex) or [0, 2] (non-negative).
template <ScalarDomain D>
struct MatSampler {
  std::size_t max_dim = 5;

  std::size_t object(Rng& rng) const { return uniform_size(rng, 0, max_dim); }

  ScalarMatrix<D> arrow(Rng& rng, std::size_t src, std::size_t tgt) const {
    std::vector<typename D::Scalar> data(src * tgt);
    for (auto& v : data) {
      if constexpr (std::is_same_v<typename D::Scalar, std::complex<double>>) {
        const double re = uniform_real(rng, -2.0, 2.0);
        v = {re, uniform_real(rng, -2.0, 2.0)};
      } else if constexpr (D::has_negation) {
        v = uniform_real(rng, -2.0, 2.0);
      } else {
        v = uniform_real(rng, 0.0, 2.0);
      }
    }
    return ScalarMatrix<D>(tgt, src, std::move(data));
  }
};

}  // namespace specat
