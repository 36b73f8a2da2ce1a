#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qstrat {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InclusionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground field: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "Fp:7" and "F7".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept reduced by GMP; residues live in [0, p).
class Scalar {
 public:
  explicit Scalar(Field f = {});
  Scalar(Field f, long n);
  Scalar(Field f, const mpq_class& q);

  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  /// Rational value; for F_p the canonical representative in [0, p).
  mpq_class to_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this -= a * b
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check(const Scalar& o) const;
  std::uint64_t mod() const { return field_.characteristic(); }

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);

/// Dense row-major matrix over a fixed field.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_ints(Field f, const std::vector<std::vector<long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Mat transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Block matrix [[a, b], [c, d]]; blocks must have compatible shapes.
Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot = first nonzero entry in column order.
Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Mat& m);

/// Subspace of K^n stored by its reduced echelon basis, so equal subspaces
/// compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& generators);
  static Subspace full(Field f, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its component along the basis; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  /// Coefficients of a member vector in basis(); throws InclusionViolation otherwise.
  Vec coordinates(const Vec& v) const;
  /// Coordinates that are not pivots; unit vectors there span a complement.
  std::vector<std::size_t> complement_positions() const;
  /// Basis as the columns of an ambient x dim matrix.
  Mat basis_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// dim V - dim U for U inside V; throws InclusionViolation otherwise.
std::size_t quotient_dim(const Subspace& inner, const Subspace& outer);
/// m(S) for m : K^ambient -> K^rows.
Subspace image(const Mat& m, const Subspace& s);
Subspace column_space(const Mat& m);

}  // namespace qstrat
