#include "qstrat/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace qstrat {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  if (!all_digits(digits)) throw std::invalid_argument("unrecognized field '" + std::string(text) + "'");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || p >= (1ull << 31)) throw std::invalid_argument("field characteristic out of range");
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint64_t{0};
}

Scalar::Scalar(Field f, long n) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(n);
  } else {
    long p = static_cast<long>(f.characteristic());
    long r = n % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    value_ = q;
    std::get<mpq_class>(value_).canonicalize();
    return;
  }
  std::uint64_t p = f.characteristic();
  std::uint64_t den = residue_of(q.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  value_ = residue_of(q.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  mpq_class q;
  if (q.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10) != 0)
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(f, q);
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("mixed fields " + field_.name() + " and " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  else
    r.value_ = pow_mod(std::get<std::uint64_t>(value_), mod() - 2, mod());
  return r;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_);
  return mpq_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(o.value_)) % mod();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + mod() - std::get<std::uint64_t>(o.value_)) % mod();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(o.value_) % mod();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t prod = std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % mod();
    v = (v + mod() - prod) % mod();
  }
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  r -= *this;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

// ---------------------------------------------------------------- vectors

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (s.is_zero()) return;
  Scalar neg = -s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].sub_mul(neg, b[i]);
}

// ---------------------------------------------------------------- Mat

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    Scalar neg = -v[c];
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r].sub_mul(neg, (*this)(r, c));
  }
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
  Mat out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      Scalar neg = -aik;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j).sub_mul(neg, b(k, j));
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Mat operator*(const Scalar& s, const Mat& a) {
  Mat out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw DimensionMismatch("incompatible block shapes");
  Mat out(a.field(), a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&out](const Mat& m, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r0 + r, c0 + c) = m(r, c);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return out;
}

// ---------------------------------------------------------------- elimination

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t k = c; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(lead, k).is_zero()) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(lead, k).is_zero()) a(r, k).sub_mul(factor, a(lead, k));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.field(), cols, free);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& generators) {
  Subspace s(f, ambient);
  if (generators.empty()) return s;
  Rref r = rref(Mat::from_rows(f, ambient, generators));
  s.pivots_ = r.pivots;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.reduced.row(i));
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector outside the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return qstrat::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw InclusionViolation("vector is not in the subspace");
  Vec c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_positions() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Mat Subspace::basis_columns() const { return Mat::from_columns(field_, ambient_, basis_); }

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("sum of subspaces of different ambient spaces");
  std::vector<Vec> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.field(), u.ambient(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("intersection of subspaces of different ambient spaces");
  if (u.is_zero() || v.is_zero()) return Subspace(u.field(), u.ambient());
  // Solve sum a_i u_i = sum b_j v_j.
  const std::size_t n = u.ambient();
  Mat system(u.field(), n, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) system(r, i) = u.basis()[i][r];
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) system(r, u.dim() + j) = -v.basis()[j][r];
  std::vector<Vec> gens;
  for (const Vec& k : kernel_basis(system)) {
    Vec w = zero_vec(u.field(), n);
    for (std::size_t i = 0; i < u.dim(); ++i) axpy(w, k[i], u.basis()[i]);
    gens.push_back(std::move(w));
  }
  return Subspace::span(u.field(), n, gens);
}

std::size_t quotient_dim(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient() != outer.ambient()) throw DimensionMismatch("quotient of subspaces of different ambient spaces");
  if (!outer.contains(inner)) throw InclusionViolation("quotient_dim requires the first subspace inside the second");
  return outer.dim() - inner.dim();
}

Subspace image(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw DimensionMismatch("image: matrix does not act on the subspace");
  std::vector<Vec> gens;
  gens.reserve(s.dim());
  for (const Vec& b : s.basis()) gens.push_back(m.apply(b));
  return Subspace::span(m.field(), m.rows(), gens);
}

Subspace column_space(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

}  // namespace qstrat
