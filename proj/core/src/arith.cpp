#include "eigencone/arith.hpp"

#include "eigencone/errors.hpp"

#include <sstream>
#include <utility>

namespace eigencone {

QVector to_rational(std::span<const Integer> v) {
  return QVector(v.begin(), v.end());
}

QVector to_rational(std::span<const int> v) {
  QVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rational(std::span<const int>(row)));
  return out;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

ZVector primitive(std::span<const Integer> v) {
  ZVector out(v.begin(), v.end());
  Integer g = content(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

ZVector primitive(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) {
    const Integer d = denominator(q);
    if (d != 1) l = boost::multiprecision::lcm(l, d);
  }
  ZVector z;
  z.reserve(v.size());
  for (const auto& q : v) z.push_back(numerator(q) * (l / denominator(q)));
  return primitive(std::span<const Integer>(z));
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix a = m;
  QMatrix inv(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw PreconditionError("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const Rational p = a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] /= p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < ncols; ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m.front().size();
  return rref(m, ncols).size();
}

std::size_t rank(const std::vector<ZVector>& rows) {
  QMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(std::span<const Integer>(r)));
  return rank(std::move(m));
}

std::vector<ZVector> nullspace(const std::vector<ZVector>& rows, std::size_t ncols) {
  QMatrix a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.push_back(to_rational(std::span<const Integer>(r)));
  const auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ZVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVector x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][free];
    basis.push_back(primitive(std::span<const Rational>(x)));
  }
  return basis;
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ')';
  return os.str();
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ')';
  return os.str();
}

}  // namespace eigencone
