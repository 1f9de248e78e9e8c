#pragma once

// Exact arithmetic helpers shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eigencone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using IntMatrix = std::vector<std::vector<int>>;

QVector to_rational(std::span<const Integer> v);
QVector to_rational(std::span<const int> v);

/// Scales `v` by a positive rational so that all entries become coprime
/// integers. The zero vector maps to the zero vector.
ZVector primitive(std::span<const Rational> v);
ZVector primitive(std::span<const Integer> v);

Integer content(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);
bool is_zero(std::span<const Integer> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Exact inverse by Gauss-Jordan elimination; throws PreconditionError if
/// the matrix is singular.
QMatrix inverse(const QMatrix& m);

std::size_t rank(QMatrix m);
std::size_t rank(const std::vector<ZVector>& rows);

/// Basis of {x : m x = 0}, each vector primitive-integral.
std::vector<ZVector> nullspace(const std::vector<ZVector>& rows, std::size_t ncols);

QMatrix to_rational(const IntMatrix& m);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Rational> v);
std::string to_string(std::span<const Integer> v);

}  // namespace eigencone
