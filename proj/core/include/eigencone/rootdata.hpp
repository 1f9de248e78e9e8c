#pragma once

// Finite root data: Cartan matrices in Bourbaki numbering, positive roots,
// fundamental weights, the invariant form, and the pairings built on them.
//
// Conventions
//   cartan[i][j] = <alpha_j, alpha_i^vee>.
//   Weights are stored in the fundamental-weight basis, so the i-th
//   coordinate of lambda is <lambda, alpha_i^vee>.
//   Roots are integer vectors in the simple-root basis.
//   The form is normalized per simple factor so long roots have (b,b) = 2.
//   Node indices are 0-based in the API; text formats use 1-based nodes.

#include "eigencone/arith.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigencone {

struct Weight {
  QVector coords;

  Weight() = default;
  explicit Weight(QVector c) : coords(std::move(c)) {}

  static Weight zero(int rank);
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  bool is_integral() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
};

/// Element of h in the basis {x_i} dual to the simple roots.
struct Coweight {
  QVector coords;
  friend bool operator==(const Coweight&, const Coweight&) = default;
};

using Root = std::vector<int>;

struct FactorType {
  char type = 'A';
  int rank = 1;
  friend bool operator==(const FactorType&, const FactorType&) = default;
  std::string str() const { return std::string(1, type) + std::to_string(rank); }
};

/// Parsed form of labels such as "D4", "A3" or "A1xA1xA1".
struct CartanLabel {
  std::vector<FactorType> factors;

  static CartanLabel parse(std::string_view text);
  std::string str() const;
  int rank() const;
};

struct SimpleFactor {
  FactorType type;
  std::vector<int> nodes;
};

/// Cartan matrix of one irreducible finite type in Bourbaki numbering.
IntMatrix cartan_matrix(FactorType t);

/// Recognizes the irreducible type of a connected Cartan matrix.
FactorType classify_cartan(const IntMatrix& cartan);

class RootSystem {
 public:
  static RootSystem build(std::string_view label);
  static RootSystem build(const CartanLabel& label);
  /// Builds from an arbitrary finite-type Cartan matrix (used for Levi
  /// factors, whose node order need not be Bourbaki).
  static RootSystem from_cartan(IntMatrix cartan);

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }

  std::span<const Root> positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  /// Signed index of a root: 0..N-1 positive roots, N..2N-1 their negatives.
  std::optional<int> find_root(const Root& r) const;
  Root root(int signed_index) const;
  int simple_root_index(int i) const { return simple_index_[i]; }
  /// Highest root of the simple factor containing node `factor_node`.
  Root highest_root(int factor_index) const;

  const QMatrix& form() const { return form_; }
  /// (alpha_i, alpha_i) / 2.
  const Rational& half_norm(int i) const { return half_norm_[i]; }
  Rational norm(const Root& r) const;

  Weight zero_weight() const { return Weight::zero(rank_); }
  Weight fundamental_weight(int i) const { return Weight::fundamental(rank_, i); }
  Weight rho() const;
  Weight simple_root(int i) const;
  Weight root_weight(const Root& r) const;

  QVector to_root_basis(const Weight& w) const;
  Weight from_root_basis(std::span<const Rational> a) const;

  /// <lambda, beta^vee>; throws PreconditionError if beta is not a root.
  Rational pair(const Weight& lambda, const Root& beta) const;
  /// lambda(x_k): the alpha_k coefficient of lambda in the simple-root basis.
  Rational eval_x(const Weight& lambda, int k) const;
  Rational inner(const Weight& a, const Weight& b) const;

  Coweight kappa(const Weight& lambda) const;
  Weight kappa_inverse(const Coweight& h) const;

  /// Coordinates of fundamental weight i in the simple-root basis.
  const QMatrix& inverse_cartan() const { return inverse_cartan_; }

 private:
  RootSystem() = default;
  void finish();

  int rank_ = 0;
  std::string label_;
  IntMatrix cartan_;
  QMatrix inverse_cartan_;
  std::vector<SimpleFactor> factors_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  std::vector<Rational> half_norm_;
  QMatrix form_;
};

/// Standard parabolic subgroup P, described by the simple roots Delta(P)
/// of its Levi factor.
class Parabolic {
 public:
  Parabolic() = default;
  Parabolic(const RootSystem& rs, std::vector<int> levi_nodes);
  /// P whose Levi omits exactly `omitted` (so {k} gives the maximal P_k).
  static Parabolic omitting(const RootSystem& rs, std::vector<int> omitted);
  static Parabolic borel(const RootSystem& rs);
  static Parabolic whole(const RootSystem& rs);

  int rank() const { return rank_; }
  const std::vector<int>& levi_nodes() const { return levi_; }
  const std::vector<int>& omitted_nodes() const { return omitted_; }
  bool in_levi(int i) const { return mask_[i]; }
  bool is_maximal() const { return omitted_.size() == 1; }
  bool is_borel() const { return levi_.empty(); }

  /// Indices into RootSystem::positive_roots() of the roots of the Levi.
  const std::vector<int>& levi_positive_roots() const { return levi_roots_; }
  const Weight& rho_L() const { return rho_levi_; }
  /// Levi factors: connected components of Delta(P), with their types.
  const std::vector<SimpleFactor>& levi_factors() const { return levi_factors_; }
  std::string levi_label() const;

  friend bool operator==(const Parabolic& a, const Parabolic& b) {
    return a.rank_ == b.rank_ && a.levi_ == b.levi_;
  }

 private:
  int rank_ = 0;
  std::vector<int> levi_;
  std::vector<int> omitted_;
  std::vector<bool> mask_;
  std::vector<int> levi_roots_;
  Weight rho_levi_;
  std::vector<SimpleFactor> levi_factors_;
};

std::string to_string(const Weight& w);

}  // namespace eigencone
