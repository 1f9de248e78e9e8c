#pragma once

// Ordinary and deformed Schubert calculus on H*(G/P).
//
// Public indexing: [X_w] for w in W^P is the class of the closure of
// BwP/P, of codimension dim G/P - l(w); [X_e] is the point class.
//
// Internally the G/B table uses the dual indexing sigma_x = [X_{w0 x}]
// (codimension l(x)), where Chevalley's formula reads
//   sigma_{s_i} * sigma_x = sum_{x -> x s_b, l+1} <omega_i, b^vee> sigma_{x s_b}.
// A G/P class [X_w] pulls back to [X_{w w0P}] = sigma_{w0 w w0P}.

#include "eigencone/weyl.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace eigencone {

struct SchubertClass {
  Parabolic parabolic;
  std::map<WeylId, Integer> coeffs;  ///< w in W^P -> coefficient of [X_w]
  int codim = 0;

  bool is_zero() const { return coeffs.empty(); }
};

/// Structure constants of H*(G/B) in the sigma indexing, computed once.
class ProductTable {
 public:
  using Term = std::pair<WeylId, std::int64_t>;
  using Sparse = std::vector<Term>;

  static constexpr int kFormatVersion = 1;

  explicit ProductTable(const WeylGroup& w);
  /// Loads from `file` if it exists and matches, else builds and writes it.
  static ProductTable cached(const WeylGroup& w, const std::filesystem::path& dir);

  const WeylGroup& weyl() const { return *weyl_; }
  /// sigma_a * sigma_b.
  const Sparse& sigma_product(WeylId a, WeylId b) const;
  std::size_t nonzero_count() const;

  void save(const std::filesystem::path& file) const;
  static std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& label);

 private:
  struct Loaded {};
  ProductTable(const WeylGroup& w, Loaded) : weyl_(&w) {}
  static bool try_load(const WeylGroup& w, const std::filesystem::path& file, ProductTable& out);
  bool stored(WeylId a, WeylId b) const;

  const WeylGroup* weyl_;
  std::size_t n_ = 0;
  std::vector<Sparse> table_;  // index a*n + b, filled when l(a) <= l(b)
};

/// Operations on H*(G/P) in the [X_w] indexing.
class Schubert {
 public:
  explicit Schubert(const ProductTable& table) : table_(&table) {}

  const WeylGroup& weyl() const { return table_->weyl(); }
  int dim(const Parabolic& p) const;
  int codim(WeylId w, const Parabolic& p) const;
  /// The G/B index sigma_{w0 w w0P} of the pullback of [X_w].
  WeylId lift(WeylId w, const Parabolic& p) const;

  SchubertClass basis_class(WeylId w, const Parabolic& p) const;
  SchubertClass cup(WeylId u, WeylId v, const Parabolic& p) const;
  SchubertClass cup(const SchubertClass& a, const SchubertClass& b) const;
  /// c with prod [X_{w_i}] = c [X_e]. Throws PreconditionError unless the
  /// codimensions add up to dim G/P.
  Integer multi_coeff(std::span<const WeylId> words, const Parabolic& p) const;

 private:
  void require_minimal(WeylId w, const Parabolic& p, const char* op) const;
  const ProductTable* table_;
};

/// chi_w = rho - 2 rho^L + w^{-1} rho.
Weight chi(const WeylGroup& w, WeylId elem, const Parabolic& p);

struct LeviMovability {
  bool movable = false;
  Integer coefficient;           ///< ordinary intersection number
  std::vector<Rational> gaps;    ///< g_k for k in Delta \ Delta(P), in order
};

/// Degree gap g_k = (chi_e - sum_j chi_{w_j})(x_k), >= 0 whenever the
/// ordinary product is nonzero.
std::vector<Rational> degree_gaps(const WeylGroup& w, std::span<const WeylId> words, const Parabolic& p);

/// Deformed (odot_0) product test: movable iff the ordinary coefficient is
/// nonzero and every degree gap vanishes.
LeviMovability levi_movable(const Schubert& sch, std::span<const WeylId> words, const Parabolic& p);

}  // namespace eigencone
