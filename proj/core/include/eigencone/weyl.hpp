#pragma once

// Weyl group of a finite root system, fully enumerated.
//
// Elements are addressed by WeylId, an index into the canonical enumeration
// (ordered by length, then lexicographically by canonical form). The
// canonical form of w is the tuple (w(omega_1), ..., w(omega_r)).
//
// Word convention: "s4 s3 s1 s2" denotes the product s4*s3*s1*s2, so the
// rightmost letter acts first on weights. Bruhat covers use left
// multiplication: v -(beta)-> w means w = s_beta * v and l(w) = l(v) + 1.

#include "eigencone/rootdata.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eigencone {

using WeylId = std::uint32_t;

/// Value form of a Weyl group element.
struct WeylElem {
  std::vector<int> canonical;  ///< column i = coordinates of w(omega_i)
  int length = 0;
  std::vector<int> word;  ///< lexicographically minimal reduced word (0-based letters)

  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.canonical == b.canonical; }
};

struct CoverDatum {
  WeylId lower;  ///< v
  WeylId upper;  ///< w = s_beta v
  int beta;      ///< index of the positive root beta
  bool simple;   ///< beta is a simple root
};

struct DeltaSets {
  std::vector<int> delta;        ///< Delta_w = Delta n w(R_l^+ u R^-)
  std::vector<int> delta_prime;  ///< Delta'_w = Delta n w R^-
};

class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 400000;

  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  std::size_t size() const { return length_.size(); }
  WeylId identity() const { return 0; }
  WeylId longest() const { return static_cast<WeylId>(size() - 1); }
  int rank() const { return rs_->rank(); }

  int length(WeylId w) const { return length_[w]; }
  WeylElem element(WeylId w) const;
  WeylId id_of(const WeylElem& e) const;
  const std::vector<int>& word(WeylId w) const { return word_[w]; }

  WeylId simple_reflection(int i) const { return left_[i * size()]; }
  /// s_i * w
  WeylId left_multiply(int i, WeylId w) const { return left_[i * size() + w]; }
  /// w * s_i
  WeylId right_multiply(WeylId w, int i) const { return right_[i * size() + w]; }
  WeylId multiply(WeylId a, WeylId b) const;
  WeylId inverse(WeylId w) const { return inverse_[w]; }
  /// Reflection s_beta for a positive root index.
  WeylId reflection(int positive_root) const { return reflection_[positive_root]; }
  int sign(WeylId w) const { return length_[w] % 2 ? -1 : 1; }

  Weight act(WeylId w, const Weight& lambda) const;
  /// Image of a signed root index under w (signed index convention of
  /// RootSystem::find_root).
  int act_root(WeylId w, int root) const {
    return root_perm_[static_cast<std::size_t>(w) * 2 * nroots_ + root];
  }
  bool is_positive_root(int signed_index) const { return signed_index < nroots_; }

  /// Parses "s4 s3 s1 s2", "s4s3s1s2", "1" or "e" (1-based letters).
  WeylId parse(std::string_view word) const;
  /// Word string with 1-based letters, "1" for the identity.
  std::string word_string(WeylId w) const;

  // Parabolic combinatorics.
  bool in_minimal_reps(WeylId w, const Parabolic& p) const;
  /// W^P in canonical order (by length, then canonical form).
  std::vector<WeylId> minimal_reps(const Parabolic& p) const;
  /// Order of the parabolic subgroup W_P.
  std::size_t parabolic_order(const Parabolic& p) const;
  /// Longest element of W_P.
  WeylId longest_of(const Parabolic& p) const;
  /// All v in W^P with v -(beta)-> w. Throws PreconditionError if w is not in W^P.
  std::vector<CoverDatum> covers(WeylId w, const Parabolic& p) const;
  /// True iff u^{-1} alpha_l in R^+ \ R_l^+; asserts agreement with the
  /// length/W^P criterion for s_l u.
  bool cover_test(WeylId u, int ell, const Parabolic& p) const;
  /// Phi_v = {alpha > 0 : v^{-1} alpha < 0}, as positive root indices.
  std::vector<int> inversion_set(WeylId v) const;
  DeltaSets delta_sets(WeylId w, const Parabolic& p) const;

 private:
  const RootSystem* rs_;
  int nroots_ = 0;  // number of positive roots
  std::vector<std::vector<int>> canonical_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<WeylId> left_, right_, inverse_, reflection_;
  std::vector<int> root_perm_;
  std::unordered_map<std::string, WeylId> index_;
};

}  // namespace eigencone
