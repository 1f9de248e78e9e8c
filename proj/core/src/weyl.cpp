#include "eigencone/weyl.hpp"

#include "eigencone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace eigencone {

namespace {

// Hash key: image of rho, which determines the element.
std::string rho_key(const std::vector<int>& canonical, int r) {
  std::string key;
  key.reserve(static_cast<std::size_t>(r) * 3);
  for (int row = 0; row < r; ++row) {
    int s = 0;
    for (int col = 0; col < r; ++col) s += canonical[col * r + row];
    key += std::to_string(s);
    key += ',';
  }
  return key;
}

// s_i applied on the left: every column lambda -> lambda - <lambda, alpha_i^vee> alpha_i.
std::vector<int> left_reflect(const std::vector<int>& m, int i, const IntMatrix& a, int r) {
  std::vector<int> out = m;
  for (int col = 0; col < r; ++col) {
    const int c = m[col * r + i];
    if (c == 0) continue;
    for (int k = 0; k < r; ++k) out[col * r + k] -= c * a[k][i];
  }
  return out;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs), nroots_(rs.num_positive_roots()) {
  const int r = rs.rank();
  const IntMatrix& a = rs.cartan();

  // Orbit enumeration from the identity, layer by layer; s_i w is longer
  // than w exactly when <w rho, alpha_i^vee> > 0.
  std::vector<int> ident(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) ident[i * r + i] = 1;
  std::vector<std::pair<int, std::vector<int>>> all{{0, ident}};
  std::unordered_map<std::string, int> seen{{rho_key(ident, r), 0}};
  std::vector<std::vector<int>> layer{ident};
  for (int len = 1; !layer.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& m : layer) {
      for (int i = 0; i < r; ++i) {
        int rho_i = 0;
        for (int col = 0; col < r; ++col) rho_i += m[col * r + i];
        if (rho_i <= 0) continue;
        auto n = left_reflect(m, i, a, r);
        if (seen.emplace(rho_key(n, r), len).second) {
          next.push_back(n);
          all.emplace_back(len, std::move(n));
          if (all.size() > kMaxOrder)
            throw ResourceError("Weyl group of " + rs.label() + " exceeds " +
                                std::to_string(kMaxOrder) + " elements");
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());

  const std::size_t n = all.size();
  canonical_.reserve(n);
  length_.reserve(n);
  for (std::size_t id = 0; id < n; ++id) {
    index_.emplace(rho_key(all[id].second, r), static_cast<WeylId>(id));
    length_.push_back(all[id].first);
    canonical_.push_back(std::move(all[id].second));
  }

  auto lookup = [&](const std::vector<int>& m) {
    auto it = index_.find(rho_key(m, r));
    if (it == index_.end()) throw InconsistencyError("Weyl group not closed");
    return it->second;
  };

  left_.assign(static_cast<std::size_t>(r) * n, 0);
  right_.assign(static_cast<std::size_t>(r) * n, 0);
  for (std::size_t id = 0; id < n; ++id) {
    const auto& m = canonical_[id];
    for (int i = 0; i < r; ++i) {
      left_[i * n + id] = lookup(left_reflect(m, i, a, r));
      // (w s_i)(omega_i) = w(omega_i) - w(alpha_i); other columns unchanged.
      std::vector<int> rm = m;
      for (int k = 0; k < r; ++k) {
        int walpha = 0;
        for (int col = 0; col < r; ++col) walpha += a[col][i] * m[col * r + k];
        rm[i * r + k] -= walpha;
      }
      right_[i * n + id] = lookup(rm);
    }
  }

  // Lexicographically minimal reduced words: smallest left descent first.
  word_.assign(n, {});
  inverse_.assign(n, 0);
  std::vector<int> simple_perm(static_cast<std::size_t>(r) * 2 * nroots_);
  for (int i = 0; i < r; ++i) {
    for (int root = 0; root < 2 * nroots_; ++root) {
      Root b = rs.root(root);
      int p = 0;
      for (int j = 0; j < r; ++j) p += a[i][j] * b[j];
      b[i] -= p;
      simple_perm[(static_cast<std::size_t>(i) * 2 * nroots_) + root] = *rs.find_root(b);
    }
  }
  root_perm_.assign(n * 2 * nroots_, 0);
  for (int root = 0; root < 2 * nroots_; ++root) root_perm_[root] = root;
  for (std::size_t id = 1; id < n; ++id) {
    int first = -1;
    for (int i = 0; i < r && first < 0; ++i)
      if (length_[left_[i * n + id]] < length_[id]) first = i;
    const WeylId rest = left_[first * n + id];
    word_[id] = {first};
    word_[id].insert(word_[id].end(), word_[rest].begin(), word_[rest].end());
    inverse_[id] = right_[first * n + inverse_[rest]];
    for (int root = 0; root < 2 * nroots_; ++root)
      root_perm_[id * 2 * nroots_ + root] =
          simple_perm[static_cast<std::size_t>(first) * 2 * nroots_ +
                      root_perm_[static_cast<std::size_t>(rest) * 2 * nroots_ + root]];
  }

  reflection_.assign(nroots_, 0);
  for (int b = 0; b < nroots_; ++b) {
    const Root beta = rs.root(b);
    const Weight bw = rs.root_weight(beta);
    std::vector<int> m(static_cast<std::size_t>(r) * r, 0);
    for (int col = 0; col < r; ++col) {
      const Rational p = rs.pair(rs.fundamental_weight(col), beta);
      const int pi = static_cast<int>(numerator(p));
      m[col * r + col] = 1;
      for (int k = 0; k < r; ++k) m[col * r + k] -= pi * static_cast<int>(numerator(bw.coords[k]));
    }
    reflection_[b] = lookup(m);
  }
}

WeylElem WeylGroup::element(WeylId w) const { return {canonical_.at(w), length_.at(w), word_.at(w)}; }

WeylId WeylGroup::id_of(const WeylElem& e) const {
  auto it = index_.find(rho_key(e.canonical, rank()));
  if (it == index_.end()) throw PreconditionError("id_of: not an element of W(" + rs_->label() + ")");
  return it->second;
}

WeylId WeylGroup::multiply(WeylId a, WeylId b) const {
  WeylId out = b;
  const auto& w = word_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_multiply(*it, out);
  return out;
}

Weight WeylGroup::act(WeylId w, const Weight& lambda) const {
  const int r = rank();
  const auto& m = canonical_[w];
  Weight out = Weight::zero(r);
  for (int col = 0; col < r; ++col) {
    const Rational& c = lambda.coords[col];
    if (c == 0) continue;
    for (int k = 0; k < r; ++k)
      if (m[col * r + k] != 0) out.coords[k] += c * m[col * r + k];
  }
  return out;
}

WeylId WeylGroup::parse(std::string_view text) const {
  std::vector<int> letters;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad Weyl word '" + std::string(text) + "': " + why);
  };
  bool identity_token = false;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 's' || c == 'S') {
      ++i;
      if (i < text.size() && text[i] == '_') ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a node number after 's'");
      int node = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        node = node * 10 + (text[i++] - '0');
      if (node < 1 || node > rank())
        fail("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank()));
      letters.push_back(node - 1);
      continue;
    }
    if (c == '1' || c == 'e') {
      identity_token = true;
      ++i;
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  if (identity_token && !letters.empty()) fail("identity token mixed with letters");
  WeylId out = identity();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = left_multiply(*it, out);
  return out;
}

std::string WeylGroup::word_string(WeylId w) const {
  if (word_[w].empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < word_[w].size(); ++k)
    s += (k ? " s" : "s") + std::to_string(word_[w][k] + 1);
  return s;
}

bool WeylGroup::in_minimal_reps(WeylId w, const Parabolic& p) const {
  for (int i : p.levi_nodes())
    if (!is_positive_root(act_root(w, rs_->simple_root_index(i)))) return false;
  return true;
}

std::vector<WeylId> WeylGroup::minimal_reps(const Parabolic& p) const {
  std::vector<WeylId> out;
  for (WeylId w = 0; w < size(); ++w)
    if (in_minimal_reps(w, p)) out.push_back(w);
  return out;
}

std::size_t WeylGroup::parabolic_order(const Parabolic& p) const {
  return size() / minimal_reps(p).size();
}

WeylId WeylGroup::longest_of(const Parabolic& p) const {
  WeylId w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : p.levi_nodes()) {
      const WeylId n = left_multiply(i, w);
      if (length_[n] > length_[w]) {
        w = n;
        grew = true;
      }
    }
  }
  return w;
}

std::vector<CoverDatum> WeylGroup::covers(WeylId w, const Parabolic& p) const {
  if (!in_minimal_reps(w, p))
    throw PreconditionError("covers: " + word_string(w) + " is not a minimal coset representative");
  std::vector<CoverDatum> out;
  const WeylId winv = inverse(w);
  for (int b = 0; b < nroots_; ++b) {
    if (is_positive_root(act_root(winv, b))) continue;
    const WeylId v = multiply(reflection_[b], w);
    if (length_[v] + 1 != length_[w] || !in_minimal_reps(v, p)) continue;
    const Root beta = rs_->root(b);
    int height = 0;
    for (int c : beta) height += c;
    out.push_back({v, w, b, height == 1});
  }
  return out;
}

bool WeylGroup::cover_test(WeylId u, int ell, const Parabolic& p) const {
  const int image = act_root(inverse(u), rs_->simple_root_index(ell));
  bool by_root = is_positive_root(image);
  if (by_root) {
    const Root g = rs_->root(image);
    bool in_levi = true;
    for (int i = 0; i < rank(); ++i)
      if (g[i] != 0 && !p.in_levi(i)) in_levi = false;
    by_root = !in_levi;
  }
  const WeylId uhat = left_multiply(ell, u);
  const bool by_length = in_minimal_reps(uhat, p) && length_[uhat] == length_[u] + 1;
  if (in_minimal_reps(u, p) && by_root != by_length)
    throw InconsistencyError("cover_test: root and length criteria disagree for " + word_string(u));
  return by_root;
}

std::vector<int> WeylGroup::inversion_set(WeylId v) const {
  std::vector<int> out;
  const WeylId vinv = inverse(v);
  for (int b = 0; b < nroots_; ++b)
    if (!is_positive_root(act_root(vinv, b))) out.push_back(b);
  return out;
}

DeltaSets WeylGroup::delta_sets(WeylId w, const Parabolic& p) const {
  if (!in_minimal_reps(w, p))
    throw PreconditionError("delta_sets: " + word_string(w) + " is not a minimal coset representative");
  DeltaSets out;
  const WeylId winv = inverse(w);
  for (int i = 0; i < rank(); ++i) {
    const int image = act_root(winv, rs_->simple_root_index(i));
    bool in_levi_pos = false;
    if (is_positive_root(image)) {
      const Root g = rs_->root(image);
      in_levi_pos = true;
      for (int k = 0; k < rank(); ++k)
        if (g[k] != 0 && !p.in_levi(k)) in_levi_pos = false;
    }
    const bool negative = !is_positive_root(image);
    if (negative) out.delta_prime.push_back(i);
    if (negative || in_levi_pos) out.delta.push_back(i);
  }
  return out;
}

}  // namespace eigencone
