#include "eigencone/rootdata.hpp"

#include "eigencone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eigencone {

// ---------------------------------------------------------------- Weight

Weight Weight::zero(int rank) { return Weight(QVector(rank, Rational(0))); }

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  w.coords.at(i) = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c >= 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

bool Weight::is_zero() const { return eigencone::is_zero(std::span<const Rational>(coords)); }

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& k) {
  for (auto& c : coords) c *= k;
  return *this;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < w.rank(); ++i) {
    const Rational& c = w.coords[i];
    if (c == 0) continue;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    const Rational a = abs(c);
    if (a != 1) os << a.str();
    os << "ω" << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------- labels

CartanLabel CartanLabel::parse(std::string_view text) {
  CartanLabel out;
  std::size_t pos = 0;
  auto fail = [&](std::string_view token) {
    throw ParseError("unknown Cartan label component '" + std::string(token) + "' in '" +
                     std::string(text) + "'");
  };
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("xX*", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.size() < 2) fail(tok);
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int n = 0;
    for (char c : tok.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(tok);
      n = n * 10 + (c - '0');
      if (n > 99) fail(tok);
    }
    bool ok = false;
    switch (t) {
      case 'A': ok = n >= 1; break;
      case 'B': ok = n >= 2; break;
      case 'C': ok = n >= 2; break;
      case 'D': ok = n >= 4; break;
      case 'E': ok = n >= 6 && n <= 8; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
      default: break;
    }
    if (!ok) fail(tok);
    out.factors.push_back({t, n});
    pos = end + 1;
  }
  if (out.rank() > 8) throw ParseError("rank of '" + std::string(text) + "' exceeds 8");
  return out;
}

std::string CartanLabel::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].str();
  return s;
}

int CartanLabel::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

IntMatrix cartan_matrix(FactorType t) {
  const int n = t.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.type) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      bond(1, 2);
      a[0][1] = -3;  // alpha_1 short
      break;
    default:
      throw ParseError(std::string("unknown Cartan type ") + t.type);
  }
  return a;
}

namespace {

// Symmetrizer d_i = (alpha_i, alpha_i)/2 with max 1 on each component.
std::vector<Rational> symmetrizer(const IntMatrix& a, const std::vector<std::vector<int>>& comps) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : comps) {
    d[comp.front()] = 1;
    std::vector<int> stack{comp.front()};
    std::vector<bool> seen(n, false);
    seen[comp.front()] = true;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0 || seen[j]) continue;
        d[j] = Rational(a[i][j]) * d[i] / Rational(a[j][i]);
        seen[j] = true;
        stack.push_back(j);
      }
    }
    Rational mx = 0;
    for (int i : comp) mx = std::max(mx, d[i]);
    for (int i : comp) d[i] /= mx;
  }
  return d;
}

std::vector<std::vector<int>> components(const IntMatrix& a, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp;
    std::vector<int> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (auto it = left.begin(); it != left.end();) {
        if (a[i][*it] != 0) {
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& nodes) {
  IntMatrix s(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) s[i][j] = a[nodes[i]][nodes[j]];
  return s;
}

}  // namespace

FactorType classify_cartan(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (components(a, all).size() != 1) throw PreconditionError("classify_cartan: not connected");
  int max_bond = 1;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) {
        ++degree[i];
        max_bond = std::max(max_bond, a[i][j] * a[j][i]);
      }
  if (max_bond == 3) return {'G', 2};
  if (max_bond == 2) {
    if (n == 4) {
      // F4 has the double bond in the middle; B4/C4 at an end.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a[i][j] * a[j][i] == 2 && degree[i] == 2 && degree[j] == 2) return {'F', 4};
    }
    if (n == 2) return {'B', 2};
    const auto d = symmetrizer(a, {all});
    const int short_count =
        static_cast<int>(std::count_if(d.begin(), d.end(), [](const Rational& x) { return x < 1; }));
    return {short_count == 1 ? 'B' : 'C', n};
  }
  const auto branch = std::find_if(degree.begin(), degree.end(), [](int x) { return x >= 3; });
  if (branch == degree.end()) return {'A', n};
  // Arm lengths from the branch node.
  const int b = static_cast<int>(branch - degree.begin());
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (j == b || a[b][j] == 0) continue;
    int len = 1, prev = b, cur = j;
    for (;;) {
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (k != cur && k != prev && a[cur][k] != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {'D', n};
  return {'E', n};
}

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::build(std::string_view label) { return build(CartanLabel::parse(label)); }

RootSystem RootSystem::build(const CartanLabel& label) {
  RootSystem rs;
  rs.rank_ = label.rank();
  rs.cartan_.assign(rs.rank_, std::vector<int>(rs.rank_, 0));
  int offset = 0;
  for (const auto& f : label.factors) {
    const IntMatrix block = cartan_matrix(f);
    SimpleFactor sf{f, {}};
    for (int i = 0; i < f.rank; ++i) {
      sf.nodes.push_back(offset + i);
      for (int j = 0; j < f.rank; ++j) rs.cartan_[offset + i][offset + j] = block[i][j];
    }
    rs.factors_.push_back(std::move(sf));
    offset += f.rank;
  }
  rs.label_ = label.str();
  rs.finish();
  return rs;
}

RootSystem RootSystem::from_cartan(IntMatrix cartan) {
  const int n = static_cast<int>(cartan.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n) throw PreconditionError("Cartan matrix not square");
    if (cartan[i][i] != 2) throw PreconditionError("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j)
      if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)))
        throw PreconditionError("Cartan matrix off-diagonal entries invalid");
  }
  RootSystem rs;
  rs.rank_ = n;
  rs.cartan_ = std::move(cartan);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::string label;
  for (const auto& comp : components(rs.cartan_, all)) {
    const FactorType t = classify_cartan(submatrix(rs.cartan_, comp));
    rs.factors_.push_back({t, comp});
    label += (label.empty() ? "" : "x") + t.str();
  }
  rs.label_ = label.empty() ? "trivial" : label;
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = rank_;
  std::vector<std::vector<int>> comps;
  for (const auto& f : factors_) comps.push_back(f.nodes);
  half_norm_ = symmetrizer(cartan_, comps);
  form_.assign(n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i][j] = Rational(cartan_[i][j]) * half_norm_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (form_[i][j] != form_[j][i]) throw PreconditionError("Cartan matrix not symmetrizable");
  // Positive definiteness (Sylvester) rules out affine and indefinite types.
  {
    QMatrix f = form_;
    for (int k = 0; k < n; ++k) {
      if (f[k][k] <= 0) throw PreconditionError("Cartan matrix is not of finite type");
      for (int i = k + 1; i < n; ++i) {
        const Rational m = f[i][k] / f[k][k];
        for (int j = k; j < n; ++j) f[i][j] -= m * f[k][j];
      }
    }
  }
  inverse_cartan_ = n ? inverse(to_rational(cartan_)) : QMatrix{};

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping positive images.
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < n; ++i) {
        int p = 0;  // <r, alpha_i^vee>
        for (int j = 0; j < n; ++j) p += cartan_[i][j] * r[j];
        if (p == 0) continue;
        Root s = r;
        s[i] -= p;
        if (std::any_of(s.begin(), s.end(), [](int c) { return c < 0; })) continue;
        if (seen.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  simple_index_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    simple_index_[i] = *find_root(r);
  }
}

std::optional<int> RootSystem::find_root(const Root& r) const {
  if (static_cast<int>(r.size()) != rank_) return std::nullopt;
  bool neg = false;
  for (int c : r)
    if (c != 0) {
      neg = c < 0;
      break;
    }
  Root key = r;
  if (neg)
    for (auto& c : key) c = -c;
  auto cmp = [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  };
  auto it = std::lower_bound(positive_.begin(), positive_.end(), key, cmp);
  if (it == positive_.end() || *it != key) return std::nullopt;
  const int idx = static_cast<int>(it - positive_.begin());
  return neg ? idx + num_positive_roots() : idx;
}

Root RootSystem::root(int signed_index) const {
  const int np = num_positive_roots();
  if (signed_index < np) return positive_.at(signed_index);
  Root r = positive_.at(signed_index - np);
  for (auto& c : r) c = -c;
  return r;
}

Root RootSystem::highest_root(int factor_index) const {
  const auto& nodes = factors_.at(factor_index).nodes;
  for (auto it = positive_.rbegin(); it != positive_.rend(); ++it) {
    bool inside = true;
    for (int i = 0; i < rank_; ++i)
      if ((*it)[i] != 0 && std::find(nodes.begin(), nodes.end(), i) == nodes.end()) inside = false;
    if (inside) return *it;
  }
  throw InconsistencyError("highest_root: empty factor");
}

Rational RootSystem::norm(const Root& r) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (r[i] && r[j]) s += Rational(r[i] * r[j]) * form_[i][j];
  return s;
}

Weight RootSystem::rho() const { return Weight(QVector(rank_, Rational(1))); }

Weight RootSystem::simple_root(int i) const {
  Weight w = zero_weight();
  for (int k = 0; k < rank_; ++k) w.coords[k] = cartan_[k][i];
  return w;
}

Weight RootSystem::root_weight(const Root& r) const {
  Weight w = zero_weight();
  for (int k = 0; k < rank_; ++k) {
    int c = 0;
    for (int j = 0; j < rank_; ++j) c += cartan_[k][j] * r[j];
    w.coords[k] = c;
  }
  return w;
}

QVector RootSystem::to_root_basis(const Weight& w) const {
  QVector a(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.coords[j] != 0 && inverse_cartan_[i][j] != 0) a[i] += inverse_cartan_[i][j] * w.coords[j];
  return a;
}

Weight RootSystem::from_root_basis(std::span<const Rational> a) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[j] != 0 && cartan_[i][j] != 0) w.coords[i] += Rational(cartan_[i][j]) * a[j];
  return w;
}

Rational RootSystem::pair(const Weight& lambda, const Root& beta) const {
  if (!find_root(beta)) {
    std::ostringstream os;
    os << "pair: not a root (";
    for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
    os << ")";
    throw PreconditionError(os.str());
  }
  // (lambda, beta) = sum_j c_j b_j d_j since (omega_i, alpha_j) = delta_ij d_j.
  Rational ip = 0;
  for (int j = 0; j < rank_; ++j)
    if (beta[j]) ip += lambda.coords[j] * Rational(beta[j]) * half_norm_[j];
  return 2 * ip / norm(beta);
}

Rational RootSystem::eval_x(const Weight& lambda, int k) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (lambda.coords[j] != 0) s += inverse_cartan_[k][j] * lambda.coords[j];
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a, b) = sum_i a_i^{root} (alpha_i, b) = sum_i a_i^{root} b_i d_i.
  const QVector ar = to_root_basis(a);
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    if (ar[i] != 0 && b.coords[i] != 0) s += ar[i] * b.coords[i] * half_norm_[i];
  return s;
}

Coweight RootSystem::kappa(const Weight& lambda) const {
  // alpha_i(kappa(lambda)) = (lambda, alpha_i) = c_i d_i.
  Coweight h{QVector(rank_)};
  for (int i = 0; i < rank_; ++i) h.coords[i] = lambda.coords[i] * half_norm_[i];
  return h;
}

Weight RootSystem::kappa_inverse(const Coweight& h) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i) w.coords[i] = h.coords[i] / half_norm_[i];
  return w;
}

// ---------------------------------------------------------------- Parabolic

Parabolic::Parabolic(const RootSystem& rs, std::vector<int> levi_nodes) : rank_(rs.rank()) {
  std::sort(levi_nodes.begin(), levi_nodes.end());
  levi_nodes.erase(std::unique(levi_nodes.begin(), levi_nodes.end()), levi_nodes.end());
  mask_.assign(rank_, false);
  for (int i : levi_nodes) {
    if (i < 0 || i >= rank_)
      throw PreconditionError("parabolic: node " + std::to_string(i + 1) + " out of range");
    mask_[i] = true;
  }
  levi_ = std::move(levi_nodes);
  for (int i = 0; i < rank_; ++i)
    if (!mask_[i]) omitted_.push_back(i);

  const auto roots = rs.positive_roots();
  QVector half_sum(rank_, Rational(0));
  for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
    bool inside = true;
    for (int i = 0; i < rank_; ++i)
      if (roots[r][i] != 0 && !mask_[i]) inside = false;
    if (!inside) continue;
    levi_roots_.push_back(r);
    for (int i = 0; i < rank_; ++i) half_sum[i] += roots[r][i];
  }
  for (auto& c : half_sum) c /= 2;
  rho_levi_ = rs.from_root_basis(half_sum);

  for (const auto& comp : components(rs.cartan(), levi_))
    levi_factors_.push_back({classify_cartan(submatrix(rs.cartan(), comp)), comp});
}

Parabolic Parabolic::omitting(const RootSystem& rs, std::vector<int> omitted) {
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (std::find(omitted.begin(), omitted.end(), i) == omitted.end()) levi.push_back(i);
  for (int k : omitted)
    if (k < 0 || k >= rs.rank())
      throw PreconditionError("parabolic: node " + std::to_string(k + 1) + " out of range");
  return Parabolic(rs, std::move(levi));
}

Parabolic Parabolic::borel(const RootSystem& rs) { return Parabolic(rs, {}); }

Parabolic Parabolic::whole(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 0);
  return Parabolic(rs, std::move(all));
}

std::string Parabolic::levi_label() const {
  if (levi_factors_.empty()) return "T";
  std::string s;
  for (const auto& f : levi_factors_) s += (s.empty() ? "" : "x") + f.type.str();
  return s;
}

}  // namespace eigencone
