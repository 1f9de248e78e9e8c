#include "eigencone/oracle.hpp"

#include "eigencone/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eigencone {

namespace {

using IVec = std::vector<int>;

struct Tables {
  int r = 0;
  std::vector<std::vector<std::int64_t>> gram;  // scaled (omega_i, omega_j)
  std::vector<IVec> pos_roots;                  // omega coordinates
  IntMatrix cartan;
  QMatrix ainv;
};

Tables make_tables(const RootSystem& rs) {
  Tables t;
  t.r = rs.rank();
  t.cartan = rs.cartan();
  t.ainv = rs.inverse_cartan();
  QMatrix g(t.r, QVector(t.r));
  Integer den = 1;
  for (int i = 0; i < t.r; ++i)
    for (int j = 0; j < t.r; ++j) {
      g[i][j] = t.ainv[j][i] * rs.half_norm(j);
      den = boost::multiprecision::lcm(den, Integer(denominator(g[i][j])));
    }
  t.gram.assign(t.r, std::vector<std::int64_t>(t.r));
  for (int i = 0; i < t.r; ++i)
    for (int j = 0; j < t.r; ++j) t.gram[i][j] = static_cast<std::int64_t>(numerator(Rational(g[i][j] * den)));
  for (const Root& a : rs.positive_roots()) {
    const Weight w = rs.root_weight(a);
    IVec v(t.r);
    for (int i = 0; i < t.r; ++i) v[i] = static_cast<int>(numerator(w.coords[i]));
    t.pos_roots.push_back(std::move(v));
  }
  return t;
}

std::int64_t ip(const Tables& t, const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (int i = 0; i < t.r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < t.r; ++j) s += static_cast<std::int64_t>(a[i]) * t.gram[i][j] * b[j];
  }
  return s;
}

// Reflects to the dominant chamber; returns the sign of the Weyl element used.
int to_dominant(const Tables& t, IVec& v) {
  int sign = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < t.r; ++i)
      if (v[i] < 0) {
        const int c = v[i];
        for (int m = 0; m < t.r; ++m) v[m] -= c * t.cartan[m][i];
        sign = -sign;
        moved = true;
      }
  }
  return sign;
}

IVec add(IVec a, const IVec& b, int k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

std::map<IVec, std::int64_t> character(const Tables& t, const IVec& lambda) {
  // Dominant weights below lambda, reached by subtracting positive roots.
  std::set<IVec> seen{lambda};
  std::vector<IVec> queue{lambda};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const IVec& a : t.pos_roots) {
      IVec n = add(queue[h], a, -1);
      if (std::any_of(n.begin(), n.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  // Order by depth (height of lambda - mu in the root basis).
  auto depth = [&](const IVec& mu) {
    Rational d = 0;
    for (int k = 0; k < t.r; ++k)
      for (int i = 0; i < t.r; ++i) d += t.ainv[k][i] * (lambda[i] - mu[i]);
    return d;
  };
  std::vector<std::pair<Rational, IVec>> order;
  for (const IVec& mu : queue) order.emplace_back(depth(mu), mu);
  std::sort(order.begin(), order.end());

  IVec rho(t.r, 1);
  const IVec lr = add(lambda, rho);
  const std::int64_t top = ip(t, lr, lr);
  std::map<IVec, std::int64_t> mult{{lambda, 1}};
  auto lookup = [&](IVec v) -> std::int64_t {
    to_dominant(t, v);
    auto it = mult.find(v);
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& [d, mu] : order) {
    if (mu == lambda) continue;
    std::int64_t num = 0;
    for (const IVec& a : t.pos_roots) {
      for (int k = 1;; ++k) {
        const IVec nu = add(mu, a, k);
        const std::int64_t m = lookup(nu);
        if (m == 0) break;
        std::int64_t term;
        if (__builtin_mul_overflow(m, ip(t, nu, a), &term) || __builtin_add_overflow(num, term, &num))
          throw ResourceError("invariant oracle: multiplicity overflow");
      }
    }
    const IVec mr = add(mu, rho);
    const std::int64_t den = top - ip(t, mr, mr);
    if (den <= 0 || (2 * num) % den != 0) throw InconsistencyError("Freudenthal recursion is not integral");
    const std::int64_t m = 2 * num / den;
    if (m != 0) mult[mu] = m;
  }
  return mult;
}

struct WeylMats {
  std::vector<IVec> cols;  // per element, r*r entries, column i = w(omega_i)
  std::vector<int> sign;
};

WeylMats weyl_mats(const WeylGroup& w) {
  WeylMats m;
  for (WeylId x = 0; x < w.size(); ++x) {
    m.cols.push_back(w.element(x).canonical);
    m.sign.push_back(w.sign(x));
  }
  return m;
}

IVec apply(const IVec& mat, const IVec& v, int r) {
  IVec out(r, 0);
  for (int i = 0; i < r; ++i)
    if (v[i] != 0)
      for (int k = 0; k < r; ++k) out[k] += v[i] * mat[i * r + k];
  return out;
}

std::int64_t steinberg(const Tables& t, const WeylMats& wm, const std::map<IVec, std::int64_t>& char_a,
                       const IVec& b, const IVec& nu) {
  const IVec rho(t.r, 1);
  const IVec nr = add(nu, rho);
  const IVec br = add(b, rho);
  std::int64_t out = 0;
  for (std::size_t x = 0; x < wm.cols.size(); ++x) {
    IVec v = add(apply(wm.cols[x], nr, t.r), br, -1);
    to_dominant(t, v);
    auto it = char_a.find(v);
    if (it != char_a.end()) out += wm.sign[x] * it->second;
  }
  return out;
}

IVec to_ivec(const Weight& w, const char* what) {
  IVec v;
  for (const auto& c : w.coords) {
    if (denominator(c) != 1 || c < 0) throw PreconditionError(std::string(what) + ": entries must be dominant integral");
    v.push_back(static_cast<int>(numerator(c)));
  }
  return v;
}

IVec dual(const WeylGroup& w, const IVec& v) {
  const Weight d = -w.act(w.longest(), Weight(to_rational(std::span<const int>(v))));
  IVec out;
  for (const auto& c : d.coords) out.push_back(static_cast<int>(numerator(c)));
  return out;
}

}  // namespace

std::map<std::vector<int>, std::int64_t> dominant_character(const RootSystem& rs, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw PreconditionError("dominant_character: wrong rank");
  if (std::any_of(lambda.begin(), lambda.end(), [](int c) { return c < 0; }))
    throw PreconditionError("dominant_character: weight is not dominant");
  return character(make_tables(rs), lambda);
}

std::int64_t tensor_multiplicity(const Context& ctx, const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& nu) {
  const Tables t = make_tables(ctx.roots());
  return steinberg(t, weyl_mats(ctx.weyl()), character(t, a), b, nu);
}

std::int64_t invariant_dim(const Context& ctx, const RayTuple& tuple, const OracleOptions& opts) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  if (tuple.s() > 0 && tuple.rank() != rs.rank()) throw PreconditionError("invariant_dim: wrong rank");
  std::vector<IVec> e;
  for (const auto& wt : tuple.weights) {
    IVec v = to_ivec(wt, "invariant_dim");
    const int h = std::accumulate(v.begin(), v.end(), 0);
    if (h > opts.max_height)
      throw ResourceError("invariant_dim: entry of height " + std::to_string(h) + " exceeds the bound " +
                          std::to_string(opts.max_height));
    if (h > 0) e.push_back(std::move(v));
  }
  if (e.empty()) return 1;
  if (e.size() == 1) return 0;
  if (e.size() == 2) return e[1] == dual(w, e[0]) ? 1 : 0;
  auto height = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(e.begin(), e.end(), [&](const IVec& a, const IVec& b) { return height(a) < height(b); });

  const Tables t = make_tables(rs);
  const WeylMats wm = weyl_mats(w);
  const IVec rho(t.r, 1);
  const std::size_t s = e.size();
  // Decompose V_{e[s-1]} x V_{e[1]} x ... x V_{e[s-3]} by Brauer-Klimyk.
  std::map<IVec, std::int64_t> chain{{e[s - 1], 1}};
  for (std::size_t j = 1; j + 2 < s; ++j) {
    std::map<IVec, std::int64_t> all;  // full weight multiset of V_{e[j]}
    for (const auto& [mu, m] : character(t, e[j])) {
      std::set<IVec> orbit;
      for (const IVec& mat : wm.cols) orbit.insert(apply(mat, mu, t.r));
      for (const IVec& o : orbit) all[o] += m;
    }
    std::map<IVec, std::int64_t> next;
    for (const auto& [nu, c] : chain)
      for (const auto& [mu, m] : all) {
        IVec v = add(add(nu, mu), rho);
        const int sg = to_dominant(t, v);
        if (std::any_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
        next[add(v, rho, -1)] += sg * c * m;
      }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    chain = std::move(next);
  }
  const auto char_a = character(t, e[0]);
  const IVec target = dual(w, e[s - 2]);
  std::int64_t out = 0;
  for (const auto& [nu, c] : chain) out += c * steinberg(t, wm, char_a, nu, target);
  return out;
}

}  // namespace eigencone
