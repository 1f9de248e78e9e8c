#include "eigencone/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace eigencone {

namespace {

ZVector checked_row(std::span<const Integer> row, int dim) {
  if (static_cast<int>(row.size()) != dim)
    throw PreconditionError("HRep: row of length " + std::to_string(row.size()) + " in dimension " +
                            std::to_string(dim));
  return primitive(row);
}

}  // namespace

std::size_t HRep::add_inequality(std::span<const Integer> row) {
  inequalities.push_back(checked_row(row, dim));
  return inequalities.size() - 1;
}

std::size_t HRep::add_inequality(std::span<const Rational> row) {
  const ZVector z = primitive(row);
  return add_inequality(std::span<const Integer>(z));
}

std::size_t HRep::add_equality(std::span<const Integer> row) {
  ZVector z = checked_row(row, dim);
  // Orientation of an equality is irrelevant; fix the first nonzero positive.
  for (const auto& c : z)
    if (c != 0) {
      if (c < 0)
        for (auto& x : z) x = -x;
      break;
    }
  equalities.push_back(std::move(z));
  return equalities.size() - 1;
}

std::size_t HRep::add_equality(std::span<const Rational> row) {
  const ZVector z = primitive(row);
  return add_equality(std::span<const Integer>(z));
}

void HRep::normalize() {
  auto dedupe = [](std::vector<ZVector>& rows) {
    std::set<ZVector> seen;
    std::vector<ZVector> out;
    for (auto& r : rows) {
      if (is_zero(std::span<const Integer>(r))) continue;
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
    rows = std::move(out);
  };
  dedupe(inequalities);
  dedupe(equalities);
}

bool HRep::contains(std::span<const Integer> x) const {
  for (const auto& a : inequalities)
    if (dot(std::span<const Integer>(a), x) < 0) return false;
  for (const auto& a : equalities)
    if (dot(std::span<const Integer>(a), x) != 0) return false;
  return true;
}

bool HRep::contains(std::span<const Rational> x) const {
  const ZVector z = primitive(x);
  return contains(std::span<const Integer>(z));
}

NotPointedError::NotPointedError(ZVector lineality)
    : PreconditionError("cone is not pointed; lineality vector " +
                        to_string(std::span<const Integer>(lineality))),
      lineality_(std::move(lineality)) {}

// ---------------------------------------------------------------- DD

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct DDRay {
  ZVector v;
  Bits zero;
};

}  // namespace

std::vector<Ray> extremal_rays(const HRep& h, DDStats* stats) {
  const int n = h.dim;
  if (n == 0) return {};
  // Constraint list: equalities first, then inequalities.
  std::vector<const ZVector*> rows;
  std::vector<bool> is_eq;
  for (const auto& a : h.equalities) {
    rows.push_back(&a);
    is_eq.push_back(true);
  }
  for (const auto& a : h.inequalities) {
    rows.push_back(&a);
    is_eq.push_back(false);
  }
  const std::size_t m = rows.size();

  // Initial simplicial cone from n independent rows (inequalities preferred).
  std::vector<std::size_t> basis;
  {
    QMatrix echelon;
    std::vector<std::size_t> pivot;
    auto try_add = [&](std::size_t idx) {
      QVector red = to_rational(std::span<const Integer>(*rows[idx]));
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        if (red[pivot[e]] == 0) continue;
        const Rational f = red[pivot[e]] / echelon[e][pivot[e]];
        for (int j = 0; j < n; ++j) red[j] -= f * echelon[e][j];
      }
      auto nz = std::find_if(red.begin(), red.end(), [](const Rational& q) { return q != 0; });
      if (nz == red.end()) return;
      pivot.push_back(static_cast<std::size_t>(nz - red.begin()));
      echelon.push_back(std::move(red));
      basis.push_back(idx);
    };
    for (std::size_t idx = 0; idx < m && static_cast<int>(basis.size()) < n; ++idx)
      if (!is_eq[idx]) try_add(idx);
    for (std::size_t idx = 0; idx < m && static_cast<int>(basis.size()) < n; ++idx)
      if (is_eq[idx]) try_add(idx);
  }
  if (static_cast<int>(basis.size()) < n) {
    std::vector<ZVector> all;
    for (const auto* r : rows) all.push_back(*r);
    throw NotPointedError(nullspace(all, static_cast<std::size_t>(n)).front());
  }

  QMatrix b;
  for (std::size_t idx : basis) b.push_back(to_rational(std::span<const Integer>(*rows[idx])));
  const QMatrix binv = inverse(b);
  std::vector<bool> processed(m, false);
  for (std::size_t idx : basis) processed[idx] = true;

  std::vector<DDRay> rays;
  for (int col = 0; col < n; ++col) {
    QVector v(n);
    for (int i = 0; i < n; ++i) v[i] = binv[i][col];
    DDRay r{primitive(std::span<const Rational>(v)), Bits(m)};
    for (int k = 0; k < n; ++k)
      if (k != col) r.zero.set(basis[k]);
    rays.push_back(std::move(r));
  }

  std::vector<std::size_t> order;
  for (std::size_t idx = 0; idx < m; ++idx)
    if (is_eq[idx]) order.push_back(idx);  // includes equalities in the basis
  for (std::size_t idx = 0; idx < m; ++idx)
    if (!is_eq[idx] && !processed[idx]) order.push_back(idx);

  std::size_t max_rays = rays.size();
  std::size_t adj_tests = 0;
  for (std::size_t idx : order) {
    const ZVector& a = *rows[idx];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(std::span<const Integer>(a), std::span<const Integer>(rays[i].v));
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else
        zer.push_back(i);
    }
    processed[idx] = true;
    if (neg.empty() && (!is_eq[idx] || pos.empty())) {
      for (std::size_t i : zer) rays[i].zero.set(idx);
      continue;
    }
    std::vector<DDRay> next;
    next.reserve(zer.size() + (is_eq[idx] ? 0 : pos.size()));
    for (std::size_t i : zer) {
      DDRay r = rays[i];
      r.zero.set(idx);
      next.push_back(std::move(r));
    }
    if (!is_eq[idx])
      for (std::size_t i : pos) next.push_back(rays[i]);

    const std::size_t need = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        ++adj_tests;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.is_subset_of(rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        ZVector v(n);
        const Integer& vp = val[p];
        const Integer nq = -val[q];
        for (int i = 0; i < n; ++i) v[i] = vp * rays[q].v[i] + nq * rays[p].v[i];
        common.set(idx);
        next.push_back({primitive(std::span<const Integer>(v)), std::move(common)});
      }
    }
    rays = std::move(next);
    max_rays = std::max(max_rays, rays.size());
  }

  std::vector<Ray> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) {
    stats->max_intermediate_rays = max_rays;
    stats->adjacency_tests = adj_tests;
  }
  return out;
}

std::vector<std::size_t> tight_inequalities(const HRep& h, std::span<const Integer> x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i)
    if (dot(std::span<const Integer>(h.inequalities[i]), x) == 0) out.push_back(i);
  return out;
}

bool is_extremal(const HRep& h, std::span<const Integer> r) {
  if (static_cast<int>(r.size()) != h.dim) throw PreconditionError("is_extremal: dimension mismatch");
  if (is_zero(r)) throw PreconditionError("is_extremal: zero vector");
  if (!h.contains(r)) throw PreconditionError("is_extremal: vector violates the cone");
  std::vector<ZVector> tight = h.equalities;
  for (std::size_t i : tight_inequalities(h, r)) tight.push_back(h.inequalities[i]);
  return static_cast<int>(rank(tight)) == h.dim - 1;
}

HRep restrict_to_face(const HRep& h, std::span<const std::size_t> tight) {
  HRep out(h.dim);
  out.equalities = h.equalities;
  std::set<std::size_t> chosen(tight.begin(), tight.end());
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    if (chosen.count(i))
      out.add_equality(std::span<const Integer>(h.inequalities[i]));
    else
      out.inequalities.push_back(h.inequalities[i]);
  }
  return out;
}

std::size_t cone_dimension(const std::vector<Ray>& rays) { return rank(rays); }

// ---------------------------------------------------------------- text I/O

namespace {

std::vector<std::vector<Integer>> parse_rows(std::string_view text, int* dim) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::string tok;
    std::vector<Integer> row;
    bool directive = false;
    while (ls >> tok) {
      if (tok == "dim" && row.empty()) {
        int d = -1;
        if (!(ls >> d) || d < 0) throw ParseError("line " + std::to_string(lineno) + ": bad dim directive");
        if (dim) *dim = d;
        directive = true;
        break;
      }
      try {
        std::size_t used = 0;
        const bool neg = tok[0] == '-' || tok[0] == '+';
        if (tok.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos || tok.size() == (neg ? 1u : 0u))
          throw ParseError("");
        (void)used;
        row.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
      } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": not an integer '" + tok + "'");
      }
    }
    if (!directive && !row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string write_hrep(const HRep& h) {
  std::ostringstream os;
  os << "dim " << h.dim << "\n";
  for (const auto& a : h.equalities) {
    os << 1;
    for (const auto& c : a) os << ' ' << c;
    os << '\n';
  }
  for (const auto& a : h.inequalities) {
    os << 0;
    for (const auto& c : a) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

HRep read_hrep(std::string_view text) {
  int dim = -1;
  auto rows = parse_rows(text, &dim);
  if (dim < 0) {
    if (rows.empty()) throw ParseError("H-representation without dim directive or rows");
    dim = static_cast<int>(rows.front().size()) - 1;
  }
  HRep h(dim);
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dim + 1)
      throw ParseError("H-row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(dim + 1));
    const Integer kind = r.front();
    std::span<const Integer> a(r.data() + 1, r.size() - 1);
    if (kind == 0)
      h.inequalities.emplace_back(a.begin(), a.end());
    else if (kind == 1)
      h.equalities.emplace_back(a.begin(), a.end());
    else
      throw ParseError("H-row kind must be 0 or 1");
  }
  return h;
}

std::string write_rays(int dim, const std::vector<Ray>& rays) {
  std::ostringstream os;
  os << "dim " << dim << "\n";
  for (const auto& r : rays) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << '\n';
  }
  return os.str();
}

std::vector<Ray> read_rays(std::string_view text, int* dim) {
  int d = -1;
  auto rows = parse_rows(text, &d);
  for (const auto& r : rows)
    if (d >= 0 && static_cast<int>(r.size()) != d) throw ParseError("ray has wrong length");
  if (dim) *dim = d >= 0 ? d : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  return rows;
}

}  // namespace eigencone
