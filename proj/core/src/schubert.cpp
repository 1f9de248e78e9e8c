#include "eigencone/schubert.hpp"

#include "eigencone/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace eigencone {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("Schubert table: int64 overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("Schubert table: int64 overflow");
  return out;
}

struct UpCover {
  WeylId target;
  int beta;
};

}  // namespace

// ---------------------------------------------------------------- ProductTable

ProductTable::ProductTable(const WeylGroup& w) : weyl_(&w), n_(w.size()) {
  const RootSystem& rs = w.roots();
  const int r = rs.rank();
  const int np = rs.num_positive_roots();
  const int top = w.length(w.longest());

  // Right up-covers x -> x s_b and Chevalley weights <omega_i, b^vee>.
  std::vector<std::vector<UpCover>> up(n_);
  for (WeylId x = 0; x < n_; ++x)
    for (int b = 0; b < np; ++b) {
      const WeylId y = w.multiply(x, w.reflection(b));
      if (w.length(y) == w.length(x) + 1) up[x].push_back({y, b});
    }
  std::vector<std::vector<std::int64_t>> chev_weight(r, std::vector<std::int64_t>(np));
  for (int i = 0; i < r; ++i)
    for (int b = 0; b < np; ++b)
      chev_weight[i][b] =
          static_cast<std::int64_t>(numerator(rs.pair(rs.fundamental_weight(i), rs.root(b))));

  std::vector<std::int64_t> dense(n_, 0);
  std::vector<WeylId> touched;
  auto add_chevalley = [&](int i, const Sparse& v, std::int64_t scale) {
    for (const auto& [x, c] : v)
      for (const auto& uc : up[x]) {
        const std::int64_t k = chev_weight[i][uc.beta];
        if (k == 0) continue;
        if (dense[uc.target] == 0) touched.push_back(uc.target);
        dense[uc.target] = checked_add(dense[uc.target], checked_mul(checked_mul(c, k), scale));
      }
  };
  auto flush = [&](std::int64_t divisor) {
    std::sort(touched.begin(), touched.end());
    Sparse out;
    for (WeylId x : touched) {
      const std::int64_t c = dense[x];
      dense[x] = 0;
      if (c == 0) continue;
      if (c % divisor != 0) throw InconsistencyError("Schubert table: non-integral structure constant");
      out.emplace_back(x, c / divisor);
    }
    touched.clear();
    return out;
  };

  std::vector<std::vector<WeylId>> by_length(top + 1);
  for (WeylId x = 0; x < n_; ++x) by_length[w.length(x)].push_back(x);

  // For each x of length d: D_d sigma_x = sum_b coef_b sigma_{s_i_b} sigma_{x'_b}.
  struct ExprTerm {
    int i;
    WeylId prev;
    std::int64_t coef;
  };
  std::vector<std::vector<ExprTerm>> expr(n_);
  std::vector<std::int64_t> denom(top + 1, 1);
  for (int d = 1; d <= top; ++d) {
    const auto& cols = by_length[d];
    const std::size_t m = cols.size();
    std::vector<int> col_of(n_, -1);
    for (std::size_t c = 0; c < m; ++c) col_of[cols[c]] = static_cast<int>(c);

    std::vector<std::pair<int, WeylId>> chosen;
    QMatrix basis_rows;   // rows kept for inversion
    QMatrix echelon;      // reduced copies for the independence test
    std::vector<std::size_t> echelon_pivot;
    for (WeylId prev : by_length[d - 1]) {
      for (int i = 0; i < r && chosen.size() < m; ++i) {
        QVector row(m, Rational(0));
        for (const auto& uc : up[prev]) row[col_of[uc.target]] += chev_weight[i][uc.beta];
        QVector red = row;
        for (std::size_t e = 0; e < echelon.size(); ++e) {
          const std::size_t p = echelon_pivot[e];
          if (red[p] == 0) continue;
          const Rational f = red[p] / echelon[e][p];
          for (std::size_t j = 0; j < m; ++j) red[j] -= f * echelon[e][j];
        }
        const auto nz = std::find_if(red.begin(), red.end(), [](const Rational& q) { return q != 0; });
        if (nz == red.end()) continue;
        echelon_pivot.push_back(static_cast<std::size_t>(nz - red.begin()));
        echelon.push_back(std::move(red));
        basis_rows.push_back(std::move(row));
        chosen.emplace_back(i, prev);
      }
      if (chosen.size() == m) break;
    }
    if (chosen.size() != m) throw InconsistencyError("H*(G/B) not generated in degree 2");
    // basis_rows is R (rows = chosen products, columns = sigma_x). Then
    // e_x = sum_b R^{-1}[x][b] row_b.
    const QMatrix rinv = inverse(basis_rows);
    Integer l = 1;
    for (const auto& row : rinv)
      for (const auto& q : row) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    denom[d] = static_cast<std::int64_t>(l);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t b = 0; b < m; ++b) {
        if (rinv[c][b] == 0) continue;
        const Rational scaled = rinv[c][b] * Rational(l);
        expr[cols[c]].push_back({chosen[b].first, chosen[b].second,
                                 static_cast<std::int64_t>(numerator(scaled))});
      }
  }

  // Products sigma_a * sigma_b for l(a) <= l(b), by recursion on l(a).
  table_.assign(n_ * n_, {});
  std::vector<WeylId> order(n_);
  std::iota(order.begin(), order.end(), 0);  // ids are sorted by length already
  for (WeylId a : order) {
    const int la = w.length(a);
    for (WeylId b = 0; b < n_; ++b) {
      const int lb = w.length(b);
      if (la > lb || la + lb > top) continue;
      if (a == w.identity()) {
        table_[a * n_ + b] = {{b, 1}};
        continue;
      }
      for (const auto& t : expr[a]) add_chevalley(t.i, table_[t.prev * n_ + b], t.coef);
      table_[a * n_ + b] = flush(denom[la]);
    }
  }
}

bool ProductTable::stored(WeylId a, WeylId b) const {
  return weyl_->length(a) <= weyl_->length(b);
}

const ProductTable::Sparse& ProductTable::sigma_product(WeylId a, WeylId b) const {
  return stored(a, b) ? table_[a * n_ + b] : table_[b * n_ + a];
}

std::size_t ProductTable::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& v : table_) c += v.size();
  return c;
}

std::filesystem::path ProductTable::cache_file(const std::filesystem::path& dir, const std::string& label) {
  return dir / ("schubert-" + label + ".tbl");
}

void ProductTable::save(const std::filesystem::path& file) const {
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write Schubert cache " + tmp);
    out << "eigencone-schubert-table\n";
    out << "version " << kFormatVersion << "\n";
    out << "convention sigma-dual\n";
    out << "label " << weyl_->roots().label() << "\n";
    out << "order " << n_ << "\n";
    out << "entries " << nonzero_count() << "\n";
    for (WeylId a = 0; a < n_; ++a)
      for (WeylId b = 0; b < n_; ++b)
        if (stored(a, b))
          for (const auto& [x, c] : table_[a * n_ + b]) out << a << ' ' << b << ' ' << x << ' ' << c << '\n';
  }
  std::filesystem::rename(tmp, file);
}

bool ProductTable::try_load(const WeylGroup& w, const std::filesystem::path& file, ProductTable& out) {
  std::ifstream in(file);
  if (!in) return false;
  std::string tag, key, value;
  if (!(in >> tag) || tag != "eigencone-schubert-table") return false;
  int version = 0;
  if (!(in >> key >> version) || key != "version" || version != kFormatVersion) return false;
  if (!(in >> key >> value) || key != "convention" || value != "sigma-dual") return false;
  if (!(in >> key >> value) || key != "label" || value != w.roots().label()) return false;
  std::size_t order = 0, entries = 0;
  if (!(in >> key >> order) || key != "order" || order != w.size()) return false;
  if (!(in >> key >> entries) || key != "entries") return false;
  out.n_ = order;
  out.table_.assign(order * order, {});
  std::size_t count = 0;
  WeylId a, b, x;
  std::int64_t c;
  while (in >> a >> b >> x >> c) {
    if (a >= order || b >= order || x >= order) return false;
    out.table_[a * order + b].emplace_back(x, c);
    ++count;
  }
  if (count != entries) return false;
  for (WeylId e = 0; e < order; ++e)
    if (out.table_[e].empty()) return false;  // identity row must be present
  return true;
}

ProductTable ProductTable::cached(const WeylGroup& w, const std::filesystem::path& dir) {
  const auto file = cache_file(dir, w.roots().label());
  ProductTable loaded(w, Loaded{});
  if (try_load(w, file, loaded)) return loaded;
  ProductTable built(w);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    try {
      built.save(file);
    } catch (const ResourceError&) {
      // An unwritable cache directory only costs a rebuild next time.
    }
  }
  return built;
}

// ---------------------------------------------------------------- Schubert

int Schubert::dim(const Parabolic& p) const {
  const WeylGroup& w = weyl();
  return w.length(w.longest()) - w.length(w.longest_of(p));
}

int Schubert::codim(WeylId elem, const Parabolic& p) const { return dim(p) - weyl().length(elem); }

WeylId Schubert::lift(WeylId elem, const Parabolic& p) const {
  const WeylGroup& w = weyl();
  return w.multiply(w.multiply(w.longest(), elem), w.longest_of(p));
}

void Schubert::require_minimal(WeylId elem, const Parabolic& p, const char* op) const {
  if (!weyl().in_minimal_reps(elem, p))
    throw PreconditionError(std::string(op) + ": " + weyl().word_string(elem) +
                            " is not a minimal coset representative");
}

SchubertClass Schubert::basis_class(WeylId elem, const Parabolic& p) const {
  require_minimal(elem, p, "basis_class");
  return {p, {{elem, Integer(1)}}, codim(elem, p)};
}

SchubertClass Schubert::cup(WeylId u, WeylId v, const Parabolic& p) const {
  return cup(basis_class(u, p), basis_class(v, p));
}

SchubertClass Schubert::cup(const SchubertClass& a, const SchubertClass& b) const {
  if (!(a.parabolic == b.parabolic)) throw PreconditionError("cup: classes live on different G/P");
  const Parabolic& p = a.parabolic;
  const WeylGroup& w = weyl();
  const WeylId w0 = w.longest();
  const WeylId w0p = w.longest_of(p);
  SchubertClass out{p, {}, a.codim + b.codim};
  for (const auto& [u, cu] : a.coeffs)
    for (const auto& [v, cv] : b.coeffs)
      for (const auto& [z, c] : table_->sigma_product(lift(u, p), lift(v, p))) {
        const WeylId y = w.multiply(w.multiply(w0, z), w0p);
        if (!w.in_minimal_reps(y, p)) throw InconsistencyError("cup: product left H*(G/P)");
        out.coeffs[y] += cu * cv * c;
      }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer Schubert::multi_coeff(std::span<const WeylId> words, const Parabolic& p) const {
  int total = 0;
  for (WeylId x : words) {
    require_minimal(x, p, "multi_coeff");
    total += codim(x, p);
  }
  if (total != dim(p))
    throw PreconditionError("multi_coeff: codimensions sum to " + std::to_string(total) +
                            ", expected dim G/P = " + std::to_string(dim(p)));
  const WeylGroup& w = weyl();
  const WeylId target = w.multiply(w.longest(), w.longest_of(p));
  if (words.empty()) return target == w.identity() ? 1 : 0;
  std::map<WeylId, Integer> acc{{lift(words[0], p), Integer(1)}};
  for (std::size_t k = 1; k < words.size(); ++k) {
    const WeylId y = lift(words[k], p);
    std::map<WeylId, Integer> next;
    for (const auto& [z, c] : acc)
      for (const auto& [x, d] : table_->sigma_product(z, y)) next[x] += c * d;
    acc = std::move(next);
  }
  auto it = acc.find(target);
  return it == acc.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------- chi, odot_0

Weight chi(const WeylGroup& w, WeylId elem, const Parabolic& p) {
  const RootSystem& rs = w.roots();
  const Weight rho = rs.rho();
  return rho - Rational(2) * p.rho_L() + w.act(w.inverse(elem), rho);
}

std::vector<Rational> degree_gaps(const WeylGroup& w, std::span<const WeylId> words, const Parabolic& p) {
  const RootSystem& rs = w.roots();
  // exponent of the deformation parameter; nonnegative when the product is nonzero
  Weight total = chi(w, w.identity(), p);
  for (WeylId x : words) total -= chi(w, x, p);
  std::vector<Rational> out;
  for (int k : p.omitted_nodes()) out.push_back(rs.eval_x(total, k));
  return out;
}

LeviMovability levi_movable(const Schubert& sch, std::span<const WeylId> words, const Parabolic& p) {
  LeviMovability out;
  out.coefficient = sch.multi_coeff(words, p);
  out.gaps = degree_gaps(sch.weyl(), words, p);
  out.movable = out.coefficient != 0 &&
                std::all_of(out.gaps.begin(), out.gaps.end(), [](const Rational& g) { return g == 0; });
  return out;
}

}  // namespace eigencone
