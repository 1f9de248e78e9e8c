#include "eigencone/context.hpp"

#include "eigencone/faces.hpp"

#include <cstdlib>

namespace eigencone {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("EIGENCONE_CACHE_DIR"); env && *env) return env;
  return {};
}

Context::Context(std::string_view label, ContextOptions opts)
    : Context(RootSystem::build(label), std::move(opts)) {}

Context::Context(RootSystem rs, ContextOptions opts)
    : opts_(std::move(opts)),
      roots_(std::make_unique<RootSystem>(std::move(rs))),
      weyl_(std::make_unique<WeylGroup>(*roots_)) {}

Context::~Context() = default;

const ProductTable& Context::products() const {
  std::lock_guard lock(products_mutex_);
  if (!products_) {
    if (opts_.cache_dir.empty())
      products_ = std::make_unique<ProductTable>(*weyl_);
    else
      products_ = std::make_unique<ProductTable>(ProductTable::cached(*weyl_, opts_.cache_dir));
  }
  return *products_;
}

Parabolic Context::parabolic(std::vector<int> omitted_one_based) const {
  for (int& k : omitted_one_based) {
    if (k < 1 || k > roots_->rank())
      throw PreconditionError("parabolic: node " + std::to_string(k) + " out of range 1.." +
                              std::to_string(roots_->rank()));
    --k;
  }
  return Parabolic::omitting(*roots_, std::move(omitted_one_based));
}

const std::vector<FaceSpec>& Context::regular_facets(int s) const {
  std::lock_guard lock(facets_mutex_);
  auto& slot = facets_[s];
  if (!slot) slot = std::make_unique<std::vector<FaceSpec>>(enumerate_regular_facets(*this, s));
  return *slot;
}

}  // namespace eigencone
