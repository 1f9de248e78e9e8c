#pragma once

// Owns the immutable per-group tables (root system, Weyl group, Schubert
// products, facet lists) and hands out references to them. A Context is
// neither copyable nor movable; share it by reference or shared_ptr.
// All lazily built members are guarded, so one Context may be queried from
// several threads.

#include "eigencone/rootdata.hpp"
#include "eigencone/schubert.hpp"
#include "eigencone/weyl.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

namespace eigencone {

struct FaceSpec;

struct ContextOptions {
  /// Directory for on-disk Schubert tables; empty disables caching.
  std::filesystem::path cache_dir;
};

/// Cache directory from $EIGENCONE_CACHE_DIR, or empty.
std::filesystem::path default_cache_dir();

class Context {
 public:
  explicit Context(std::string_view label, ContextOptions opts = {});
  explicit Context(RootSystem rs, ContextOptions opts = {});
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  ~Context();

  const RootSystem& roots() const { return *roots_; }
  const WeylGroup& weyl() const { return *weyl_; }
  const ProductTable& products() const;
  Schubert schubert() const { return Schubert(products()); }
  const ContextOptions& options() const { return opts_; }

  /// Parabolic from 1-based omitted nodes ("P_2" is {2}).
  Parabolic parabolic(std::vector<int> omitted_one_based) const;

  /// Memoized regular facets for s factors (see faces.hpp).
  const std::vector<FaceSpec>& regular_facets(int s) const;

 private:
  ContextOptions opts_;
  std::unique_ptr<RootSystem> roots_;
  std::unique_ptr<WeylGroup> weyl_;
  mutable std::mutex products_mutex_;
  mutable std::unique_ptr<ProductTable> products_;
  mutable std::mutex facets_mutex_;
  mutable std::map<int, std::unique_ptr<std::vector<FaceSpec>>> facets_;
};

}  // namespace eigencone
