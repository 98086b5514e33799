#pragma once

// Degree-truncated graded spaces and blockwise graded maps.
//
// A GradedSpace keeps components 0..N and flattens them, lowest degree
// first, into one BasedSpace whose basis vectors carry their degree. The
// rest of the library works on those flat spaces; identities are checked
// only on inputs of total degree <= N, where no structure map (all of them
// total-degree non-increasing) can reach a dropped component.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ydual/linalg.hpp"

namespace ydual {

class GradedError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  /// dims[d] is the dimension of component d; labels[d] (optional) names its basis.
  GradedSpace(std::string name, std::vector<std::size_t> dims,
              std::vector<std::vector<std::string>> labels = {});

  [[nodiscard]] int truncation() const { return static_cast<int>(dims_.size()) - 1; }
  [[nodiscard]] std::size_t component_dim(int d) const;
  [[nodiscard]] std::size_t offset(int d) const;
  [[nodiscard]] bool connected() const { return !dims_.empty() && dims_[0] == 1; }
  [[nodiscard]] const SpaceRef& flat() const { return flat_; }

  /// Reads the components off a flat space whose basis degrees are sorted.
  static GradedSpace adopt(const SpaceRef& flat);

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  SpaceRef flat_;
};

using MultiDegree = std::vector<int>;

/// A linear map between tensor products of graded spaces given block by block.
/// Blocks are computed on demand and memoised; the cache is shared between
/// copies and safe to use from several threads.
class GradedMap {
 public:
  using Resolver = std::function<Matrix(const MultiDegree& out, const MultiDegree& in)>;

  GradedMap(std::vector<GradedSpace> dom, std::vector<GradedSpace> cod, Field f, Resolver r);
  /// Blocks of an already materialised map on the flat spaces.
  static GradedMap from_flat(std::vector<GradedSpace> dom, std::vector<GradedSpace> cod,
                             const LinMap& m);

  /// Block from input component `in` into output component `out`.
  [[nodiscard]] Matrix resolve_block(const MultiDegree& out, const MultiDegree& in) const;
  /// Rows of output component `out` against every flat input basis vector.
  [[nodiscard]] Matrix resolve_block(const MultiDegree& out) const;
  [[nodiscard]] LinMap materialize() const;

  [[nodiscard]] Signature domain() const;
  [[nodiscard]] Signature codomain() const;
  [[nodiscard]] std::size_t cached_blocks() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<MultiDegree, MultiDegree>, Matrix> blocks;
  };

  void check_degree(const std::vector<GradedSpace>& spaces, const MultiDegree& d,
                    const char* what) const;

  std::vector<GradedSpace> dom_;
  std::vector<GradedSpace> cod_;
  Field field_;
  Resolver resolver_;
  std::shared_ptr<Cache> cache_;
};

/// All multidegrees of the given spaces in lexicographic order.
std::vector<MultiDegree> multidegrees(const std::vector<GradedSpace>& spaces);

}  // namespace ydual
