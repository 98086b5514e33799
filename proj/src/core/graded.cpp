#include "ydual/graded.hpp"

#include <numeric>

namespace ydual {

GradedSpace::GradedSpace(std::string name, std::vector<std::size_t> dims,
                         std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)) {
  if (dims_.empty()) throw GradedError("graded space " + name + " has no components");
  if (!labels.empty() && labels.size() != dims_.size())
    throw GradedError("graded space " + name + ": label lists do not match components");
  std::vector<std::string> flat_labels;
  std::vector<int> degrees;
  std::size_t off = 0;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    offsets_.push_back(off);
    off += dims_[d];
    if (!labels.empty() && labels[d].size() != dims_[d])
      throw GradedError("graded space " + name + ": component " + std::to_string(d) +
                        " has the wrong number of labels");
    for (std::size_t i = 0; i < dims_[d]; ++i) {
      degrees.push_back(static_cast<int>(d));
      flat_labels.push_back(labels.empty()
                                ? name + "_" + std::to_string(d) + "[" + std::to_string(i) + "]"
                                : labels[d][i]);
    }
  }
  flat_ = make_space(std::move(name), off, std::move(flat_labels), std::move(degrees));
}

GradedSpace GradedSpace::adopt(const SpaceRef& flat) {
  GradedSpace g;
  int last = 0;
  for (std::size_t i = 0; i < flat->dim; ++i) {
    const int d = flat->degree(i);
    if (d < last) throw GradedError("basis of " + flat->name + " is not sorted by degree");
    while (static_cast<int>(g.dims_.size()) <= d) {
      g.offsets_.push_back(i);
      g.dims_.push_back(0);
    }
    ++g.dims_[static_cast<std::size_t>(d)];
    last = d;
  }
  if (g.dims_.empty()) throw GradedError("graded space " + flat->name + " is empty");
  g.flat_ = flat;
  return g;
}

std::size_t GradedSpace::component_dim(int d) const {
  if (d < 0 || d > truncation())
    throw GradedError("degree " + std::to_string(d) + " outside 0.." +
                      std::to_string(truncation()) + " of " + flat_->name);
  return dims_[static_cast<std::size_t>(d)];
}

std::size_t GradedSpace::offset(int d) const {
  component_dim(d);
  return offsets_[static_cast<std::size_t>(d)];
}

std::vector<MultiDegree> multidegrees(const std::vector<GradedSpace>& spaces) {
  std::vector<MultiDegree> out{{}};
  for (const auto& s : spaces) {
    std::vector<MultiDegree> next;
    for (const auto& prefix : out)
      for (int d = 0; d <= s.truncation(); ++d) {
        MultiDegree m = prefix;
        m.push_back(d);
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

std::size_t block_size(const std::vector<GradedSpace>& spaces, const MultiDegree& d) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < spaces.size(); ++k) n *= spaces[k].component_dim(d[k]);
  return n;
}

// Flat index of the tensor basis vector whose leg k is the local index
// local[k] inside component d[k].
std::size_t flat_index(const std::vector<GradedSpace>& spaces, const MultiDegree& d,
                       std::size_t local) {
  std::vector<std::size_t> legs(spaces.size());
  for (std::size_t k = spaces.size(); k-- > 0;) {
    const std::size_t n = spaces[k].component_dim(d[k]);
    legs[k] = spaces[k].offset(d[k]) + local % n;
    local /= n;
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) idx = idx * spaces[k].flat()->dim + legs[k];
  return idx;
}

Signature flats(const std::vector<GradedSpace>& spaces) {
  Signature s;
  for (const auto& g : spaces) s.push_back(g.flat());
  return s;
}

}  // namespace

GradedMap::GradedMap(std::vector<GradedSpace> dom, std::vector<GradedSpace> cod, Field f,
                     Resolver r)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      field_(f),
      resolver_(std::move(r)),
      cache_(std::make_shared<Cache>()) {}

GradedMap GradedMap::from_flat(std::vector<GradedSpace> dom, std::vector<GradedSpace> cod,
                               const LinMap& m) {
  if (sig_dim(flats(dom)) != m.matrix().cols() || sig_dim(flats(cod)) != m.matrix().rows())
    throw SignatureError("graded map shape does not match its spaces");
  auto d = dom;
  auto c = cod;
  return GradedMap(std::move(dom), std::move(cod), m.field(),
                   [d, c, m](const MultiDegree& out, const MultiDegree& in) {
                     const std::size_t r = block_size(c, out);
                     const std::size_t n = block_size(d, in);
                     Matrix b(r, n, m.field());
                     for (std::size_t i = 0; i < r; ++i)
                       for (std::size_t j = 0; j < n; ++j)
                         b(i, j) = m.matrix()(flat_index(c, out, i), flat_index(d, in, j));
                     return b;
                   });
}

void GradedMap::check_degree(const std::vector<GradedSpace>& spaces, const MultiDegree& d,
                             const char* what) const {
  if (d.size() != spaces.size())
    throw GradedError(std::string(what) + " multidegree has " + std::to_string(d.size()) +
                      " entries, expected " + std::to_string(spaces.size()));
  for (std::size_t k = 0; k < d.size(); ++k) spaces[k].component_dim(d[k]);
}

Matrix GradedMap::resolve_block(const MultiDegree& out, const MultiDegree& in) const {
  check_degree(cod_, out, "output");
  check_degree(dom_, in, "input");
  const auto key = std::make_pair(out, in);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->blocks.find(key);
    if (it != cache_->blocks.end()) return it->second;
  }
  // Resolved outside the lock: a racing thread computes the same block, and
  // the first insertion wins, so results never depend on the schedule.
  Matrix b = resolver_(out, in);
  if (b.rows() != block_size(cod_, out) || b.cols() != block_size(dom_, in))
    throw GradedError("resolver returned a block of the wrong shape");
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->blocks.emplace(key, std::move(b)).first->second;
}

Matrix GradedMap::resolve_block(const MultiDegree& out) const {
  check_degree(cod_, out, "output");
  const std::size_t rows = block_size(cod_, out);
  Matrix full(rows, sig_dim(flats(dom_)), field_);
  for (const auto& in : multidegrees(dom_)) {
    const Matrix b = resolve_block(out, in);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const std::size_t col = flat_index(dom_, in, j);
      for (std::size_t i = 0; i < rows; ++i) full(i, col) = b(i, j);
    }
  }
  return full;
}

LinMap GradedMap::materialize() const {
  const Signature d = domain();
  const Signature c = codomain();
  Matrix m(sig_dim(c), sig_dim(d), field_);
  for (const auto& out : multidegrees(cod_))
    for (const auto& in : multidegrees(dom_)) {
      const Matrix b = resolve_block(out, in);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (!b(i, j).is_zero()) m(flat_index(cod_, out, i), flat_index(dom_, in, j)) = b(i, j);
    }
  return LinMap(d, c, std::move(m));
}

Signature GradedMap::domain() const { return flats(dom_); }
Signature GradedMap::codomain() const { return flats(cod_); }

std::size_t GradedMap::cached_blocks() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->blocks.size();
}

}  // namespace ydual
