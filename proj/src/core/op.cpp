#include "ydual/op.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

namespace ydual {

void accumulate(SparseVec& v, std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = v.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) v.erase(it);
  }
}

SparseVec basis_vector(std::size_t index, Field f) { return SparseVec{{index, Scalar::one(f)}}; }

SparseVec add(const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  for (const auto& [i, v] : b) accumulate(r, i, v);
  return r;
}

SparseVec scale(const SparseVec& a, const Scalar& s) {
  SparseVec r;
  if (s.is_zero()) return r;
  for (const auto& [i, v] : a) r.emplace(i, v * s);
  return r;
}

SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t dim_b) {
  SparseVec r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r.emplace(i * dim_b + j, x * y);
  return r;
}

std::string format_vector(const SparseVec& v, const Signature& sig) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ")·";
    os << index_label(sig, i);
  }
  return os.str();
}

// ---------------------------------------------------------------- nodes

struct Op::Node {
  virtual ~Node() = default;
  // Entries (l * dd + j) * right + r  ->  (l * dc + i) * right + r.
  virtual void slice(const SparseVec& in, std::size_t right, SparseVec& out) const = 0;
};

namespace {

struct LeafNode final : Op::Node {
  std::size_t dd = 0;
  std::size_t dc = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;

  explicit LeafNode(const Matrix& m) : dd(m.cols()), dc(m.rows()), columns(m.cols()) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) columns[j].emplace_back(i, m(i, j));
  }

  void slice(const SparseVec& in, std::size_t right, SparseVec& out) const override {
    for (const auto& [idx, c] : in) {
      const std::size_t r = idx % right;
      const std::size_t t = idx / right;
      const std::size_t j = t % dd;
      const std::size_t l = t / dd;
      for (const auto& [i, a] : columns[j]) accumulate(out, (l * dc + i) * right + r, c * a);
    }
  }
};

struct IdentityNode final : Op::Node {
  void slice(const SparseVec& in, std::size_t, SparseVec& out) const override {
    for (const auto& [idx, c] : in) accumulate(out, idx, c);
  }
};

struct PermNode final : Op::Node {
  std::vector<std::size_t> dom_dims;
  std::vector<std::size_t> perm;
  std::size_t total = 1;

  void slice(const SparseVec& in, std::size_t right, SparseVec& out) const override {
    const std::size_t n = dom_dims.size();
    std::vector<std::size_t> legs(n);
    for (const auto& [idx, c] : in) {
      const std::size_t r = idx % right;
      const std::size_t t = idx / right;
      std::size_t j = t % total;
      const std::size_t l = t / total;
      for (std::size_t k = n; k-- > 0;) {
        legs[k] = j % dom_dims[k];
        j /= dom_dims[k];
      }
      std::size_t i = 0;
      for (std::size_t k = 0; k < n; ++k) i = i * dom_dims[perm[k]] + legs[perm[k]];
      accumulate(out, (l * total + i) * right + r, c);
    }
  }
};

struct ComposeNode final : Op::Node {
  std::vector<Op> ops;  // applied back to front

  void slice(const SparseVec& in, std::size_t right, SparseVec& out) const override {
    SparseVec cur = in;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      SparseVec next;
      it->apply_slice(cur, right, next);
      cur = std::move(next);
    }
    for (const auto& [i, c] : cur) accumulate(out, i, c);
  }
};

struct TensorNode final : Op::Node {
  std::vector<Op> ops;

  void slice(const SparseVec& in, std::size_t right, SparseVec& out) const override {
    SparseVec cur = in;
    std::size_t r = right;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      SparseVec next;
      it->apply_slice(cur, r, next);
      cur = std::move(next);
      r *= sig_dim(it->codomain());
    }
    for (const auto& [i, c] : cur) accumulate(out, i, c);
  }
};

struct SumNode final : Op::Node {
  Op a;
  Op b;
  void slice(const SparseVec& in, std::size_t right, SparseVec& out) const override {
    a.apply_slice(in, right, out);
    b.apply_slice(in, right, out);
  }
};

}  // namespace

// ---------------------------------------------------------------- Op

Op::Op(const LinMap& m)
    : dom_(m.domain()),
      cod_(m.codomain()),
      field_(m.field()),
      node_(std::make_shared<LeafNode>(m.matrix())) {}

Op Op::identity(const Signature& s, Field f) {
  Op op;
  op.dom_ = flatten(s);
  op.cod_ = op.dom_;
  op.field_ = f;
  op.node_ = std::make_shared<IdentityNode>();
  return op;
}

Op Op::permutation(const Signature& dom, const std::vector<std::size_t>& perm, Field f) {
  const Signature flat = flatten(dom);
  if (perm.size() != flat.size()) throw SignatureError("permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw SignatureError("not a permutation");
    seen[p] = true;
  }
  auto node = std::make_shared<PermNode>();
  for (const auto& s : flat) {
    node->dom_dims.push_back(s->dim);
    node->total *= s->dim;
  }
  node->perm = perm;
  Op op;
  op.dom_ = flat;
  for (auto p : perm) op.cod_.push_back(flat[p]);
  op.field_ = f;
  op.node_ = std::move(node);
  return op;
}

Op Op::compose(const std::vector<Op>& ops) {
  if (ops.empty()) throw SignatureError("empty composition");
  for (std::size_t k = 0; k + 1 < ops.size(); ++k)
    if (!same_signature(ops[k].domain(), ops[k + 1].codomain()))
      throw SignatureError("cannot compose " + sig_to_string(ops[k].domain()) + " -> " +
                           sig_to_string(ops[k].codomain()) + " after " +
                           sig_to_string(ops[k + 1].domain()) + " -> " +
                           sig_to_string(ops[k + 1].codomain()));
  if (ops.size() == 1) return ops[0];
  auto node = std::make_shared<ComposeNode>();
  node->ops = ops;
  Op op;
  op.dom_ = ops.back().domain();
  op.cod_ = ops.front().codomain();
  op.field_ = ops.front().field();
  op.node_ = std::move(node);
  return op;
}

Op Op::tensor(const std::vector<Op>& ops) {
  if (ops.empty()) throw SignatureError("empty tensor product");
  if (ops.size() == 1) return ops[0];
  auto node = std::make_shared<TensorNode>();
  node->ops = ops;
  Op op;
  for (const auto& o : ops) {
    op.dom_ = concat(op.dom_, o.domain());
    op.cod_ = concat(op.cod_, o.codomain());
  }
  op.field_ = ops.front().field();
  op.node_ = std::move(node);
  return op;
}

void Op::apply_slice(const SparseVec& in, std::size_t right, SparseVec& out) const {
  node_->slice(in, right, out);
}

SparseVec Op::apply(const SparseVec& v) const {
  SparseVec out;
  node_->slice(v, 1, out);
  return out;
}

SparseVec Op::apply_basis(std::size_t j) const { return apply(basis_vector(j, field_)); }

LinMap Op::materialize() const {
  const std::size_t n = sig_dim(dom_);
  Matrix m(sig_dim(cod_), n, field_);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : apply_basis(j)) m(i, j) = c;
  return LinMap(dom_, cod_, std::move(m));
}

Op Op::retyped(const Signature& dom, const Signature& cod) const {
  const Signature fd = flatten(dom);
  const Signature fc = flatten(cod);
  auto dims = [](const Signature& s) {
    std::vector<std::size_t> d;
    for (const auto& x : s) d.push_back(x->dim);
    return d;
  };
  if (dims(fd) != dims(dom_) || dims(fc) != dims(cod_))
    throw SignatureError("retype changes leg dimensions: " + sig_to_string(dom_) + " -> " +
                         sig_to_string(cod_) + " as " + sig_to_string(fd) + " -> " +
                         sig_to_string(fc));
  Op op = *this;
  op.dom_ = fd;
  op.cod_ = fc;
  return op;
}

Op on_legs(const Signature& sig, std::size_t first, const Op& f) {
  const Signature flat = flatten(sig);
  const std::size_t n = f.domain().size();
  if (first + n > flat.size())
    throw SignatureError("on_legs: " + sig_to_string(f.domain()) + " does not fit at leg " +
                         std::to_string(first) + " of " + sig_to_string(flat));
  const Signature mid(flat.begin() + static_cast<std::ptrdiff_t>(first),
                      flat.begin() + static_cast<std::ptrdiff_t>(first + n));
  if (!same_signature(mid, f.domain()))
    throw SignatureError("on_legs: expected " + sig_to_string(f.domain()) + " at leg " +
                         std::to_string(first) + " of " + sig_to_string(flat) + ", found " +
                         sig_to_string(mid));
  std::vector<Op> parts;
  const Signature left(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(first));
  const Signature right(flat.begin() + static_cast<std::ptrdiff_t>(first + n), flat.end());
  if (!left.empty()) parts.push_back(Op::identity(left, f.field()));
  parts.push_back(f);
  if (!right.empty()) parts.push_back(Op::identity(right, f.field()));
  return Op::tensor(parts);
}

Op sum(const Op& a, const Op& b) {
  if (!same_signature(a.domain(), b.domain()) || !same_signature(a.codomain(), b.codomain()))
    throw SignatureError("cannot add maps of different signatures");
  auto node = std::make_shared<SumNode>();
  node->a = a;
  node->b = b;
  Op op;
  op.dom_ = a.dom_;
  op.cod_ = a.cod_;
  op.field_ = a.field_;
  op.node_ = std::move(node);
  return op;
}

std::vector<std::size_t> basis_inputs(const Signature& sig, std::optional<int> max_degree) {
  const Signature flat = flatten(sig);
  std::vector<std::pair<int, std::size_t>> found;
  std::vector<std::size_t> legs(flat.size());
  std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t k, int deg,
                                                                std::size_t flat_idx) {
    if (k == flat.size()) {
      found.emplace_back(deg, flat_idx);
      return;
    }
    for (std::size_t i = 0; i < flat[k]->dim; ++i) {
      const int d = deg + flat[k]->degree(i);
      if (max_degree && d > *max_degree) continue;
      rec(k + 1, d, flat_idx * flat[k]->dim + i);
    }
  };
  rec(0, 0, 0);
  std::sort(found.begin(), found.end());
  std::vector<std::size_t> out;
  out.reserve(found.size());
  for (const auto& p : found) out.push_back(p.second);
  return out;
}

std::string Mismatch::describe() const {
  return "on " + input_label + " (degree " + std::to_string(input_degree) + "): " + lhs +
         " != " + rhs;
}

std::optional<Mismatch> first_mismatch(const Op& a, const Op& b, std::optional<int> max_degree) {
  if (!same_signature(a.domain(), b.domain()) || !same_signature(a.codomain(), b.codomain()))
    throw SignatureError("cannot compare " + sig_to_string(a.domain()) + " -> " +
                         sig_to_string(a.codomain()) + " with " + sig_to_string(b.domain()) +
                         " -> " + sig_to_string(b.codomain()));
  for (std::size_t j : basis_inputs(a.domain(), max_degree)) {
    const SparseVec va = a.apply_basis(j);
    const SparseVec vb = b.apply_basis(j);
    bool same = va.size() == vb.size();
    if (same) {
      auto ia = va.begin();
      auto ib = vb.begin();
      for (; ia != va.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) {
          same = false;
          break;
        }
    }
    if (!same)
      return Mismatch{j, index_label(a.domain(), j), index_degree(a.domain(), j),
                      format_vector(va, a.codomain()), format_vector(vb, b.codomain())};
  }
  return std::nullopt;
}

CachedOp::CachedOp(Op op) : op_(std::move(op)), state_(std::make_shared<State>()) {}

const Op& CachedOp::dense() const {
  std::call_once(state_->once, [this] { state_->dense = Op(op_.materialize()); });
  return state_->dense;
}

}  // namespace ydual
