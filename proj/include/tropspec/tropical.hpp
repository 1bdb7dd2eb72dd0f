#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tropspec/rational.hpp"

namespace tropspec {

/// Element of the min-plus semiring: an exact rational or the semiring zero
/// +inf. oplus is min, otimes is rational addition, the unit is 0.
class TropScalar {
 public:
  TropScalar() : inf_(true) {}  // default-constructed value is the zero +inf
  TropScalar(Rational v) : inf_(false), v_(v) {}  // NOLINT
  TropScalar(std::int64_t v) : inf_(false), v_(v) {}  // NOLINT

  static TropScalar zero() { return TropScalar(); }
  static TropScalar one() { return TropScalar(Rational(0)); }

  bool is_zero() const { return inf_; }  // the semiring zero, +inf
  bool is_finite() const { return !inf_; }

  const Rational& value() const {
    if (inf_) throw Error("value() on tropical zero");
    return v_;
  }

  double to_double() const;  // +inf maps to HUGE_VAL
  std::string to_string() const { return inf_ ? "inf" : v_.to_string(); }

  /// min
  friend TropScalar oplus(const TropScalar& a, const TropScalar& b) {
    if (a.inf_) return b;
    if (b.inf_) return a;
    return TropScalar(a.v_ < b.v_ ? a.v_ : b.v_);
  }

  /// rational addition; +inf is absorbing
  friend TropScalar otimes(const TropScalar& a, const TropScalar& b) {
    if (a.inf_ || b.inf_) return zero();
    return TropScalar(a.v_ + b.v_);
  }

  /// otimes-inverse, i.e. negation; only finite values are invertible
  TropScalar inverse() const {
    if (inf_) throw Error("tropical zero has no otimes-inverse");
    return TropScalar(-v_);
  }

  /// a otimes b^{-1} for finite b; +inf stays +inf
  friend TropScalar sub(const TropScalar& a, const TropScalar& b) {
    if (b.inf_) throw Error("sub by tropical zero");
    if (a.inf_) return zero();
    return TropScalar(a.v_ - b.v_);
  }

  // Total order of R union {+inf}, with +inf largest.
  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const TropScalar& a, const TropScalar& b) {
    return b < a;
  }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) {
    return !(b < a);
  }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) {
    return !(a < b);
  }

 private:
  bool inf_;
  Rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const TropScalar& s) {
  return os << s.to_string();
}

/// Element of the completed min-plus semiring R union {-inf, +inf}, with the
/// convention (+inf) + (-inf) = (-inf) + (+inf) = +inf.
class ExtTropScalar {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  ExtTropScalar() : kind_(Kind::PosInf) {}
  ExtTropScalar(Rational v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
  ExtTropScalar(TropScalar t)  // NOLINT
      : kind_(t.is_zero() ? Kind::PosInf : Kind::Finite) {
    if (t.is_finite()) v_ = t.value();
  }

  static ExtTropScalar pos_inf() { return ExtTropScalar(); }
  static ExtTropScalar neg_inf() {
    ExtTropScalar e;
    e.kind_ = Kind::NegInf;
    return e;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Rational& value() const {
    if (!is_finite()) throw Error("value() on infinite element");
    return v_;
  }

  friend ExtTropScalar oplus(const ExtTropScalar& a, const ExtTropScalar& b) {
    return a < b ? a : b;
  }

  friend ExtTropScalar otimes(const ExtTropScalar& a, const ExtTropScalar& b) {
    // +inf absorbs even -inf
    if (a.kind_ == Kind::PosInf || b.kind_ == Kind::PosInf) return pos_inf();
    if (a.kind_ == Kind::NegInf || b.kind_ == Kind::NegInf) return neg_inf();
    return ExtTropScalar(a.v_ + b.v_);
  }

  friend bool operator==(const ExtTropScalar& a, const ExtTropScalar& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtTropScalar& a, const ExtTropScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const ExtTropScalar& a, const ExtTropScalar& b) {
    auto rank = [](const ExtTropScalar& x) {
      return x.kind_ == Kind::NegInf ? -1 : (x.kind_ == Kind::PosInf ? 1 : 0);
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.kind_ == Kind::Finite && a.v_ < b.v_;
  }

 private:
  Kind kind_;
  Rational v_;
};

/// Dense square min-plus matrix.
class TropMatrix {
 public:
  TropMatrix() : n_(0) {}
  explicit TropMatrix(int n) : n_(n), entries_(n * n, TropScalar::zero()) {
    if (n < 0) throw DimensionError("negative dimension");
  }

  static TropMatrix identity(int n) {
    TropMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = TropScalar::one();
    return m;
  }

  int n() const { return n_; }

  TropScalar& at(int i, int j) { return entries_[i * n_ + j]; }
  const TropScalar& at(int i, int j) const { return entries_[i * n_ + j]; }

  /// Submatrix with rows and cols taken in the order given.
  TropMatrix submatrix(const std::vector<int>& rows,
                       const std::vector<int>& cols) const {
    if (rows.size() != cols.size())
      throw DimensionError("submatrix must be square");
    TropMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return m;
  }

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const TropMatrix& a, const TropMatrix& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<TropScalar> entries_;
};

using TropVector = std::vector<TropScalar>;

/// Directed graph on integer node labels. Nodes and arcs are kept sorted,
/// so equal graphs compare equal.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<int> nodes, std::vector<std::pair<int, int>> arcs)
      : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    normalize();
  }

  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  bool has_node(int v) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), v);
  }
  bool has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::pair{u, v});
  }

  void add_node(int v) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) nodes_.insert(it, v);
  }
  void add_arc(int u, int v) {
    add_node(u);
    add_node(v);
    auto a = std::pair{u, v};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end() || *it != a) arcs_.insert(it, a);
  }

  /// Arc endpoints must be nodes.
  void validate() const {
    for (const auto& [u, v] : arcs_)
      if (!has_node(u) || !has_node(v))
        throw Error("arc endpoint outside node set");
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_;
  }
  friend bool operator!=(const Digraph& a, const Digraph& b) {
    return !(a == b);
  }

  /// True if every node and arc of g is present here.
  bool contains(const Digraph& g) const {
    for (int v : g.nodes_)
      if (!has_node(v)) return false;
    for (const auto& [u, v] : g.arcs_)
      if (!has_arc(u, v)) return false;
    return true;
  }

 private:
  void normalize() {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    validate();
  }

  std::vector<int> nodes_;
  std::vector<std::pair<int, int>> arcs_;
};

}  // namespace tropspec
