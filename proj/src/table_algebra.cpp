#include "lrc/table_algebra.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "lrc/sampling.hpp"

namespace lrc {

TableVector TableVector::basis(std::size_t dim, std::size_t b) {
  TableVector v(dim);
  v.c.at(b) = 1;
  return v;
}

bool TableVector::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

TableVector& TableVector::operator+=(const TableVector& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("table vector: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

TableVector& TableVector::operator-=(const TableVector& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("table vector: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

TableVector operator*(TableVector a, const Rational& s) {
  for (auto& x : a.c) x *= s;
  return a;
}

std::string to_string(const TableVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (v.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v.c[i]) + "*e" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

TableAlgebra::TableAlgebra(std::vector<int> basis_degrees, Flavor flavor)
    : degrees_(std::move(basis_degrees)), flavor_(flavor) {}

int TableAlgebra::sort_sign(std::vector<std::size_t>& idx) const {
  int sign = 1;
  for (std::size_t pass = 0; pass < idx.size(); ++pass)
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] > idx[i + 1]) {
        const int swap = parity_sign(static_cast<long long>(degrees_[idx[i]]) * degrees_[idx[i + 1]]);
        sign *= flavor_ == Flavor::Symmetric ? swap : -swap;
        std::swap(idx[i], idx[i + 1]);
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) {
      const bool odd = degrees_[idx[i]] % 2 != 0;
      if (flavor_ == Flavor::Symmetric ? odd : !odd) return 0;
    }
  return sign;
}

void TableAlgebra::set(const std::vector<std::size_t>& idx, const TableVector& value) {
  if (idx.empty()) throw std::invalid_argument("table algebra: empty tuple");
  if (value.c.size() != dim()) throw std::invalid_argument("table algebra: value dimension");
  int target = bracket_degree(static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= dim()) throw std::invalid_argument("table algebra: basis index out of range");
    if (i > 0 && idx[i] < idx[i - 1]) throw std::invalid_argument("table algebra: tuple not sorted");
    target += degrees_[idx[i]];
  }
  for (std::size_t b = 0; b < dim(); ++b)
    if (value.c[b] != 0 && degrees_[b] != target) throw std::invalid_argument("table algebra: value of wrong degree");
  std::vector<std::size_t> copy = idx;
  if (sort_sign(copy) == 0 && !value.is_zero())
    throw std::invalid_argument("table algebra: repeated entry must vanish");
  if (value.is_zero()) {
    table_.erase(idx);
    return;
  }
  table_[idx] = value;
  max_arity_ = std::max(max_arity_, static_cast<int>(idx.size()));
}

TableVector TableAlgebra::basis_bracket(const std::vector<std::size_t>& idx) const {
  std::vector<std::size_t> sorted = idx;
  const int sg = sort_sign(sorted);
  if (sg == 0) return TableVector(dim());
  auto it = table_.find(sorted);
  if (it == table_.end()) return TableVector(dim());
  return it->second * Rational(sg);
}

TableVector TableAlgebra::bracket(const std::vector<TableVector>& v) const {
  TableVector acc(dim());
  if (static_cast<int>(v.size()) > max_arity_) return acc;
  std::vector<std::size_t> idx(v.size());
  std::function<void(std::size_t, Rational)> walk = [&](std::size_t pos, Rational coeff) {
    if (pos == v.size()) {
      acc += basis_bracket(idx) * coeff;
      return;
    }
    for (std::size_t b = 0; b < dim(); ++b)
      if (v[pos].c[b] != 0) {
        idx[pos] = b;
        walk(pos + 1, coeff * v[pos].c[b]);
      }
  };
  walk(0, Rational(1));
  return acc;
}

BracketOracle<TableVector> TableAlgebra::oracle() const {
  BracketOracle<TableVector> o;
  o.max_arity = max_arity_;
  const TableAlgebra self = *this;
  o.bracket = [self](const std::vector<TableVector>& v, const std::vector<int>&) { return self.bracket(v); };
  const std::size_t n = dim();
  o.zero = [n] { return TableVector(n); };
  return o;
}

TableAlgebra TableAlgebra::decalage() const {
  const bool to_symmetric = flavor_ == Flavor::Skew;
  std::vector<int> shifted = degrees_;
  for (auto& d : shifted) d += to_symmetric ? -1 : 1;
  TableAlgebra out(shifted, to_symmetric ? Flavor::Symmetric : Flavor::Skew);
  for (const auto& [idx, value] : table_) {
    std::vector<int> ldeg;  // degrees in L, before the shift
    for (auto b : idx) ldeg.push_back(to_symmetric ? degrees_[b] : shifted[b]);
    out.set(idx, value * Rational(decalage_sign(ldeg)));
  }
  return out;
}

TableAlgebra TableAlgebra::random(Rng& rng, std::vector<int> basis_degrees, Flavor flavor, int max_arity) {
  TableAlgebra out(std::move(basis_degrees), flavor);
  const std::size_t n = out.dim();
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int left) {
    if (!idx.empty()) {
      std::vector<std::size_t> copy = idx;
      if (out.sort_sign(copy) != 0) {
        int target = out.bracket_degree(static_cast<int>(idx.size()));
        for (auto b : idx) target += out.degrees_[b];
        TableVector value(n);
        for (std::size_t b = 0; b < n; ++b)
          if (out.degrees_[b] == target && rng.coin()) value.c[b] = rng.uniform_int(-2, 2);
        out.set(idx, value);
      }
    }
    if (left == 0) return;
    for (std::size_t b = from; b < n; ++b) {
      idx.push_back(b);
      walk(b, left - 1);
      idx.pop_back();
    }
  };
  walk(0, max_arity);
  return out;
}

bool operator==(const TableAlgebra& a, const TableAlgebra& b) {
  return a.degrees_ == b.degrees_ && a.flavor_ == b.flavor_ && a.table_ == b.table_;
}

int table_degree(const TableAlgebra& t, const TableVector& v) {
  std::optional<int> d;
  for (std::size_t b = 0; b < v.c.size(); ++b) {
    if (v.c[b] == 0) continue;
    if (d && *d != t.degree(b)) throw std::invalid_argument("table vector: inhomogeneous");
    d = t.degree(b);
  }
  return d.value_or(0);
}

TableAlgebra small_dg_lie() {
  TableAlgebra t({0, 0, 1}, TableAlgebra::Flavor::Skew);
  t.set({1}, TableVector::basis(3, 2));
  t.set({0, 1}, TableVector::basis(3, 1));
  t.set({0, 2}, TableVector::basis(3, 2));
  return t;
}

TableAlgebra with_flipped_entry(const TableAlgebra& t, const std::vector<std::size_t>& idx) {
  TableAlgebra out = t;
  auto it = t.entries().find(idx);
  if (it == t.entries().end()) throw std::invalid_argument("table algebra: no entry to flip");
  out.set(idx, it->second * Rational(-1));
  return out;
}

}  // namespace lrc
