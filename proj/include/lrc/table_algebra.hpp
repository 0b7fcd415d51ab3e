#pragma once

#include <map>
#include <vector>

#include "lrc/linfty.hpp"

namespace lrc {

class Rng;

/// Coordinates of an element of a finite dimensional graded space in its basis.
struct TableVector {
  std::vector<Rational> c;

  explicit TableVector(std::size_t dim = 0) : c(dim, Rational(0)) {}
  static TableVector basis(std::size_t dim, std::size_t b);
  bool is_zero() const;
  TableVector& operator+=(const TableVector& o);
  TableVector& operator-=(const TableVector& o);
  friend TableVector operator*(TableVector a, const Rational& s);
  friend TableVector operator+(TableVector a, const TableVector& b) { return a += b; }
  friend TableVector operator-(TableVector a, const TableVector& b) { return a -= b; }
  friend bool operator==(const TableVector&, const TableVector&) = default;
};

std::string to_string(const TableVector& v);

/// Multibrackets on a graded space given by explicit tables on basis tuples.
/// Symmetric flavor: graded symmetric of degree 1.  Skew flavor: graded skew-symmetric of degree 2 - k.
class TableAlgebra {
 public:
  enum class Flavor { Symmetric, Skew };

  TableAlgebra(std::vector<int> basis_degrees, Flavor flavor);

  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t b) const { return degrees_[b]; }
  const std::vector<int>& degrees() const { return degrees_; }
  Flavor flavor() const { return flavor_; }
  int max_arity() const { return max_arity_; }
  int bracket_degree(int k) const { return flavor_ == Flavor::Symmetric ? 1 : 2 - k; }

  /// Value on a nondecreasing basis tuple; other orders follow by (skew) symmetry.
  /// Throws std::invalid_argument on degree violations or forbidden repeated entries.
  void set(const std::vector<std::size_t>& idx, const TableVector& value);
  TableVector basis_bracket(const std::vector<std::size_t>& idx) const;
  TableVector bracket(const std::vector<TableVector>& v) const;
  const std::map<std::vector<std::size_t>, TableVector>& entries() const { return table_; }

  BracketOracle<TableVector> oracle() const;
  /// Skew brackets on L <-> symmetric brackets on L[1] with the sign (-)^{(k-1)v1 + .. + v_{k-1}}.
  TableAlgebra decalage() const;

  /// Random tables of arities 1..max_arity, respecting degrees and symmetry.
  static TableAlgebra random(Rng& rng, std::vector<int> basis_degrees, Flavor flavor, int max_arity);

  friend bool operator==(const TableAlgebra& a, const TableAlgebra& b);

 private:
  /// Sign of sorting idx into nondecreasing order; 0 when a repeated entry forces the value to vanish.
  int sort_sign(std::vector<std::size_t>& idx) const;

  std::vector<int> degrees_;
  Flavor flavor_;
  int max_arity_ = 0;
  std::map<std::vector<std::size_t>, TableVector> table_;
};

/// Degree of a homogeneous element; throws on mixed degrees.  Zero has degree 0.
int table_degree(const TableAlgebra& t, const TableVector& v);

/// Skew flavor differential graded Lie algebra on a, b (degree 0) and c (degree 1):
/// d b = c, [a, b] = b, [a, c] = c, everything else zero.
TableAlgebra small_dg_lie();

/// Flip the sign of one stored entry.
TableAlgebra with_flipped_entry(const TableAlgebra& t, const std::vector<std::size_t>& idx);

}  // namespace lrc
