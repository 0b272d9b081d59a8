#pragma once

#include <optional>
#include <set>
#include <string>

#include "newtoric/feasibility.hpp"
#include "newtoric/matrix.hpp"

namespace newtoric {

/// A positive affine semigroup given by the columns of an integer
/// matrix. Construction validates positivity (a rational functional
/// strictly positive on every generator must exist), rejects zero and
/// duplicate columns, and fixes once and for all a basis of the
/// generated lattice. All polyhedral computations downstream happen in
/// the coordinates of that basis, so rank-deficient inputs (generators
/// spanning a proper sublattice of Z^d) work uniformly.
class SemigroupPresentation {
 public:
  explicit SemigroupPresentation(IntMatrix generators,
                                 std::vector<std::string> labels = {})
      : gens_(std::move(generators)), labels_(std::move(labels)) {
    const std::size_t d = gens_.rows(), n = gens_.cols();
    if (d == 0 || n == 0)
      throw invalid_input_error("presentation needs positive dimensions");
    std::set<IntVec> seen;
    for (std::size_t j = 0; j < n; ++j) {
      IntVec col = gens_.column(j);
      if (is_zero(col)) throw invalid_input_error("zero generator column");
      if (!seen.insert(col).second)
        throw invalid_input_error("duplicate generator column");
    }
    if (labels_.empty())
      for (std::size_t j = 0; j < n; ++j)
        labels_.push_back("a" + std::to_string(j + 1));
    if (labels_.size() != n)
      throw invalid_input_error("label count does not match generators");

    // lattice basis of ZH from the Hermite form of the transpose
    basis_hnf_ = hermite_normal_form(gens_.transpose());
    rank_ = basis_hnf_.rank;
    coords_ = IntMatrix(rank_, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto c = solve_in_row_lattice(basis_hnf_, gens_.column(j));
      if (!c) throw invariant_error("generator outside its own lattice");
      for (std::size_t i = 0; i < rank_; ++i) coords_.at(i, j) = (*c)[i];
    }

    grading_ = compute_positive_grading();
  }

  std::size_t dim() const { return gens_.rows(); }
  std::size_t size() const { return gens_.cols(); }
  std::size_t rank() const { return rank_; }

  const IntMatrix& generators() const { return gens_; }
  IntVec generator(std::size_t j) const { return gens_.column(j); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Generator coordinates in the fixed ZH basis (rank x n).
  const IntMatrix& frame_coords() const { return coords_; }
  IntVec frame_generator(std::size_t j) const { return coords_.column(j); }

  /// ZH basis vectors as rows of a rank x d matrix.
  IntMatrix frame_basis() const {
    IntMatrix b(rank_, gens_.rows());
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < gens_.rows(); ++j)
        b.at(i, j) = basis_hnf_.h.at(i, j);
    return b;
  }

  /// Coordinates of an ambient vector in the ZH basis; nothing when the
  /// vector lies outside the lattice generated by the columns.
  std::optional<IntVec> to_frame(const IntVec& v) const {
    if (v.size() != gens_.rows())
      throw invalid_input_error("to_frame: wrong ambient dimension");
    return solve_in_row_lattice(basis_hnf_, v);
  }

  IntVec from_frame(const IntVec& c) const {
    if (c.size() != rank_) throw invalid_input_error("from_frame: wrong rank");
    IntVec v(gens_.rows(), Int(0));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < gens_.rows(); ++j)
        v[j] += c[i] * basis_hnf_.h.at(i, j);
    return v;
  }

  /// The positive grading: a primitive integer functional on the frame
  /// that is strictly positive on every generator. Existence is the
  /// positivity certificate; levels bound every enumeration.
  const IntVec& positive_grading() const { return grading_; }

  Rat level(const IntVec& frame_vec) const { return Rat(dot(grading_, frame_vec)); }
  Rat generator_level(std::size_t j) const { return level(frame_generator(j)); }

  Rat max_generator_level() const {
    Rat m = 0;
    for (std::size_t j = 0; j < size(); ++j) m = std::max(m, generator_level(j));
    return m;
  }

  /// Largest |det| of a maximal minor of the frame coordinate matrix.
  Int max_minor_bound() const { return max_abs_minor(coords_); }

  SemigroupPresentation restricted_to(const std::vector<std::size_t>& indices) const {
    std::vector<IntVec> cols;
    std::vector<std::string> labels;
    for (std::size_t j : indices) {
      cols.push_back(generator(j));
      labels.push_back(labels_[j]);
    }
    return SemigroupPresentation(IntMatrix::from_columns(cols), std::move(labels));
  }

 private:
  IntVec compute_positive_grading() const {
    InequalitySystem sys(rank_);
    for (std::size_t j = 0; j < size(); ++j) {
      RatVec coeffs(rank_);
      for (std::size_t i = 0; i < rank_; ++i) coeffs[i] = Rat(coords_.at(i, j));
      sys.add(std::move(coeffs), Rat(1));
    }
    auto sol = feasible_point(sys);
    if (!sol)
      throw not_positive_error("no strictly positive grading: semigroup is not positive");
    IntVec g = primitive_integer(*sol);
    for (std::size_t j = 0; j < size(); ++j)
      if (dot(g, frame_generator(j)) <= 0)
        throw invariant_error("computed grading fails to be positive");
    return g;
  }

  IntMatrix gens_;
  std::vector<std::string> labels_;
  HermiteResult basis_hnf_;
  std::size_t rank_ = 0;
  IntMatrix coords_;
  IntVec grading_;
};

}  // namespace newtoric
