#ifndef SYMLAP_ROOT_SYSTEM_HPP
#define SYMLAP_ROOT_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symlap/rational.hpp"
#include "symlap/weight.hpp"

namespace symlap {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

enum class RootLength { Long, Short };

/// Sequence of simple-reflection indices (0-based), applied left to right:
/// the word [i, j] sends v to s_j(s_i(v)). Empty word is the identity.
using WeylWord = std::vector<int>;

std::string family_name(Family f);
Family family_from_string(const std::string& s);

/// A simple root system in explicit orthogonal coordinates, immutable after
/// construction. Family A is realized in rank+1 coordinates with weights
/// normalized to coordinate-sum zero; B, C, F4, G2 use the classical
/// coordinates with half-integer spin weights first-class; D and the E
/// series use the standard orthogonal realizations. The inner product
/// is the Euclidean form rescaled so that <delta, delta> = dim(G)/24.
class RootSystem {
 public:
  /// Constructs the system for a valid simple type. Throws
  /// std::invalid_argument otherwise. Accepted ranks: A >= 1, B >= 1,
  /// C >= 2, D >= 3; E6/E7/E8/F4/G2 are fixed.
  static std::shared_ptr<const RootSystem> build(Family f, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  /// dim(G) = rank + number of roots.
  std::int64_t group_dimension() const {
    return rank_ + 2 * static_cast<std::int64_t>(positive_roots_.size());
  }
  std::string name() const;

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

  /// Half-sum of the positive roots (equals the sum of fundamental weights).
  const Weight& half_sum_positive() const { return delta_; }

  /// The factor c with <x,y> = c * (x,y); fixed by <delta,delta> = dim(G)/24.
  const Rat& killing_scale() const { return killing_scale_; }

  /// Euclidean form of the realization (family A: restricted to the
  /// trace-zero hyperplane, i.e. both arguments are projected).
  Rat euclidean(const Weight& x, const Weight& y) const;

  /// Killing-normalized inner product: killing_scale * euclidean.
  Rat inner(const Weight& x, const Weight& y) const;

  /// Canonical representative (family A: projects onto coordinate-sum zero;
  /// identity elsewhere).
  Weight normalized(const Weight& v) const;

  bool is_root(const Weight& v) const;
  /// Coefficients of a root in the simple basis (all integers, one sign).
  const std::vector<int>& simple_coordinates(const Weight& root) const;

  bool has_two_lengths() const { return short_norm2_ != long_norm2_; }
  RootLength length_class(const Weight& root) const;
  /// Squared Euclidean length of long/short roots.
  const Rat& length_norm2(RootLength c) const {
    return c == RootLength::Long ? long_norm2_ : short_norm2_;
  }

  /// The unique dominant root of the given length class. Requesting the
  /// short class on a single-length system throws std::invalid_argument.
  const Weight& highest_root(RootLength c) const;

  /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i).
  Rat cartan_pairing(const Weight& v, int i) const;
  bool is_dominant(const Weight& v) const;
  bool is_integral(const Weight& v) const;
  bool is_dominant_integral(const Weight& v) const {
    return is_dominant(v) && is_integral(v);
  }

  /// Reflection in the hyperplane orthogonal to a root of the system.
  Weight reflect(const Weight& root, const Weight& v) const;
  Weight simple_reflect(int i, const Weight& v) const;
  Weight apply_word(const WeylWord& w, const Weight& v) const;

  /// Full orbit under the Weyl group, sorted in the canonical order.
  std::vector<Weight> weyl_orbit(const Weight& v) const;

  /// The unique dominant orbit element together with a word mapping v to it.
  std::pair<Weight, WeylWord> dominant_representative(const Weight& v) const;

  /// Casimir eigenvalue <lam + 2 delta, lam> of the irreducible
  /// representation with highest weight lam (dominant integral required).
  Rat casimir(const Weight& lam) const;

  /// Coordinates in the fundamental-weight basis, and the inverse map.
  /// Ordering follows the simple-root numbering of this realization.
  std::vector<std::int64_t> fundamental_coordinates(const Weight& v) const;
  Weight weight_from_fundamental(const std::vector<std::int64_t>& m) const;

  Weight zero_weight() const { return Weight(static_cast<std::size_t>(ambient_dim_)); }

 private:
  RootSystem() = default;
  void finish_construction();

  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> fundamental_;
  Weight delta_;
  Rat killing_scale_;
  Rat long_norm2_, short_norm2_;
  Weight highest_long_, highest_short_;
  std::unordered_map<Weight, std::vector<int>, WeightHash> root_coords_;
};

}  // namespace symlap

#endif
