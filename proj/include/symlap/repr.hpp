#ifndef SYMLAP_REPR_HPP
#define SYMLAP_REPR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "symlap/root_system.hpp"

namespace symlap {

/// A positive system with a chosen basis: either a full root system or a
/// closed subsystem sharing the ambient realization (the compact part of a
/// symmetric pair). Weight components orthogonal to the subsystem are
/// carried along inertly.
class RootDatum {
 public:
  static RootDatum full(std::shared_ptr<const RootSystem> rs);
  static RootDatum subsystem(std::shared_ptr<const RootSystem> ambient,
                             std::vector<Weight> simple,
                             std::vector<Weight> positive);

  const RootSystem& ambient() const { return *ambient_; }
  std::shared_ptr<const RootSystem> ambient_ptr() const { return ambient_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  const std::vector<Weight>& simple() const { return simple_; }
  const std::vector<Weight>& positive() const { return positive_; }
  const std::vector<Weight>& fundamental() const { return fundamental_; }
  const Weight& delta() const { return delta_; }

  Rat pairing(const Weight& v, int i) const;
  bool is_dominant(const Weight& v) const;
  bool is_integral(const Weight& v) const;
  Weight dominantize(const Weight& v) const;

  /// Component of v in the span of the subsystem, and the inert rest.
  Weight span_component(const Weight& v) const;

  /// Weyl dimension formula for dominant v.
  std::int64_t weyl_dimension(const Weight& v) const;

  /// Orbit size of v under the subsystem's reflection group.
  std::int64_t orbit_size(const Weight& v) const;

 private:
  std::shared_ptr<const RootSystem> ambient_;
  bool full_ = false;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<Weight> fundamental_;
  Weight delta_;
};

/// Weight multiplicities of one irreducible representation, stored on
/// dominant representatives only; orbits are expanded on demand.
class WeightSystem {
 public:
  WeightSystem(RootDatum d, Weight highest, std::map<Weight, std::int64_t> mult)
      : d_(std::move(d)), highest_(std::move(highest)), mult_(std::move(mult)) {}

  const Weight& highest() const { return highest_; }
  const RootDatum& datum() const { return d_; }
  const std::map<Weight, std::int64_t>& dominant_multiplicities() const { return mult_; }

  /// Multiplicity of an arbitrary weight (0 if absent).
  std::int64_t multiplicity(const Weight& mu) const;

  /// Sum of multiplicities over full orbits; equals the Weyl dimension.
  std::int64_t total_dimension() const;

 private:
  RootDatum d_;
  Weight highest_;
  std::map<Weight, std::int64_t> mult_;
};

/// Complete weight system of the irreducible representation with the given
/// highest weight, by the Freudenthal recursion down the dominance order.
WeightSystem weight_system(const RootDatum& d, const Weight& lam);

/// Weyl dimension of the irreducible with highest weight lam.
std::int64_t dimension(const RootDatum& d, const Weight& lam);

std::int64_t multiplicity(const RootDatum& d, const Weight& lam, const Weight& mu);

/// All dominant integral weights with Casimir eigenvalue <= cutoff,
/// sorted by (casimir, canonical order). Finite since <lam+delta, lam+delta>
/// is bounded by cutoff + <delta, delta>.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Rat& cutoff);

struct IdentityCheck {
  Rat lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

/// 2 * sum over positive roots of <theta, theta> against dim(t) = rank.
IdentityCheck check_gordon_brown(const RootSystem& rs);

/// killing_scale * (delta, delta) against dim(G)/24.
IdentityCheck check_strange_formula(const RootSystem& rs);

}  // namespace symlap

#endif
