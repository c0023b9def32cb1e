#include "symlap/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linalg.hpp"

namespace symlap {

namespace {

Weight basis_vec(int dim, int i, Rat v = Rat(1)) {
  Weight w(static_cast<std::size_t>(dim));
  w[static_cast<std::size_t>(i)] = v;
  return w;
}

// Simple roots of the chosen realizations. B, C, F4 and G2 follow the
// classical coordinates (G2 lives in the trace-zero plane of R^3); A is
// realized in rank+1 coordinates; D and the E series are the standard
// orthogonal realizations.
std::vector<Weight> make_simple_roots(Family f, int rank, int dim) {
  std::vector<Weight> s;
  auto chain = [&](int count) {
    for (int i = 0; i < count; ++i) {
      Weight w(static_cast<std::size_t>(dim));
      w[i] = Rat(1);
      w[i + 1] = Rat(-1);
      s.push_back(w);
    }
  };
  switch (f) {
    case Family::A:
      chain(rank);
      break;
    case Family::B:
      chain(rank - 1);
      s.push_back(basis_vec(dim, rank - 1));
      break;
    case Family::C:
      chain(rank - 1);
      s.push_back(basis_vec(dim, rank - 1, Rat(2)));
      break;
    case Family::D: {
      chain(rank - 1);
      Weight w(static_cast<std::size_t>(dim));
      w[rank - 2] = Rat(1);
      w[rank - 1] = Rat(1);
      s.push_back(w);
      break;
    }
    case Family::G2: {
      s.push_back(Weight{Rat(1), Rat(-1), Rat(0)});
      s.push_back(Weight{Rat(-2), Rat(1), Rat(1)});
      break;
    }
    case Family::F4: {
      s.push_back(Weight{Rat(0), Rat(1), Rat(-1), Rat(0)});
      s.push_back(Weight{Rat(0), Rat(0), Rat(1), Rat(-1)});
      s.push_back(Weight{Rat(0), Rat(0), Rat(0), Rat(1)});
      s.push_back(Weight{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      Weight a1(8);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) a1[i] = Rat(-1, 2);
      s.push_back(a1);
      Weight a2(8);
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      s.push_back(a2);
      Weight a3(8);
      a3[0] = Rat(-1);
      a3[1] = Rat(1);
      s.push_back(a3);
      for (int i = 0; i < rank - 3; ++i) {
        Weight w(8);
        w[i + 2] = Rat(1);
        w[i + 1] = Rat(-1);
        s.push_back(w);
      }
      break;
    }
  }
  return s;
}

std::size_t classical_positive_count(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n) * n;
    case Family::D: return static_cast<std::size_t>(n) * (n - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
  }
  return 0;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family: " + s);
}

std::string RootSystem::name() const {
  Family f = family_;
  if (f == Family::A || f == Family::B || f == Family::C || f == Family::D)
    return family_name(f) + std::to_string(rank_);
  return family_name(f);
}

std::shared_ptr<const RootSystem> RootSystem::build(Family f, int rank) {
  int expected_rank = -1;
  switch (f) {
    case Family::E6: expected_rank = 6; break;
    case Family::E7: expected_rank = 7; break;
    case Family::E8: expected_rank = 8; break;
    case Family::F4: expected_rank = 4; break;
    case Family::G2: expected_rank = 2; break;
    default: break;
  }
  if (expected_rank > 0 && rank != expected_rank)
    throw std::invalid_argument("family " + family_name(f) + " has fixed rank " +
                                std::to_string(expected_rank) + ", got " +
                                std::to_string(rank));
  int min_rank = 1;
  if (f == Family::C) min_rank = 2;
  if (f == Family::D) min_rank = 3;
  if (rank < min_rank)
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " is invalid for family " + family_name(f));

  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->family_ = f;
  rs->rank_ = rank;
  switch (f) {
    case Family::A: rs->ambient_dim_ = rank + 1; break;
    case Family::G2: rs->ambient_dim_ = 3; break;
    case Family::E6:
    case Family::E7: rs->ambient_dim_ = 8; break;
    default: rs->ambient_dim_ = rank; break;
  }
  rs->simple_roots_ = make_simple_roots(f, rank, rs->ambient_dim_);
  rs->finish_construction();
  return rs;
}

void RootSystem::finish_construction() {
  const int r = rank_;

  // All roots: closure of the simple roots under simple reflections.
  std::set<Weight> roots(simple_roots_.begin(), simple_roots_.end());
  std::vector<Weight> queue(simple_roots_);
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < r; ++i) {
      Weight img = simple_reflect(i, v);
      if (roots.insert(img).second) queue.push_back(img);
    }
  }

  // Coordinates in the simple basis, via the Gram matrix.
  detail::RatMatrix gram(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = dot(simple_roots_[i], simple_roots_[j]);
  for (const Weight& root : roots) {
    std::vector<Rat> rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = dot(simple_roots_[i], root);
    std::vector<Rat> c = detail::solve(gram, rhs);
    std::vector<int> ic(r);
    bool pos = true, neg = true;
    for (int i = 0; i < r; ++i) {
      ic[i] = static_cast<int>(c[i].to_int64());
      if (ic[i] > 0) neg = false;
      if (ic[i] < 0) pos = false;
    }
    if (pos == neg) throw std::logic_error("root with mixed signs in simple basis");
    root_coords_.emplace(root, ic);
    if (pos) positive_roots_.push_back(root);
  }
  if (positive_roots_.size() != classical_positive_count(family_, rank_))
    throw std::logic_error("positive root count mismatch for " + name());

  // Sort positive roots by height, ties broken by the canonical order.
  auto height = [&](const Weight& w) {
    const auto& c = root_coords_.at(w);
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [&](const Weight& a, const Weight& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  delta_ = zero_weight();
  for (const Weight& w : positive_roots_) delta_ += w;
  delta_ *= Rat(1, 2);

  cartan_.assign(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i) {
    const Rat ni = dot(simple_roots_[i], simple_roots_[i]);
    for (int j = 0; j < r; ++j)
      cartan_[i][j] =
          static_cast<int>((Rat(2) * dot(simple_roots_[i], simple_roots_[j]) / ni).to_int64());
  }

  // Fundamental weights: omega_i = sum_k c_k alpha_k with
  // <omega_i, alpha_j^vee> = delta_ij.
  detail::RatMatrix pairing(r, std::vector<Rat>(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) pairing[j][k] = Rat(cartan_[j][k]);
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> e(r);
    e[i] = Rat(1);
    std::vector<Rat> c = detail::solve(pairing, e);
    Weight w = zero_weight();
    for (int k = 0; k < r; ++k) w += c[k] * simple_roots_[k];
    fundamental_.push_back(w);
  }

  // Root lengths: at most two squared lengths occur.
  std::set<Rat> norms;
  for (const Weight& w : positive_roots_) norms.insert(dot(w, w));
  if (norms.empty() || norms.size() > 2)
    throw std::logic_error("unexpected number of root lengths");
  short_norm2_ = *norms.begin();
  long_norm2_ = *norms.rbegin();

  for (const Weight& w : positive_roots_) {
    if (!is_dominant(w)) continue;
    if (dot(w, w) == long_norm2_) highest_long_ = w;
    else highest_short_ = w;
  }
  if (highest_long_.dim() == 0) throw std::logic_error("no dominant long root");
  if (has_two_lengths() && highest_short_.dim() == 0)
    throw std::logic_error("no dominant short root");

  // Killing normalization from <delta, delta> = dim(G)/24.
  killing_scale_ = Rat(group_dimension(), 24) / euclidean(delta_, delta_);
}

Weight RootSystem::normalized(const Weight& v) const {
  if (family_ != Family::A) return v;
  Rat s = v.coordinate_sum();
  if (s.is_zero()) return v;
  Weight w = v;
  Rat shift = s / Rat(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i) w[i] -= shift;
  return w;
}

Rat RootSystem::euclidean(const Weight& x, const Weight& y) const {
  if (static_cast<int>(x.dim()) != ambient_dim_ || static_cast<int>(y.dim()) != ambient_dim_)
    throw std::invalid_argument("weight dimension mismatch for " + name());
  Rat d = dot(x, y);
  if (family_ == Family::A)
    d -= x.coordinate_sum() * y.coordinate_sum() / Rat(ambient_dim_);
  return d;
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  return killing_scale_ * euclidean(x, y);
}

bool RootSystem::is_root(const Weight& v) const {
  return root_coords_.find(v) != root_coords_.end();
}

const std::vector<int>& RootSystem::simple_coordinates(const Weight& root) const {
  auto it = root_coords_.find(root);
  if (it == root_coords_.end())
    throw std::invalid_argument("not a root of " + name() + ": " + root.str());
  return it->second;
}

RootLength RootSystem::length_class(const Weight& root) const {
  if (!is_root(root))
    throw std::invalid_argument("not a root of " + name() + ": " + root.str());
  return dot(root, root) == long_norm2_ ? RootLength::Long : RootLength::Short;
}

const Weight& RootSystem::highest_root(RootLength c) const {
  if (c == RootLength::Short && !has_two_lengths())
    throw std::invalid_argument(name() +
                                " has a single root length; all roots are long");
  return c == RootLength::Long ? highest_long_ : highest_short_;
}

Rat RootSystem::cartan_pairing(const Weight& v, int i) const {
  const Weight& a = simple_roots_[static_cast<std::size_t>(i)];
  return Rat(2) * euclidean(v, a) / dot(a, a);
}

bool RootSystem::is_dominant(const Weight& v) const {
  for (int i = 0; i < rank_; ++i)
    if (cartan_pairing(v, i).sign() < 0) return false;
  return true;
}

bool RootSystem::is_integral(const Weight& v) const {
  for (int i = 0; i < rank_; ++i)
    if (!cartan_pairing(v, i).is_integer()) return false;
  return true;
}

Weight RootSystem::reflect(const Weight& root, const Weight& v) const {
  if (!is_root(root))
    throw std::invalid_argument("reflect: not a root of " + name() + ": " + root.str());
  Rat c = Rat(2) * euclidean(v, root) / dot(root, root);
  Weight w = v;
  w -= c * root;
  return w;
}

Weight RootSystem::simple_reflect(int i, const Weight& v) const {
  const Weight& a = simple_roots_[static_cast<std::size_t>(i)];
  Rat c = Rat(2) * dot(v, a) / dot(a, a);
  Weight w = v;
  w -= c * a;
  return w;
}

Weight RootSystem::apply_word(const WeylWord& w, const Weight& v) const {
  Weight x = v;
  for (int i : w) x = simple_reflect(i, x);
  return x;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& v) const {
  Weight seed = normalized(v);
  std::set<Weight> orbit{seed};
  std::vector<Weight> queue{seed};
  while (!queue.empty()) {
    Weight x = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      Weight img = simple_reflect(i, x);
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  return {orbit.begin(), orbit.end()};
}

std::pair<Weight, WeylWord> RootSystem::dominant_representative(const Weight& v) const {
  Weight x = normalized(v);
  WeylWord word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (cartan_pairing(x, i).sign() < 0) {
        x = simple_reflect(i, x);
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {x, word};
}

Rat RootSystem::casimir(const Weight& lam) const {
  if (!is_dominant_integral(lam))
    throw std::invalid_argument("casimir: weight is not dominant integral: " + lam.str());
  Weight t = lam + Rat(2) * delta_;
  return inner(t, lam);
}

std::vector<std::int64_t> RootSystem::fundamental_coordinates(const Weight& v) const {
  std::vector<std::int64_t> m(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    Rat p = cartan_pairing(v, i);
    if (!p.is_integer())
      throw std::invalid_argument("weight is not integral: " + v.str());
    m[static_cast<std::size_t>(i)] = p.to_int64();
  }
  return m;
}

Weight RootSystem::weight_from_fundamental(const std::vector<std::int64_t>& m) const {
  if (m.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("expected " + std::to_string(rank_) +
                                " fundamental coordinates, got " + std::to_string(m.size()));
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i)
    w += Rat(static_cast<long>(m[static_cast<std::size_t>(i)])) * fundamental_[i];
  return w;
}

}  // namespace symlap
