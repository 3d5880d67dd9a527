#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cgt/error.hpp"

namespace cgt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// A permutation of [0, n), stored as the image array.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  // (a * b)(x) = a(b(x)); b is applied first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

  std::size_t hash() const;

private:
  std::vector<int> img_;
};

// Permutation group with a deterministic stabilizer chain (base + strong
// generating set).  Immutable once built; concurrent readers are fine.
class PermGroup {
public:
  struct Level {
    int beta = -1;
    std::vector<int> orbit;          // BFS discovery order, orbit[0] == beta
    std::vector<int> orbit_pos;      // point -> index+1 into orbit, 0 if absent
    std::vector<Perm> transversal;   // transversal[i](beta) == orbit[i]
    std::vector<Perm> gens_here;     // strong generators first dropped at this level
  };

  static PermGroup trivial(int n);
  // Deterministic Schreier-Sims; base points are the smallest moved points
  // unless a preferred base order is supplied.
  static PermGroup from_generators(int n, const std::vector<Perm>& gens);
  static PermGroup from_generators(int n, const std::vector<Perm>& gens,
                                   const std::vector<int>& preferred_base);

  int degree() const { return n_; }
  u128 order() const;
  u64 order_u64() const;  // throws on overflow
  bool contains(const Perm& p) const;
  // Sifts p through the chain; returns the transversal word (one element per
  // level) when p is a member.
  std::optional<std::vector<Perm>> factorize(const Perm& p) const;

  const std::vector<Perm>& generators() const { return input_gens_; }
  std::vector<Perm> strong_generators() const;
  int chain_length() const { return static_cast<int>(levels_.size()); }
  const Level& level(int i) const { return levels_[i]; }

  // Level at which a point's image becomes pinned during a chain descent:
  // the smallest i such that the stabilizer of the first i base points moves
  // nothing onto/off the point.
  const std::vector<int>& determination_level() const { return det_level_; }

  // Visits every element; throws DomainTooLarge if the order exceeds cap.
  void for_each_element(u64 cap, const std::function<void(const Perm&)>& fn) const;
  std::vector<Perm> elements(u64 cap) const;
  Perm random_element(std::mt19937_64& rng) const;

  // Same group on a generating set of size <= log2(order) picked greedily
  // from the strong generators.
  PermGroup reduce_generators() const;

private:
  friend class ChainBuilder;
  int n_ = 0;
  std::vector<Perm> input_gens_;
  std::vector<Level> levels_;
  std::vector<int> det_level_;

  void finalize();
};

// A subcoset rep * group, or the empty set.  Solvers return Empty as a value;
// it is not an error.
class Subcoset {
public:
  static Subcoset empty_set(int n);
  static Subcoset of(Perm rep, PermGroup group);
  // Identifies the subcoset spanned by an explicit nonempty element list;
  // throws NotASubcoset if the list is not closed.
  static Subcoset from_elements(int n, const std::vector<Perm>& elems);

  bool empty() const { return empty_; }
  int degree() const { return n_; }
  u128 order() const { return empty_ ? 0 : group_.order(); }
  const Perm& representative() const;
  const PermGroup& group() const;
  bool contains(const Perm& p) const;

private:
  Subcoset() = default;
  bool empty_ = true;
  int n_ = 0;
  Perm rep_;
  PermGroup group_;
};

// Exhaustive filter of a subcoset by an arbitrary predicate.  Enumeration is
// capped (default 1e4); the kept set must itself be a subcoset.
Subcoset subcoset_intersect_filter(const Subcoset& c,
                                   const std::function<bool(const Perm&)>& test,
                                   u64 enumeration_cap = 10000);

std::vector<Perm> symmetric_group_gens(int n);

}  // namespace cgt
