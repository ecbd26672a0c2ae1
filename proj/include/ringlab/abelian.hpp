#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

// The standard presentation Z_{d_1} x ... x Z_{d_k} of a finite abelian
// group, d_1 | d_2 | ... | d_k (no factors of 1; the trivial group has an
// empty list). Elements are encoded mixed-radix with the FIRST factor most
// significant, so index 0 is the zero tuple and generator i (the i-th
// standard basis tuple) has index weight(i) = d_{i+1} * ... * d_k.
struct GroupPresentation {
  std::vector<int> factors;
  int order = 1;

  explicit GroupPresentation(std::vector<int> invariant_factors);

  int k() const { return static_cast<int>(factors.size()); }
  int generator(int i) const { return weights_[static_cast<std::size_t>(i)]; }

  std::vector<int> decode(int index) const;
  int encode(const std::vector<int>& tuple) const;

  int add(int a, int b) const;
  int neg(int a) const;
  // Additive order of element `a`.
  int element_order(int a) const;
  // t*a for t >= 0.
  int scale(int t, int a) const;

  // The full addition table as needed by `validate`.
  Table add_table() const;

 private:
  std::vector<int> weights_;
};

// One presentation per isomorphism class of abelian groups of the given
// order (partitions of each prime-power exponent, combined multiplicatively),
// in a deterministic order.
std::vector<GroupPresentation> abelian_groups(int order);

// All automorphisms of the standard presentation, as permutations of element
// indices. Enumerated by mapping the generator tuple to every candidate image
// tuple with compatible orders and keeping the bijective ones. Results are
// cached per factor list; the identity is always first.
const std::vector<std::vector<std::uint16_t>>& automorphisms(
    const std::vector<int>& factors);

// An additive isomorphism from r onto the standard presentation of its
// invariant-factor type: psi[x] is the standard index of x. Found by a
// backtracking basis search (elements b_i of order d_i whose cyclic spans
// intersect trivially).
struct AdditiveIso {
  std::vector<int> factors;
  std::vector<int> to_standard;  // psi, a bijection [0,n) -> [0,n)
};
AdditiveIso additive_isomorphism(const FiniteRing& r);

}  // namespace ringlab
