#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

using Table = std::vector<std::vector<int>>;

// A finite ring as explicit operation tables over element indices 0..order-1.
// Index 0 is always the additive identity. Instances are immutable once built
// and only `validate` builds them, so holding a FiniteRing is proof that the
// full axiom scan passed. Safe to share across threads.
class FiniteRing {
 public:
  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  // k-fold additive multiple k*x, k >= 0.
  int times(int k, int x) const;

  // Additive order of x (precomputed; ord(0) == 1).
  int add_order(int x) const { return add_order_[static_cast<std::size_t>(x)]; }

  // Copy with a different display name (names carry no semantic weight).
  FiniteRing renamed(std::string name) const;

  // Ring with the same addition and transposed multiplication.
  FiniteRing opposite() const;

  Table add_table() const;
  Table mul_table() const;

  friend FiniteRing validate(int order, const Table& add, const Table& mul,
                             std::string name);

 private:
  FiniteRing() = default;
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }

  int order_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<int> add_order_;
  std::string name_;
};

// Checks every ring axiom by exhaustive scan (O(order^3)) and returns the
// validated ring. Nothing is trusted from the caller: additive identity at
// index 0, abelian group axioms, associativity of mul, both distributive
// laws, and the derived mul-by-zero law are all verified, in that order, and
// the first violation is thrown as a RingError naming the axiom and witness.
FiniteRing validate(int order, const Table& add, const Table& mul,
                    std::string name = {});

// The unique two-sided multiplicative identity, if the ring has one.
std::optional<int> find_unity(const FiniteRing& r);

bool is_commutative(const FiniteRing& r);

// Least k >= 1 with k*x = 0 for all x (exponent of the additive group).
int characteristic(const FiniteRing& r);

// Invariant factors d_1 | d_2 | ... | d_k of the additive group, ascending,
// with product = order. The zero ring yields an empty list.
std::vector<int> additive_type(const FiniteRing& r);

struct SubringResult {
  FiniteRing ring;
  // embedding[i] = original index of the subring's element i; embedding[0]=0,
  // the rest ascend.
  std::vector<int> embedding;
};

// Restriction of r to `subset`, which must contain 0 and be closed under
// addition, additive inverse and multiplication (checked; RingError NotClosed
// names the violating operation and witness pair). The result is re-validated.
SubringResult induced_subring(const FiniteRing& r, const std::vector<int>& subset);

}  // namespace ringlab
