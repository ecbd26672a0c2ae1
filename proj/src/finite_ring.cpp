#include "ringlab/finite_ring.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace ringlab {

namespace {

void check_shape(int order, const Table& t, const char* which) {
  if (order < 1) {
    throw RingError(RingError::Code::BadShape,
                    fmt::format("order must be >= 1, got {}", order));
  }
  if (static_cast<int>(t.size()) != order) {
    throw RingError(RingError::Code::BadShape,
                    fmt::format("{} table has {} rows, expected {}", which,
                                t.size(), order));
  }
  for (int a = 0; a < order; ++a) {
    if (static_cast<int>(t[a].size()) != order) {
      throw RingError(RingError::Code::BadShape,
                      fmt::format("{} table row {} has {} entries, expected {}",
                                  which, a, t[a].size(), order),
                      {}, {a, -1, -1});
    }
    for (int b = 0; b < order; ++b) {
      if (t[a][b] < 0 || t[a][b] >= order) {
        throw RingError(
            RingError::Code::BadShape,
            fmt::format("{} table entry [{}][{}] = {} out of range [0, {})",
                        which, a, b, t[a][b], order),
            {}, {a, b, -1});
      }
    }
  }
}

}  // namespace

FiniteRing validate(int order, const Table& add, const Table& mul,
                    std::string name) {
  check_shape(order, add, "add");
  check_shape(order, mul, "mul");

  // Index 0 must be the additive identity.
  for (int x = 0; x < order; ++x) {
    if (add[0][x] != x || add[x][0] != x) {
      throw RingError(RingError::Code::NotAGroup,
                      fmt::format("element 0 is not the additive identity: "
                                  "0+{} = {}, {}+0 = {}",
                                  x, add[0][x], x, add[x][0]),
                      "identity", {0, x, -1});
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (add[a][b] != add[b][a]) {
        throw RingError(
            RingError::Code::NotAGroup,
            fmt::format("addition is not commutative at ({}, {})", a, b),
            "commutative", {a, b, -1});
      }
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = add[a][b];
      for (int c = 0; c < order; ++c) {
        if (add[ab][c] != add[a][add[b][c]]) {
          throw RingError(
              RingError::Code::NotAGroup,
              fmt::format("addition is not associative at ({}, {}, {})", a, b, c),
              "associative", {a, b, c});
        }
      }
    }
  }
  std::vector<std::uint16_t> neg(order, 0);
  for (int a = 0; a < order; ++a) {
    int inv = -1;
    for (int b = 0; b < order; ++b) {
      if (add[a][b] == 0) {
        inv = b;
        break;
      }
    }
    if (inv < 0) {
      throw RingError(RingError::Code::NotAGroup,
                      fmt::format("element {} has no additive inverse", a),
                      "inverse", {a, -1, -1});
    }
    neg[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(inv);
  }

  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = mul[a][b];
      for (int c = 0; c < order; ++c) {
        if (mul[ab][c] != mul[a][mul[b][c]]) {
          throw RingError(
              RingError::Code::NotAssociative,
              fmt::format("multiplication is not associative at ({}, {}, {})",
                          a, b, c),
              {}, {a, b, c});
        }
      }
    }
  }

  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) {
          throw RingError(
              RingError::Code::NotDistributive,
              fmt::format("left distributivity fails at ({}, {}, {})", a, b, c),
              "left", {a, b, c});
        }
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) {
          throw RingError(
              RingError::Code::NotDistributive,
              fmt::format("right distributivity fails at ({}, {}, {})", a, b, c),
              "right", {a, b, c});
        }
      }
    }
  }

  // Derivable from the axioms; asserted as a cross-check on the scan itself.
  for (int x = 0; x < order; ++x) {
    if (mul[0][x] != 0 || mul[x][0] != 0) {
      throw RingError(RingError::Code::ZeroAnnihilation,
                      fmt::format("mul-by-zero cross-check failed at {}", x),
                      {}, {x, -1, -1});
    }
  }

  FiniteRing r;
  r.order_ = order;
  r.name_ = std::move(name);
  r.add_.resize(static_cast<std::size_t>(order) * order);
  r.mul_.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      r.add_[r.index(a, b)] = static_cast<std::uint16_t>(add[a][b]);
      r.mul_[r.index(a, b)] = static_cast<std::uint16_t>(mul[a][b]);
    }
  }
  r.neg_ = std::move(neg);
  r.add_order_.resize(order, 1);
  for (int x = 1; x < order; ++x) {
    int ord = 1;
    int acc = x;
    while (acc != 0) {
      acc = add[acc][x];
      ++ord;
    }
    r.add_order_[static_cast<std::size_t>(x)] = ord;
  }
  return r;
}

int FiniteRing::times(int k, int x) const {
  int acc = 0;
  const int ord = add_order(x);
  for (int i = 0; i < k % ord; ++i) acc = add(acc, x);
  return acc;
}

FiniteRing FiniteRing::renamed(std::string name) const {
  FiniteRing r = *this;
  r.name_ = std::move(name);
  return r;
}

FiniteRing FiniteRing::opposite() const {
  FiniteRing r = *this;
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < a; ++b) {
      std::swap(r.mul_[index(a, b)], r.mul_[index(b, a)]);
    }
  }
  r.name_ = name_.empty() ? std::string("op") : name_ + ".op";
  return r;
}

Table FiniteRing::add_table() const {
  Table t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = add(a, b);
  return t;
}

Table FiniteRing::mul_table() const {
  Table t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::optional<int> find_unity(const FiniteRing& r) {
  for (int e = 0; e < r.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < r.order() && ok; ++x) {
      ok = r.mul(e, x) == x && r.mul(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_commutative(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    for (int b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

int characteristic(const FiniteRing& r) {
  long long lcm = 1;
  for (int x = 1; x < r.order(); ++x) {
    lcm = std::lcm(lcm, static_cast<long long>(r.add_order(x)));
  }
  return static_cast<int>(lcm);
}

std::vector<int> additive_type(const FiniteRing& r) {
  const int n = r.order();
  if (n == 1) return {};

  // Count elements whose additive order divides each prime power; for an
  // abelian p-group of type (l_1 >= l_2 >= ...) the count at p^j is
  // p^(sum_i min(l_i, j)), so consecutive log-differences give the conjugate
  // partition.
  std::map<int, std::vector<int>> parts_by_prime;  // prime -> descending parts
  int rest = n;
  for (int p = 2; static_cast<long long>(p) * p <= rest; ++p) {
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      parts_by_prime[p] = {};
    }
  }
  if (rest > 1) parts_by_prime[rest] = {};

  for (auto& [p, parts] : parts_by_prime) {
    std::vector<int> conjugate;  // c_j = #parts >= j
    long long pk = 1;
    int s_prev = 0;
    while (true) {
      pk *= p;
      int count = 0;
      for (int x = 0; x < n; ++x) {
        const int ord = r.add_order(x);
        if (pk % ord == 0) ++count;  // ord | p^k forces ord to be a p-power
      }
      int s = 0;
      int c = count;
      while (c > 1) {
        c /= p;
        ++s;
      }
      if (s == s_prev) break;  // p-part exhausted
      conjugate.push_back(s - s_prev);
      s_prev = s;
    }
    const int num_parts = conjugate.empty() ? 0 : conjugate[0];
    parts.assign(num_parts, 0);
    for (std::size_t j = 0; j < conjugate.size(); ++j) {
      for (int i = 0; i < conjugate[j]; ++i) parts[i] += 1;
    }
  }

  std::size_t width = 0;
  for (const auto& [p, parts] : parts_by_prime) {
    width = std::max(width, parts.size());
  }
  std::vector<int> factors;  // built largest-first, then reversed
  for (std::size_t i = 0; i < width; ++i) {
    long long d = 1;
    for (const auto& [p, parts] : parts_by_prime) {
      if (i < parts.size()) {
        for (int e = 0; e < parts[i]; ++e) d *= p;
      }
    }
    factors.push_back(static_cast<int>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

SubringResult induced_subring(const FiniteRing& r, const std::vector<int>& subset) {
  std::vector<char> in(r.order(), 0);
  for (int x : subset) {
    if (x < 0 || x >= r.order()) {
      throw RingError(RingError::Code::BadInput,
                      fmt::format("subset element {} out of range", x));
    }
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[0]) {
    throw RingError(RingError::Code::NotClosed, "subset does not contain 0",
                    "zero", {0, -1, -1});
  }

  std::vector<int> members;
  for (int x = 0; x < r.order(); ++x) {
    if (in[static_cast<std::size_t>(x)]) members.push_back(x);
  }
  for (int a : members) {
    if (!in[static_cast<std::size_t>(r.neg(a))]) {
      throw RingError(RingError::Code::NotClosed,
                      fmt::format("subset not closed under negation at {}", a),
                      "neg", {a, -1, -1});
    }
    for (int b : members) {
      if (!in[static_cast<std::size_t>(r.add(a, b))]) {
        throw RingError(
            RingError::Code::NotClosed,
            fmt::format("subset not closed under addition at ({}, {})", a, b),
            "add", {a, b, -1});
      }
      if (!in[static_cast<std::size_t>(r.mul(a, b))]) {
        throw RingError(
            RingError::Code::NotClosed,
            fmt::format("subset not closed under multiplication at ({}, {})", a,
                        b),
            "mul", {a, b, -1});
      }
    }
  }

  // members is ascending and starts at 0, so new index 0 stays the zero.
  std::vector<int> to_new(r.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    to_new[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  }
  const int m = static_cast<int>(members.size());
  Table add(m, std::vector<int>(m));
  Table mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      add[i][j] = to_new[static_cast<std::size_t>(r.add(members[i], members[j]))];
      mul[i][j] = to_new[static_cast<std::size_t>(r.mul(members[i], members[j]))];
    }
  }
  std::string name =
      r.name().empty() ? std::string("subring") : r.name() + ".subring";
  return SubringResult{validate(m, add, mul, std::move(name)), members};
}

}  // namespace ringlab
