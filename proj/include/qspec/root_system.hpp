#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qspec {

/// Weight of A_l written in the fundamental-weight basis: Lambda = sum_k n_k omega_k.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<value_type> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<value_type>(rank, 0)); }
  /// omega_1 + ... + omega_l
  static Weight rho(int rank) { return Weight(std::vector<value_type>(rank, 1)); }
  /// omega_i, 1-based.
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  /// 1-based coordinate access, matching the node labelling of the Dynkin diagram.
  value_type operator()(int i) const { return coords_[i - 1]; }
  value_type& operator()(int i) { return coords_[i - 1]; }
  const std::vector<value_type>& coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight scaled(value_type factor) const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string to_string() const;

 private:
  std::vector<value_type> coords_;
};

/// alpha_{ij} = e_i - e_j, 1 <= i < j <= l+1.
struct PositiveRoot {
  int i = 1;
  int j = 2;
  auto operator<=>(const PositiveRoot&) const = default;
};

/// Root datum of su(l+1).
class RootSystem {
 public:
  explicit RootSystem(int rank);

  int rank() const { return rank_; }
  int num_positive_roots() const { return rank_ * (rank_ + 1) / 2; }

  /// Lexicographic in (i, j).
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

  /// A_{ij}: 2 on the diagonal, -1 for neighbours.
  int cartan_entry(int i, int j) const;
  /// alpha_i expressed in fundamental coordinates (row i of the Cartan matrix).
  Weight simple_root(int i) const;
  /// alpha_{ij} in fundamental coordinates, the sum of simple roots i..j-1.
  Weight root_weight(const PositiveRoot& r) const;

  void check_weight(const Weight& w) const;

 private:
  int rank_;
  std::vector<PositiveRoot> roots_;
};

/// Throws DomainError when rank < 1.
std::vector<PositiveRoot> positive_roots(int rank);

/// (Lambda, alpha_{ij}) = n_i + ... + n_{j-1}.
std::int64_t pair_weight_root(const Weight& lambda, const PositiveRoot& r);

/// (rho, alpha_{ij}) = j - i.
std::int64_t rho_pairing(const PositiveRoot& r);

/// Exponent e with K_{2 rho} acting as q^e on a weight-mu vector:
/// (2 rho, mu) = sum_j j (l + 1 - j) m_j.
std::int64_t two_rho_pairing(const Weight& mu);

/// Node reversal n_k -> n_{l+1-k}; highest weight of the dual representation.
Weight dual_weight(const Weight& lambda);

}  // namespace qspec
