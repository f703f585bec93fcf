#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qspec/laurent.hpp"
#include "qspec/root_system.hpp"

namespace qspec {

/// Brute-force limits for the oracle. Exceeding them is a ResourceError.
struct OracleLimits {
  std::uint64_t max_patterns = 1'000'000;

  /// Defaults, overridden by QSPEC_MAX_PATTERNS when set.
  static OracleLimits from_environment();
};

/// Weakly decreasing, length l+1, last part 0.
class Partition {
 public:
  explicit Partition(std::vector<std::int64_t> parts);
  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t size() const;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// Gelfand-Tsetlin pattern. rows[0] is the top row (l+1 entries); row r has l+1-r entries.
struct GTPattern {
  std::vector<std::vector<std::int64_t>> rows;

  bool is_interlacing() const;
  /// Weight in fundamental coordinates from consecutive row-sum differences.
  Weight weight() const;
};

class WeightMultiplicityTable {
 public:
  WeightMultiplicityTable() = default;
  explicit WeightMultiplicityTable(Weight highest) : highest_(std::move(highest)) {}

  const Weight& highest() const { return highest_; }
  const std::map<Weight, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t multiplicity(const Weight& mu) const;
  void add(const Weight& mu, std::uint64_t count = 1);
  std::uint64_t total() const;

  bool operator==(const WeightMultiplicityTable&) const = default;

 private:
  Weight highest_;
  std::map<Weight, std::uint64_t> entries_;
};

/// One line per weight where two tables disagree; empty when they match.
std::vector<std::string> diff_tables(const WeightMultiplicityTable& a, const WeightMultiplicityTable& b);

/// parts[i] = n_i + ... + n_l, parts[l+1] = 0.
Partition to_partition(int rank, const Weight& lambda);

/// Calls visit(pattern) for every GT pattern with the given top row, in
/// lexicographic order on rows. Throws ResourceError beyond limits.max_patterns.
template <typename Visitor>
void for_each_gt_pattern(const Partition& top, const OracleLimits& limits, Visitor&& visit);

/// Multiplicities by counting Gelfand-Tsetlin patterns.
WeightMultiplicityTable multiplicities_gt(int rank, const Weight& lambda,
                                          const OracleLimits& limits = OracleLimits{});

/// Multiplicities by Freudenthal's recursion over the dominant chamber,
/// extended to all weights by the Weyl group (permutations of e-coordinates).
WeightMultiplicityTable multiplicities_freudenthal(int rank, const Weight& lambda,
                                                   const OracleLimits& limits = OracleLimits{});

/// sum_mu mult(mu) q^{sign (2 rho, mu)}, from the GT table. sign must be +1 or -1.
LaurentPoly char_at_k2rho(int rank, const Weight& lambda, int sign,
                          const OracleLimits& limits = OracleLimits{});

/// Same character from an already computed table.
LaurentPoly character_at_k2rho(const WeightMultiplicityTable& table, int sign);

}  // namespace qspec

#include "qspec/detail/gt_enumeration.hpp"
