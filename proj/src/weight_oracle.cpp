#include "qspec/weight_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include <boost/rational.hpp>

#include "qspec/errors.hpp"
#include "qspec/repcore.hpp"

namespace qspec {

namespace {

using Rational = boost::rational<std::int64_t>;

void require_dominant(int rank, const Weight& lambda) {
  RootSystem(rank).check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
}

// e-basis coordinates (l+1 entries, last one 0) -> fundamental coordinates.
Weight from_e_coords(const std::vector<std::int64_t>& e) {
  std::vector<std::int64_t> m(e.size() - 1);
  for (std::size_t j = 0; j + 1 < e.size(); ++j) m[j] = e[j] - e[j + 1];
  return Weight(std::move(m));
}

std::vector<std::int64_t> to_e_coords(const Weight& mu) {
  const int l = mu.rank();
  std::vector<std::int64_t> e(l + 1, 0);
  for (int k = l; k >= 1; --k) e[k - 1] = e[k] + mu(k);
  return e;
}

// The dominant weight in the Weyl orbit of mu.
Weight dominant_representative(const Weight& mu) {
  auto e = to_e_coords(mu);
  std::sort(e.begin(), e.end(), std::greater<>());
  return from_e_coords(e);
}

// Gram matrix of fundamental weights: (omega_i, omega_j) = min(i,j) (n - max(i,j)) / n, n = l+1.
Rational inner(const Weight& a, const Weight& b) {
  const int l = a.rank();
  const std::int64_t n = l + 1;
  std::int64_t scaled = 0;
  for (int i = 1; i <= l; ++i) {
    if (a(i) == 0) continue;
    for (int j = 1; j <= l; ++j) scaled += a(i) * b(j) * std::min(i, j) * (n - std::max(i, j));
  }
  return Rational(scaled, n);
}

// Partitions of `total` into at most parts.size() parts, dominated by `top`.
void dominated_partitions(const std::vector<std::int64_t>& top, std::vector<std::int64_t>& current,
                          std::size_t idx, std::int64_t remaining, std::int64_t prefix_top,
                          std::int64_t prefix_cur, std::vector<std::vector<std::int64_t>>& out) {
  if (idx == top.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const std::int64_t cap = idx == 0 ? remaining : std::min(current[idx - 1], remaining);
  const std::int64_t slots = static_cast<std::int64_t>(top.size() - idx);
  for (std::int64_t v = cap; v >= 0; --v) {
    if (prefix_cur + v > prefix_top + top[idx]) continue;
    if (v * slots < remaining) break;
    current[idx] = v;
    dominated_partitions(top, current, idx + 1, remaining - v, prefix_top + top[idx], prefix_cur + v, out);
  }
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* env = std::getenv("QSPEC_MAX_PATTERNS")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw DomainError(std::string("QSPEC_MAX_PATTERNS must be a positive integer, got '") + env + "'");
    limits.max_patterns = v;
  }
  return limits;
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw DomainError("partition needs at least two parts");
  if (parts_.back() != 0) throw DomainError("partition must end in 0");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < parts_[i + 1]) throw DomainError("partition parts must be weakly decreasing");
}

std::int64_t Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

bool GTPattern::is_interlacing() const {
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    if (rows[r + 1].size() + 1 != rows[r].size()) return false;
    for (std::size_t c = 0; c < rows[r + 1].size(); ++c)
      if (!(rows[r][c] >= rows[r + 1][c] && rows[r + 1][c] >= rows[r][c + 1])) return false;
  }
  return true;
}

Weight GTPattern::weight() const {
  const std::size_t n = rows.size();
  // sigma[k] = sum of the row with k entries.
  std::vector<std::int64_t> sigma(n + 1, 0);
  for (const auto& row : rows) sigma[row.size()] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
  std::vector<std::int64_t> w(n);
  for (std::size_t k = 1; k <= n; ++k) w[k - 1] = sigma[k] - sigma[k - 1];
  return from_e_coords(w);
}

std::uint64_t WeightMultiplicityTable::multiplicity(const Weight& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? 0 : it->second;
}

void WeightMultiplicityTable::add(const Weight& mu, std::uint64_t count) {
  if (count > 0) entries_[mu] += count;
}

std::uint64_t WeightMultiplicityTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [mu, m] : entries_) sum += m;
  return sum;
}

std::vector<std::string> diff_tables(const WeightMultiplicityTable& a, const WeightMultiplicityTable& b) {
  std::vector<std::string> lines;
  if (a.highest() != b.highest())
    lines.push_back("highest " + a.highest().to_string() + " vs " + b.highest().to_string());
  std::map<Weight, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [mu, m] : a.entries()) merged[mu].first = m;
  for (const auto& [mu, m] : b.entries()) merged[mu].second = m;
  for (const auto& [mu, pair] : merged)
    if (pair.first != pair.second)
      lines.push_back(mu.to_string() + ": " + std::to_string(pair.first) + " vs " + std::to_string(pair.second));
  return lines;
}

Partition to_partition(int rank, const Weight& lambda) {
  require_dominant(rank, lambda);
  return Partition(to_e_coords(lambda));
}

WeightMultiplicityTable multiplicities_gt(int rank, const Weight& lambda, const OracleLimits& limits) {
  const Partition top = to_partition(rank, lambda);
  if (classical_dim(rank, lambda) > limits.max_patterns)
    throw ResourceError("representation " + lambda.to_string() + " has more than " +
                        std::to_string(limits.max_patterns) + " Gelfand-Tsetlin patterns");
  WeightMultiplicityTable table(lambda);
  for_each_gt_pattern(top, limits, [&](const GTPattern& p) { table.add(p.weight()); });
  return table;
}

WeightMultiplicityTable multiplicities_freudenthal(int rank, const Weight& lambda, const OracleLimits& limits) {
  require_dominant(rank, lambda);
  const RootSystem roots(rank);
  const auto top = to_e_coords(lambda);

  std::vector<std::vector<std::int64_t>> partitions;
  std::vector<std::int64_t> scratch(top.size(), 0);
  dominated_partitions(top, scratch, 0, Partition(top).size(), 0, 0, partitions);

  // Process dominant weights by increasing depth below lambda.
  struct Dominant {
    std::int64_t depth;
    std::vector<std::int64_t> e;
    Weight mu;
  };
  std::vector<Dominant> dominant;
  for (auto& e : partitions) {
    std::int64_t depth = 0, pt = 0, pe = 0;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      pt += top[k];
      pe += e[k];
      depth += pt - pe;
    }
    Weight mu = from_e_coords(e);
    dominant.push_back({depth, std::move(e), std::move(mu)});
  }
  std::stable_sort(dominant.begin(), dominant.end(),
                   [](const Dominant& a, const Dominant& b) { return a.depth < b.depth; });

  const Weight rho = Weight::rho(rank);
  const Rational top_norm = inner(lambda + rho, lambda + rho);
  std::map<Weight, std::uint64_t> dominant_mult;
  auto mult_of = [&](const Weight& mu) -> std::uint64_t {
    auto it = dominant_mult.find(dominant_representative(mu));
    return it == dominant_mult.end() ? 0 : it->second;
  };

  std::uint64_t table_size = 0;
  for (const auto& d : dominant) {
    std::uint64_t m = 1;
    if (d.depth > 0) {
      std::int64_t sum = 0;
      for (const auto& r : roots.positive_roots()) {
        const Weight alpha = roots.root_weight(r);
        Weight shifted = d.mu + alpha;
        for (std::uint64_t mm; (mm = mult_of(shifted)) > 0; shifted = shifted + alpha)
          sum += static_cast<std::int64_t>(mm) * pair_weight_root(shifted, r);
      }
      const Rational gap = top_norm - inner(d.mu + rho, d.mu + rho);
      const Rational value = Rational(2 * sum) / gap;
      if (value.denominator() != 1 || value.numerator() < 0)
        throw NonExactDivision("Freudenthal recursion produced a non-integral multiplicity at " + d.mu.to_string());
      m = static_cast<std::uint64_t>(value.numerator());
    }
    if (m > 0) dominant_mult.emplace(d.mu, m);

    // Orbit size counts toward the cap.
    auto perm = d.e;
    std::sort(perm.begin(), perm.end());
    do {
      if (++table_size > limits.max_patterns)
        throw ResourceError("Freudenthal table exceeded " + std::to_string(limits.max_patterns) + " weights");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  WeightMultiplicityTable table(lambda);
  for (const auto& d : dominant) {
    const auto m = dominant_mult.count(d.mu) ? dominant_mult.at(d.mu) : 0;
    if (m == 0) continue;
    auto perm = d.e;
    std::sort(perm.begin(), perm.end());
    do {
      table.add(from_e_coords(perm), m);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return table;
}

LaurentPoly character_at_k2rho(const WeightMultiplicityTable& table, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("character sign must be +1 or -1");
  LaurentPoly ch;
  for (const auto& [mu, m] : table.entries()) ch.add_term(sign * two_rho_pairing(mu), m);
  return ch;
}

LaurentPoly char_at_k2rho(int rank, const Weight& lambda, int sign, const OracleLimits& limits) {
  if (sign != 1 && sign != -1) throw DomainError("character sign must be +1 or -1");
  return character_at_k2rho(multiplicities_gt(rank, lambda, limits), sign);
}

}  // namespace qspec
