#include "qspec/root_system.hpp"

#include <algorithm>
#include <sstream>

#include "qspec/errors.hpp"

namespace qspec {

Weight Weight::fundamental(int rank, int i) {
  if (i < 1 || i > rank) {
    throw DomainError("fundamental weight index " + std::to_string(i) + " out of range for rank " +
                      std::to_string(rank));
  }
  Weight w = zero(rank);
  w(i) = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

Weight Weight::operator+(const Weight& other) const {
  if (rank() != other.rank()) throw DomainError("weight rank mismatch");
  Weight out = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) out.coords_[k] += other.coords_[k];
  return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(value_type factor) const {
  Weight out = *this;
  for (auto& c : out.coords_) c *= factor;
  return out;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

RootSystem::RootSystem(int rank) : rank_(rank), roots_(qspec::positive_roots(rank)) {}

int RootSystem::cartan_entry(int i, int j) const {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw DomainError("simple root index out of range");
  Weight w = Weight::zero(rank_);
  for (int j = 1; j <= rank_; ++j) w(j) = cartan_entry(i, j);
  return w;
}

Weight RootSystem::root_weight(const PositiveRoot& r) const {
  Weight w = Weight::zero(rank_);
  for (int k = r.i; k < r.j; ++k) w = w + simple_root(k);
  return w;
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank_) {
    throw DomainError("weight " + w.to_string() + " has " + std::to_string(w.rank()) +
                      " coordinates, expected " + std::to_string(rank_));
  }
}

std::vector<PositiveRoot> positive_roots(int rank) {
  if (rank < 1) throw DomainError("invalid rank " + std::to_string(rank) + " (need rank >= 1)");
  std::vector<PositiveRoot> roots;
  roots.reserve(static_cast<std::size_t>(rank) * (rank + 1) / 2);
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) roots.push_back({i, j});
  return roots;
}

std::int64_t pair_weight_root(const Weight& lambda, const PositiveRoot& r) {
  if (r.i < 1 || r.j <= r.i || r.j > lambda.rank() + 1) throw DomainError("root does not fit the weight's rank");
  std::int64_t sum = 0;
  for (int k = r.i; k < r.j; ++k) sum += lambda(k);
  return sum;
}

std::int64_t rho_pairing(const PositiveRoot& r) { return r.j - r.i; }

std::int64_t two_rho_pairing(const Weight& mu) {
  const std::int64_t l = mu.rank();
  std::int64_t e = 0;
  for (std::int64_t j = 1; j <= l; ++j) e += j * (l + 1 - j) * mu(static_cast<int>(j));
  return e;
}

Weight dual_weight(const Weight& lambda) {
  auto c = lambda.coords();
  std::reverse(c.begin(), c.end());
  return Weight(std::move(c));
}

}  // namespace qspec
