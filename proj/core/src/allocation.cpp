#include "fairdiv/allocation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fairdiv {

DeterministicAllocation::DeterministicAllocation(std::vector<int> assignee, int num_agents)
    : assignee_(std::move(assignee)) {
  for (int a : assignee_) {
    if (a != kUnassigned && (a < 0 || a >= num_agents))
      throw std::invalid_argument("allocation references an agent out of range");
  }
}

std::optional<int> DeterministicAllocation::holder(int good) const {
  if (assignee_[good] == kUnassigned) return std::nullopt;
  return assignee_[good];
}

std::vector<int> DeterministicAllocation::bundle(int agent) const {
  std::vector<int> goods;
  for (int g = 0; g < num_goods(); ++g)
    if (assignee_[g] == agent) goods.push_back(g);
  return goods;
}

int DeterministicAllocation::bundle_size(int agent) const {
  return static_cast<int>(std::count(assignee_.begin(), assignee_.end(), agent));
}

FractionalAllocation::FractionalAllocation(std::vector<std::vector<Rational>> shares)
    : shares_(std::move(shares)) {
  const int m = num_goods();
  for (const auto& row : shares_) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("share rows have inconsistent lengths");
    for (const Rational& s : row) {
      if (s < 0 || s > 1) throw std::invalid_argument("share outside [0,1]");
    }
  }
  for (int g = 0; g < m; ++g) {
    if (column_sum(g) > 1) throw std::invalid_argument("good allocated more than once in total");
  }
}

Rational FractionalAllocation::column_sum(int good) const {
  Rational total(0);
  for (const auto& row : shares_) total += row[good];
  return total;
}

bool FractionalAllocation::is_integral() const {
  for (const auto& row : shares_)
    for (const Rational& s : row)
      if (!fairdiv::is_integral(s)) return false;
  return true;
}

DeterministicAllocation FractionalAllocation::to_deterministic() const {
  DeterministicAllocation alloc(num_goods());
  for (int g = 0; g < num_goods(); ++g) {
    for (int i = 0; i < num_agents(); ++i) {
      const Rational& s = shares_[i][g];
      if (s == 0) continue;
      if (s != 1 || alloc.is_assigned(g))
        throw std::logic_error("share matrix is not a deterministic allocation");
      alloc.assign(g, i);
    }
  }
  return alloc;
}

FractionalAllocation FractionalAllocation::from_deterministic(
    const DeterministicAllocation& alloc, int num_agents) {
  FractionalAllocation frac(num_agents, alloc.num_goods());
  for (int g = 0; g < alloc.num_goods(); ++g)
    if (alloc.is_assigned(g)) frac.set_share(alloc.assignee(g), g, Rational(1));
  return frac;
}

Lottery::Lottery(std::vector<Entry> support) {
  // Merge duplicate allocations, keeping first-seen order.
  std::map<std::vector<int>, std::size_t> index;
  for (auto& entry : support) {
    if (entry.probability <= 0)
      throw std::invalid_argument("lottery probabilities must be positive");
    auto [it, inserted] = index.try_emplace(entry.allocation.raw(), support_.size());
    if (inserted) {
      support_.push_back(std::move(entry));
    } else {
      support_[it->second].probability += entry.probability;
    }
  }
  Rational total(0);
  for (const auto& entry : support_) total += entry.probability;
  if (total != 1) throw std::invalid_argument("lottery probabilities must sum to exactly 1");
}

int utility(const Instance& instance, const DeterministicAllocation& alloc, int agent) {
  if (agent < 0 || agent >= instance.num_agents())
    throw std::invalid_argument("agent index out of range");
  int total = 0;
  for (int g = 0; g < instance.num_goods(); ++g)
    if (alloc.assignee(g) == agent && instance.likes(agent, g)) ++total;
  return total;
}

std::vector<int> utilities(const Instance& instance, const DeterministicAllocation& alloc) {
  std::vector<int> u(instance.num_agents(), 0);
  for (int g = 0; g < instance.num_goods(); ++g) {
    int holder = alloc.assignee(g);
    if (holder != DeterministicAllocation::kUnassigned && instance.likes(holder, g)) ++u[holder];
  }
  return u;
}

Rational utility(const Instance& instance, const FractionalAllocation& frac, int agent) {
  if (agent < 0 || agent >= instance.num_agents())
    throw std::invalid_argument("agent index out of range");
  Rational total(0);
  for (int g = 0; g < instance.num_goods(); ++g)
    if (instance.likes(agent, g)) total += frac.share(agent, g);
  return total;
}

UtilityVector utilities(const Instance& instance, const FractionalAllocation& frac) {
  UtilityVector u;
  u.reserve(instance.num_agents());
  for (int i = 0; i < instance.num_agents(); ++i) u.push_back(utility(instance, frac, i));
  return u;
}

UtilityVector to_utility_vector(const std::vector<int>& integer_utilities) {
  UtilityVector u;
  u.reserve(integer_utilities.size());
  for (int v : integer_utilities) u.emplace_back(v);
  return u;
}

LeximinOrder leximin_compare(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("leximin comparison needs equal-length vectors");
  UtilityVector sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (sa[k] > sb[k]) return LeximinOrder::Dominates;
    if (sa[k] < sb[k]) return LeximinOrder::Dominated;
  }
  return LeximinOrder::Equivalent;
}

LeximinOrder leximin_compare(const std::vector<int>& a, const std::vector<int>& b) {
  return leximin_compare(to_utility_vector(a), to_utility_vector(b));
}

std::strong_ordering lex_vector_compare(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("lexicographic comparison needs equal-length vectors");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return std::strong_ordering::less;
    if (a[k] > b[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_vector_compare(const std::vector<int>& a, const std::vector<int>& b) {
  return lex_vector_compare(to_utility_vector(a), to_utility_vector(b));
}

FractionalAllocation induced_fractional(const Lottery& lottery, const Instance& instance) {
  FractionalAllocation frac(instance.num_agents(), instance.num_goods());
  for (const auto& entry : lottery.support()) {
    for (int g = 0; g < instance.num_goods(); ++g) {
      int holder = entry.allocation.assignee(g);
      if (holder != DeterministicAllocation::kUnassigned)
        frac.set_share(holder, g, frac.share(holder, g) + entry.probability);
    }
  }
  return frac;
}

}  // namespace fairdiv
