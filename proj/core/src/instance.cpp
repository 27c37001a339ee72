#include "fairdiv/instance.hpp"

#include <stdexcept>

namespace fairdiv {

Instance::Instance(std::vector<std::vector<int>> valuations)
    : valuations_(std::move(valuations)) {
  if (valuations_.empty()) throw std::invalid_argument("instance needs at least one agent");
  num_goods_ = static_cast<int>(valuations_[0].size());
  for (const auto& row : valuations_) {
    if (static_cast<int>(row.size()) != num_goods_)
      throw std::invalid_argument("valuation rows have inconsistent lengths");
    for (int v : row) {
      if (v != 0 && v != 1) throw std::invalid_argument("valuation entries must be 0 or 1");
    }
  }
}

std::vector<int> Instance::liked_goods(int agent) const {
  std::vector<int> goods;
  for (int g = 0; g < num_goods_; ++g)
    if (likes(agent, g)) goods.push_back(g);
  return goods;
}

std::vector<int> Instance::likers(int good) const {
  std::vector<int> agents;
  for (int i = 0; i < num_agents(); ++i)
    if (likes(i, good)) agents.push_back(i);
  return agents;
}

bool Instance::is_valued(int good) const {
  for (int i = 0; i < num_agents(); ++i)
    if (likes(i, good)) return true;
  return false;
}

std::vector<int> Instance::valued_goods() const {
  std::vector<int> goods;
  for (int g = 0; g < num_goods_; ++g)
    if (is_valued(g)) goods.push_back(g);
  return goods;
}

int Instance::num_valued_goods() const { return static_cast<int>(valued_goods().size()); }

}  // namespace fairdiv
