#include "srmwa/market_state.hpp"

#include <string>

namespace srmwa {

MarketState::MarketState(std::int64_t n_items, std::int64_t capacity,
                         const std::vector<std::vector<ItemId>>& stocks)
    : n_agents_(static_cast<std::int64_t>(stocks.size())),
      n_items_(n_items),
      capacity_(capacity),
      row_(n_items + 1) {
  if (n_items <= 0 || capacity <= 0 || capacity > n_items + 1) {
    throw Error(ErrorCode::InvalidArgument, "market state: bad item count or capacity");
  }
  stocks_.reserve(stocks.size() * static_cast<std::size_t>(capacity));
  slot_of_.assign(stocks.size() * static_cast<std::size_t>(row_), -1);
  owner_counts_.assign(static_cast<std::size_t>(row_), 0);

  for (std::size_t agent = 0; agent < stocks.size(); ++agent) {
    const auto& stock = stocks[agent];
    if (static_cast<std::int64_t>(stock.size()) != capacity) {
      throw Error(ErrorCode::InvalidArgument,
                  "market state: agent " + std::to_string(agent) + " stock size differs from capacity");
    }
    for (std::size_t slot = 0; slot < stock.size(); ++slot) {
      const ItemId item = stock[slot];
      if (item > static_cast<ItemId>(n_items)) {
        throw Error(ErrorCode::InvalidArgument, "market state: item id out of range");
      }
      auto& pos = slot_of_[agent * static_cast<std::size_t>(row_) + item];
      if (pos >= 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "market state: agent " + std::to_string(agent) + " holds a duplicate item");
      }
      pos = static_cast<std::int32_t>(slot);
      stocks_.push_back(item);
      ++owner_counts_[item];
    }
  }
}

MarketState::ItemId MarketState::id_of(ItemRef item) const {
  if (item.is_advertised()) return advertised_id();
  if (item.index() > static_cast<std::size_t>(n_items_)) {
    throw Error(ErrorCode::InvalidArgument, "item index exceeds item count");
  }
  return static_cast<ItemId>(item.index() - 1);
}

ItemRef MarketState::ref_of(ItemId id) const {
  if (id == advertised_id()) return ItemRef::advertised();
  return ItemRef::regular(static_cast<std::size_t>(id) + 1);
}

bool MarketState::consistent() const {
  std::vector<std::int64_t> counts(owner_counts_.size(), 0);
  for (std::int64_t agent = 0; agent < n_agents_; ++agent) {
    for (std::int64_t slot = 0; slot < capacity_; ++slot) {
      const ItemId item = item_at(agent, slot);
      if (slot_of_[static_cast<std::size_t>(agent * row_ + item)] != slot) return false;
      ++counts[item];
    }
    std::int64_t held = 0;
    for (std::int64_t item = 0; item < row_; ++item) {
      if (slot_of_[static_cast<std::size_t>(agent * row_ + item)] >= 0) ++held;
    }
    if (held != capacity_) return false;
  }
  return counts == owner_counts_;
}

}  // namespace srmwa
