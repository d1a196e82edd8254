#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "srmwa/model.hpp"

namespace srmwa {

/// Per-agent attention stocks plus per-item owner counts.
///
/// Items are stored as dense ids: regular item k (1-based) has id k-1, the
/// advertised item has id n_items. Each agent's stock occupies `capacity`
/// consecutive slots; a per-agent position table makes membership tests and
/// replacements O(1). Slot order carries no meaning.
class MarketState {
 public:
  using ItemId = std::uint32_t;

  /// Builds a state from explicit stocks, one list of distinct dense ids per agent.
  /// Throws InvalidArgument when a stock has the wrong size, a duplicate, or an
  /// out-of-range id.
  MarketState(std::int64_t n_items, std::int64_t capacity,
              const std::vector<std::vector<ItemId>>& stocks);

  std::int64_t n_agents() const noexcept { return n_agents_; }
  std::int64_t n_items() const noexcept { return n_items_; }
  std::int64_t capacity() const noexcept { return capacity_; }
  std::uint64_t recommendations_done() const noexcept { return recommendations_done_; }

  ItemId advertised_id() const noexcept { return static_cast<ItemId>(n_items_); }
  ItemId id_of(ItemRef item) const;
  ItemRef ref_of(ItemId id) const;

  std::span<const ItemId> stock(std::int64_t agent) const {
    return {stocks_.data() + agent * capacity_, static_cast<std::size_t>(capacity_)};
  }
  ItemId item_at(std::int64_t agent, std::int64_t slot) const {
    return stocks_[static_cast<std::size_t>(agent * capacity_ + slot)];
  }

  bool owns(std::int64_t agent, ItemId item) const {
    return slot_of_[static_cast<std::size_t>(agent * row_ + item)] >= 0;
  }
  bool owns(std::int64_t agent, ItemRef item) const { return owns(agent, id_of(item)); }

  std::int64_t owner_count(ItemId item) const { return owner_counts_[item]; }
  std::int64_t owner_count(ItemRef item) const { return owner_count(id_of(item)); }
  /// Owner counts indexed by dense id (regular items first, advertised last).
  std::span<const std::int64_t> owner_counts() const { return owner_counts_; }

  /// Puts `incoming` into the given slot of `agent`, evicting what was there.
  /// Pre: the agent does not already own `incoming`.
  void replace(std::int64_t agent, std::int64_t slot, ItemId incoming) {
    const auto pos = static_cast<std::size_t>(agent * capacity_ + slot);
    const ItemId outgoing = stocks_[pos];
    slot_of_[static_cast<std::size_t>(agent * row_ + outgoing)] = -1;
    slot_of_[static_cast<std::size_t>(agent * row_ + incoming)] = static_cast<std::int32_t>(slot);
    stocks_[pos] = incoming;
    --owner_counts_[outgoing];
    ++owner_counts_[incoming];
  }

  void count_recommendation() noexcept { ++recommendations_done_; }

  /// Recomputes owner counts and the position table from the stocks and
  /// compares them with the incrementally maintained copies.
  bool consistent() const;

  bool operator==(const MarketState&) const = default;

 private:
  std::int64_t n_agents_;
  std::int64_t n_items_;
  std::int64_t capacity_;
  std::int64_t row_;  // n_items_ + 1
  std::vector<ItemId> stocks_;
  std::vector<std::int32_t> slot_of_;
  std::vector<std::int64_t> owner_counts_;
  std::uint64_t recommendations_done_ = 0;
};

}  // namespace srmwa
