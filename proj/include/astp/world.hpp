#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace astp {

struct Item {
  std::string item_id;
  std::string item_name;
};

struct InventoryEntry {
  Item item;
  std::int64_t price = 0;     // gold; positive
  std::int64_t quantity = 0;  // non-negative
};

/// One line of the shopping cart as echoed back by the model.
struct CartLine {
  std::string item_id;
  std::string item_name;
  std::int64_t quantity = 1;    // >= 1
  std::int64_t unit_price = 0;  // gold; positive

  friend bool operator==(const CartLine&, const CartLine&) = default;
};

/// Full item catalogue plus the merchant's sellable subset. Immutable after
/// load; shareable.
struct GameWorld {
  std::vector<Item> all_items;
  std::vector<InventoryEntry> sellable;
};

/// Loads a world file: a JSON document with `game_items` and
/// `merchant_inventory` arrays, exactly the shapes injected into the
/// {game_items} / {merchant_inventory} prompt placeholders.
/// Throws FileFormatError with field diagnostics on malformed or duplicate-id
/// input.
GameWorld load_world(const std::filesystem::path& path);
GameWorld world_from_json(const nlohmann::json& doc, std::string_view source);

/// Exact integer cart total. Throws PriceOverflowError when the sum would
/// exceed 2^53-1 (corrupt input; real carts are tiny).
std::int64_t compute_total_price(std::span<const CartLine> cart);

inline constexpr std::int64_t kMaxExactTotal = 9007199254740991;  // 2^53 - 1

/// Case-insensitive exact match on item_name over entries with quantity > 0.
std::optional<InventoryEntry> lookup_sellable(const GameWorld& world,
                                              std::string_view name);

/// JSON renderings used to fill the prompt placeholders.
nlohmann::ordered_json game_items_json(const GameWorld& world);
nlohmann::ordered_json merchant_inventory_json(const GameWorld& world);

}  // namespace astp
