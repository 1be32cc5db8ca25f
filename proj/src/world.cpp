#include "astp/world.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "astp/errors.hpp"

namespace astp {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::int64_t require_int(const nlohmann::json& obj, const char* key,
                         const std::string& where) {
  if (!obj.contains(key)) {
    throw FileFormatError(where + ": missing field '" + key + "'");
  }
  const auto& v = obj[key];
  if (!v.is_number_integer()) {
    throw FileFormatError(where + ": field '" + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string require_string(const nlohmann::json& obj, const char* key,
                           const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw FileFormatError(where + ": missing string field '" + key + "'");
  }
  auto s = obj[key].get<std::string>();
  if (s.empty()) {
    throw FileFormatError(where + ": field '" + key + "' must be non-empty");
  }
  return s;
}

}  // namespace

GameWorld world_from_json(const nlohmann::json& doc, std::string_view source) {
  const std::string src(source);
  if (!doc.is_object() || !doc.contains("game_items") ||
      !doc.contains("merchant_inventory")) {
    throw FileFormatError(
        src + ": expected object with 'game_items' and 'merchant_inventory'");
  }

  GameWorld world;
  std::set<std::string> ids;
  std::size_t index = 0;
  for (const auto& entry : doc["game_items"]) {
    const std::string where =
        src + ": game_items[" + std::to_string(index++) + "]";
    Item item{require_string(entry, "item_id", where),
              require_string(entry, "item_name", where)};
    if (!ids.insert(item.item_id).second) {
      throw FileFormatError(where + ": duplicate item_id '" + item.item_id +
                            "'");
    }
    world.all_items.push_back(std::move(item));
  }

  std::set<std::string> inventory_ids;
  index = 0;
  for (const auto& entry : doc["merchant_inventory"]) {
    const std::string where =
        src + ": merchant_inventory[" + std::to_string(index++) + "]";
    InventoryEntry inv;
    inv.item.item_id = require_string(entry, "item_id", where);
    inv.item.item_name = require_string(entry, "item_name", where);
    inv.price = require_int(entry, "price", where);
    inv.quantity = require_int(entry, "quantity", where);
    if (inv.price <= 0) {
      throw FileFormatError(where + ": price must be positive");
    }
    if (inv.quantity < 0) {
      throw FileFormatError(where + ": quantity must be non-negative");
    }
    if (!ids.count(inv.item.item_id)) {
      throw FileFormatError(where + ": item_id '" + inv.item.item_id +
                            "' not present in game_items");
    }
    if (!inventory_ids.insert(inv.item.item_id).second) {
      throw FileFormatError(where + ": duplicate item_id '" +
                            inv.item.item_id + "'");
    }
    world.sellable.push_back(std::move(inv));
  }
  return world;
}

GameWorld load_world(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("world: cannot open " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError("world " + path.string() + ": " + e.what());
  }
  return world_from_json(doc, path.string());
}

std::int64_t compute_total_price(std::span<const CartLine> cart) {
  std::int64_t total = 0;
  for (const auto& line : cart) {
    if (line.quantity < 0 || line.unit_price < 0) {
      throw PriceOverflowError("cart line '" + line.item_name +
                               "': negative quantity or price");
    }
    if (line.unit_price != 0 && line.quantity > kMaxExactTotal / line.unit_price) {
      throw PriceOverflowError("cart line '" + line.item_name +
                               "': product exceeds exact-integer cap");
    }
    const std::int64_t line_total = line.quantity * line.unit_price;
    if (total > kMaxExactTotal - line_total) {
      throw PriceOverflowError("cart total exceeds exact-integer cap");
    }
    total += line_total;
  }
  return total;
}

std::optional<InventoryEntry> lookup_sellable(const GameWorld& world,
                                              std::string_view name) {
  const std::string needle = lower(name);
  for (const auto& entry : world.sellable) {
    if (entry.quantity > 0 && lower(entry.item.item_name) == needle) {
      return entry;
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json game_items_json(const GameWorld& world) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& item : world.all_items) {
    arr.push_back({{"item_id", item.item_id}, {"item_name", item.item_name}});
  }
  return arr;
}

nlohmann::ordered_json merchant_inventory_json(const GameWorld& world) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& entry : world.sellable) {
    arr.push_back({{"item_id", entry.item.item_id},
                   {"item_name", entry.item.item_name},
                   {"quantity", entry.quantity},
                   {"price", entry.price}});
  }
  return arr;
}

}  // namespace astp
