#include "config.hpp"

#include <fstream>
#include <set>

#include "coxeter/error.hpp"

namespace coxwb {

using coxeter::Generator;
using coxeter::Order;

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  return out;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    parts.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::size_t parse_rank(std::string_view digits, std::string_view name) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != digits.npos)
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  return std::stoul(std::string(digits));
}

Order parse_order(const nlohmann::json& entry) {
  if (entry.is_string()) {
    if (entry.get<std::string>() == "inf") return Order::infinity();
    throw ConfigError("order entries must be integers or \"inf\", got \"" +
                      entry.get<std::string>() + "\"");
  }
  if (entry.is_number_unsigned() && entry.get<std::uint64_t>() <= 1'000'000)
    return Order(entry.get<std::uint32_t>());
  throw ConfigError("order entries must be positive integers or \"inf\", got " + entry.dump());
}

}  // namespace

Generator SystemConfig::generator(std::string_view text) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == text) return static_cast<Generator>(i);
  throw ConfigError("unknown generator '" + std::string(text) + "' in system " + name);
}

coxeter::Word SystemConfig::parse_word(std::string_view text) const {
  coxeter::Word w;
  for (auto part : split(text)) w.push_back(generator(part));
  return w;
}

coxeter::GenSet SystemConfig::parse_subset(std::string_view text) const {
  coxeter::GenSet s;
  for (auto part : split(text)) s.insert(generator(part));
  return s;
}

nlohmann::json SystemConfig::names(std::span<const Generator> word) const {
  auto out = nlohmann::json::array();
  for (Generator g : word) out.push_back(generators.at(g));
  return out;
}

nlohmann::json SystemConfig::names(coxeter::GenSet subset) const {
  const auto members = subset.members();
  return names(members);
}

SystemConfig preset(std::string_view name) {
  using namespace coxeter::presets;
  auto make = [&](coxeter::CoxeterMatrix m, std::vector<std::string> gens = {}) {
    if (gens.empty()) gens = letters(m.rank());
    return SystemConfig{std::string(name), std::move(gens), std::move(m)};
  };
  if (name == "G1") return make(g1(), {"s0", "t0", "t1"});
  if (name == "tilde-A2") return make(affine_a2());
  if (name == "H3") return make(type_h3());
  if (name == "H4") return make(type_h4());
  if (name == "F4") return make(type_f4());
  if (name.starts_with("I2(") && name.ends_with(")")) {
    const auto arg = name.substr(3, name.size() - 4);
    if (arg == "inf") return make(dihedral(Order::infinity()));
    const std::size_t m = parse_rank(arg, name);
    if (m < 2) throw ConfigError("I2(m) needs m >= 2");
    return make(dihedral(Order(static_cast<std::uint32_t>(m))));
  }
  if (!name.empty() && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    const std::size_t rank = parse_rank(name.substr(1), name);
    if (rank < 1 || rank > coxeter::kMaxRank) throw ConfigError("preset rank out of range");
    if (name[0] == 'A') return make(type_a(rank));
    if (name[0] == 'B' && rank >= 2) return make(type_b(rank));
    if (name[0] == 'D' && rank >= 4) return make(type_d(rank));
  }
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (try A2, A3, B3, H3, I2(7), I2(inf), tilde-A2, G1)");
}

std::vector<std::string> preset_names() {
  return {"A<n>", "B<n>", "D<n>", "F4", "H3", "H4", "I2(<m>|inf)", "tilde-A2", "G1"};
}

SystemConfig parse_system(const nlohmann::json& j, std::string fallback_name) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("orders"))
    throw ConfigError("a system needs \"generators\" and \"orders\"");
  SystemConfig config{j.value("name", fallback_name), {}, coxeter::presets::type_a(0)};
  std::set<std::string> unique;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw ConfigError("generator names must be strings");
    if (!unique.insert(g.get<std::string>()).second)
      throw ConfigError("duplicate generator name '" + g.get<std::string>() + "'");
    config.generators.push_back(g.get<std::string>());
  }
  std::vector<std::vector<Order>> raw;
  for (const auto& row : j.at("orders")) {
    if (!row.is_array()) throw ConfigError("\"orders\" must be an array of rows");
    auto& r = raw.emplace_back();
    for (const auto& entry : row) r.push_back(parse_order(entry));
  }
  if (raw.size() != config.generators.size())
    throw ConfigError("\"orders\" has " + std::to_string(raw.size()) + " rows for " +
                      std::to_string(config.generators.size()) + " generators");
  config.matrix = coxeter::validate_matrix(raw);
  return config;
}

std::vector<SystemConfig> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<SystemConfig> out;
  if (j.is_object() && j.contains("systems")) {
    std::size_t i = 0;
    for (const auto& s : j.at("systems")) out.push_back(parse_system(s, "system" + std::to_string(i++)));
  } else {
    out.push_back(parse_system(j, path));
  }
  return out;
}

nlohmann::json to_json(const SystemConfig& config) {
  auto orders = nlohmann::json::array();
  for (const auto& row : config.matrix.table()) {
    auto r = nlohmann::json::array();
    for (Order m : row)
      if (m.is_infinite())
        r.push_back("inf");
      else
        r.push_back(m.value());
    orders.push_back(std::move(r));
  }
  return {{"name", config.name}, {"generators", config.generators}, {"orders", orders}};
}

}  // namespace coxwb
