#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ultk {

// Ordered list of weighted variables. The position of a name is the exponent
// slot every Monomial over this table uses, so tables are immutable.
class VariableTable {
public:
  VariableTable(std::vector<std::string> names, std::vector<std::uint32_t> weights);

  static bool is_identifier(const std::string& name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::uint32_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  // Appends a variable; used to build extended ambients (radical trick,
  // elimination, Rees variables). Returns the new table.
  VariableTable extended(const std::string& name, std::uint32_t weight) const;
  // Picks a name not present in the table, derived from `hint`.
  std::string fresh_name(const std::string& hint) const;

  bool operator==(const VariableTable& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }
  bool operator!=(const VariableTable& other) const { return !(*this == other); }

private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
};

}  // namespace ultk
