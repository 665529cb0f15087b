#include "vartable.hpp"

#include <set>

namespace ultk {

bool VariableTable::is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!alpha(name[i]) && !digit(name[i])) return false;
  }
  return true;
}

VariableTable::VariableTable(std::vector<std::string> names, std::vector<std::uint32_t> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) {
    throw ArgError("variable table: name/weight count mismatch");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) {
      throw ArgError("variable name '" + names_[i] + "' is not a valid identifier");
    }
    if (!seen.insert(names_[i]).second) {
      throw ArgError("duplicate variable name '" + names_[i] + "'");
    }
    if (weights_[i] == 0) {
      throw ArgError("variable '" + names_[i] + "' has weight 0; weights must be positive");
    }
  }
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VariableTable VariableTable::extended(const std::string& name, std::uint32_t weight) const {
  auto names = names_;
  auto weights = weights_;
  names.push_back(name);
  weights.push_back(weight);
  return VariableTable(std::move(names), std::move(weights));
}

std::string VariableTable::fresh_name(const std::string& hint) const {
  if (!index_of(hint)) return hint;
  for (int i = 0;; ++i) {
    std::string candidate = hint + "_" + std::to_string(i);
    if (!index_of(candidate)) return candidate;
  }
}

}  // namespace ultk
