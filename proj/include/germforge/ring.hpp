#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germforge/monomial.hpp"

namespace germforge {

/// Variable names plus a monomial order. Cheap to copy; the underlying data is
/// shared and immutable.
class RingContext {
 public:
  RingContext(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const MonomialOrder& order() const { return data_->order; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  RingContext with_order(MonomialOrder order) const;

  int compare(const Monomial& a, const Monomial& b) const {
    return data_->order.compare(a, b, data_->names.size());
  }

  std::string monomial_to_string(const Monomial& m) const;

  /// Same names in the same order, same monomial order.
  bool operator==(const RingContext& other) const;
  bool operator!=(const RingContext& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<std::string> names;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

/// Identifier grammar for ring variables: [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

/// A name starting with `stem` that is not in `taken`.
std::string fresh_name(const std::string& stem, const std::vector<std::string>& taken);

}  // namespace germforge
