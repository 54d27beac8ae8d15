#include "germforge/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "germforge/errors.hpp"

namespace germforge {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingContext::RingContext(std::vector<std::string> names, MonomialOrder order) {
  if (names.size() > kMaxVars)
    throw DomainError("ring has " + std::to_string(names.size()) + " variables; at most " +
                      std::to_string(kMaxVars) + " supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names), order});
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  const auto& ns = data_->names;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] == name) return i;
  return std::nullopt;
}

std::size_t RingContext::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw DomainError("variable '" + std::string(name) + "' is not declared in the ring");
}

RingContext RingContext::with_order(MonomialOrder order) const {
  return RingContext(data_->names, order);
}

std::string RingContext::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += data_->names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool RingContext::operator==(const RingContext& other) const {
  if (data_ == other.data_) return true;
  return data_->names == other.data_->names && data_->order == other.data_->order;
}

std::string fresh_name(const std::string& stem, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace germforge
