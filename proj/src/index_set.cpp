#include "gammasym/index_set.hpp"

#include <charconv>
#include <stdexcept>

namespace gammasym {

namespace {

IndexSet::Mask bit_for(int i) {
  if (i < 1 || i > kMaxRank) {
    throw std::invalid_argument("index " + std::to_string(i) + " outside [1, " +
                                std::to_string(kMaxRank) + "]");
  }
  return IndexSet::Mask{1} << (i - 1);
}

}  // namespace

IndexSet IndexSet::of(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) m |= bit_for(i);
  return from_mask(m);
}

IndexSet IndexSet::of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= bit_for(i);
  return from_mask(m);
}

IndexSet IndexSet::full(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " outside [0, " +
                                std::to_string(kMaxRank) + "]");
  }
  if (rank == kMaxRank) return from_mask(~Mask{0});
  return from_mask((Mask{1} << rank) - 1);
}

IndexSet IndexSet::parse(std::string_view text) {
  Mask m = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (!token.empty()) {
      int value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || end != token.data() + token.size()) {
        throw std::invalid_argument("malformed index '" + std::string(token) + "'");
      }
      m |= bit_for(value);
    } else if (comma != text.size() || pos != 0) {
      throw std::invalid_argument("empty entry in index list '" + std::string(text) + "'");
    }
    pos = comma + 1;
  }
  return from_mask(m);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

IndexSet IndexSet::without(int i) const {
  return from_mask(mask_ & ~bit_for(i));
}

}  // namespace gammasym
