#include "dmult/weight.hpp"

#include <charconv>
#include <stdexcept>

#include "dmult/error.hpp"

namespace dmult {

Weight::Weight(std::initializer_list<int> coords)
    : rank_(static_cast<std::uint8_t>(coords.size())) {
  if (coords.size() > kMaxRank) throw DomainError("weight rank exceeds " + std::to_string(kMaxRank));
  int i = 0;
  for (int x : coords) c_[i++] = x;
}

Weight::Weight(std::span<const int> coords) : rank_(static_cast<std::uint8_t>(coords.size())) {
  if (coords.size() > kMaxRank) throw DomainError("weight rank exceeds " + std::to_string(kMaxRank));
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

bool Weight::is_zero() const {
  for (int x : coords())
    if (x != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(int k) {
  for (int i = 0; i < rank_; ++i) c_[i] *= k;
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

Weight parse_weight(std::string_view text) {
  std::array<int, kMaxRank> buf{};
  int n = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.starts_with('+')) tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("malformed weight '" + std::string(text) + "'");
    if (n == kMaxRank) throw ParseError("weight '" + std::string(text) + "' has too many coordinates");
    buf[n++] = value;
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return Weight(std::span<const int>(buf.data(), n));
}

}  // namespace dmult
