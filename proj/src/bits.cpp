#include "uncomp/bits.hpp"

#include <stdexcept>

namespace uncomp {

BitString BitString::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return BitString(std::string(text));
}

BitString BitString::from_index(std::uint64_t m) {
  // string(m) is binary(m + 1) with its leading 1 removed.
  const std::uint64_t v = m + 1;
  int top = 63;
  while (top > 0 && ((v >> top) & 1u) == 0) --top;
  std::string bits;
  for (int i = top - 1; i >= 0; --i) bits.push_back(((v >> i) & 1u) ? '1' : '0');
  return BitString(std::move(bits));
}

BitString BitString::from_value(std::uint64_t value, std::size_t length) {
  std::string bits(length, '0');
  for (std::size_t i = 0; i < length && i < 64; ++i) {
    if ((value >> i) & 1u) bits[length - 1 - i] = '1';
  }
  return BitString(std::move(bits));
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const int c = a.bits_.compare(b.bits_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

BigNat quasi_lex_index(const BitString& s) {
  BigNat v = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    v <<= 1;
    if (s[i]) v += 1;
  }
  return v - 1;
}

}  // namespace uncomp
