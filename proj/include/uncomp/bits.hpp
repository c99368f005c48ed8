#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace uncomp {

using BigNat = boost::multiprecision::cpp_int;

// Finite string over {0,1}, stored as ASCII '0'/'1'.  Ordering is
// quasi-lexicographic: shorter strings first, then lexicographic.
class BitString {
 public:
  BitString() = default;

  // Throws std::invalid_argument on characters other than '0' and '1'.
  static BitString parse(std::string_view text);

  // The m-th string in quasi-lexicographic order; string(0) is empty.
  static BitString from_index(std::uint64_t m);

  // Bits of `value`, most significant first, padded to `length`.
  static BitString from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }

  void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
  void append(const BitString& other) { bits_ += other.bits_; }

  BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }
  BitString suffix(std::size_t from) const { return BitString(bits_.substr(from)); }
  bool is_prefix_of(const BitString& other) const;

  const std::string& str() const { return bits_; }
  std::string_view view() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

  friend BitString operator+(BitString a, const BitString& b) {
    a.append(b);
    return a;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

using Program = BitString;

// Position of `s` in quasi-lexicographic order: 2^|s| - 1 + value(s).
BigNat quasi_lex_index(const BitString& s);

}  // namespace uncomp
