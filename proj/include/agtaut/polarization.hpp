#pragma once

#include "agtaut/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace agtaut {

// A divisibility chain d_1 | d_2 | ... | d_u of positive integers.
class PolarizationType {
 public:
  // Throws std::invalid_argument for an empty list, a zero entry, or a
  // broken divisibility chain.
  explicit PolarizationType(std::vector<std::uint64_t> entries);

  // "1,2,4" (whitespace tolerated).
  static PolarizationType parse(std::string_view text);
  static PolarizationType principal(unsigned length);

  std::vector<std::uint64_t> const& entries() const { return entries_; }
  unsigned length() const { return static_cast<unsigned>(entries_.size()); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  // d = d_1 * ... * d_u
  BigInt product() const;
  bool is_principal() const;

  // (1^{g-2u}, d_1, .., d_u); needs 2u <= g.
  PolarizationType complementary(unsigned g) const;
  // (1^{g-2u}, d_1, d_1, .., d_u, d_u); needs 2u <= g.
  PolarizationType doubled(unsigned g) const;
  // Leading 1s added up to length g; throws if already longer.
  PolarizationType padded(unsigned g) const;

  std::string str() const;
  friend bool operator==(PolarizationType const&, PolarizationType const&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

}  // namespace agtaut
