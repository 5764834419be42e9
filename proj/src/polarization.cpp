#include "agtaut/polarization.hpp"

#include <cctype>
#include <stdexcept>

namespace agtaut {

PolarizationType::PolarizationType(std::vector<std::uint64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("polarization type must have at least one entry");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) {
      throw std::invalid_argument("polarization type entries must be positive");
    }
    if (i > 0 && entries_[i] % entries_[i - 1] != 0) {
      throw std::invalid_argument("polarization type " + str() + " is not a divisibility chain: " +
                                  std::to_string(entries_[i - 1]) + " does not divide " +
                                  std::to_string(entries_[i]));
    }
  }
}

PolarizationType PolarizationType::parse(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) {
      throw std::invalid_argument("malformed polarization type '" + std::string(text) + "'");
    }
    if (token.size() > 18) {
      throw std::invalid_argument("polarization entry too large: " + token);
    }
    out.push_back(std::stoull(token));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    }
    if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    } else {
      throw std::invalid_argument("malformed polarization type '" + std::string(text) + "'");
    }
  }
  flush();
  return PolarizationType(std::move(out));
}

PolarizationType PolarizationType::principal(unsigned length) {
  return PolarizationType(std::vector<std::uint64_t>(length, 1));
}

BigInt PolarizationType::product() const {
  BigInt d = 1;
  for (auto x : entries_) {
    d *= BigInt(std::to_string(x), 10);
  }
  return d;
}

bool PolarizationType::is_principal() const {
  for (auto x : entries_) {
    if (x != 1) {
      return false;
    }
  }
  return true;
}

PolarizationType PolarizationType::complementary(unsigned g) const {
  if (2 * length() > g) {
    throw std::invalid_argument("complementary type needs 2u <= g");
  }
  std::vector<std::uint64_t> out(g - 2 * length(), 1);
  out.insert(out.end(), entries_.begin(), entries_.end());
  return PolarizationType(std::move(out));
}

PolarizationType PolarizationType::doubled(unsigned g) const {
  if (2 * length() > g) {
    throw std::invalid_argument("double type needs 2u <= g");
  }
  std::vector<std::uint64_t> out(g - 2 * length(), 1);
  for (auto x : entries_) {
    out.push_back(x);
    out.push_back(x);
  }
  return PolarizationType(std::move(out));
}

PolarizationType PolarizationType::padded(unsigned g) const {
  if (length() > g) {
    throw std::invalid_argument("polarization type " + str() + " is longer than g = " +
                                std::to_string(g));
  }
  std::vector<std::uint64_t> out(g - length(), 1);
  out.insert(out.end(), entries_.begin(), entries_.end());
  return PolarizationType(std::move(out));
}

std::string PolarizationType::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace agtaut
