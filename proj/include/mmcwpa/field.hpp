#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mmcwpa {

/// Minimal comparison unit: one Unicode scalar value.
using Unit = char32_t;
using Units = std::u32string;
using UnitsView = std::u32string_view;

/// An immutable string viewed as a sequence of minimal units.
class Field {
 public:
  Field() = default;
  explicit Field(Units units) : units_(std::move(units)) {}

  UnitsView units() const noexcept { return units_; }
  std::size_t length() const noexcept { return units_.size(); }
  bool empty() const noexcept { return units_.empty(); }

  std::string to_utf8() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Units units_;
};

/// Splits UTF-8 text into code points. Comparison is exact: no case folding
/// or normalization, and spaces count as units.
Field make_field(std::string_view text);

}  // namespace mmcwpa
