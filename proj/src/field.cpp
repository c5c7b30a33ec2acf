#include "mmcwpa/field.hpp"

#include "mmcwpa/utf8.hpp"

namespace mmcwpa {

std::string Field::to_utf8() const { return encode_utf8(units_); }

Field make_field(std::string_view text) { return Field(decode_utf8(text)); }

}  // namespace mmcwpa
