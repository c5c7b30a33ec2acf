#pragma once

#include <string>
#include <string_view>

namespace mmcwpa {

/// Decodes UTF-8 into Unicode scalar values. Each byte of a malformed
/// sequence (overlong forms, surrogates, truncation) becomes U+FFFD.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view units);

}  // namespace mmcwpa
