#pragma once

#include <cstdint>
#include <string>

namespace grpcover {

// SHA-256 of the input, as a lowercase hex digest.
std::string sha256_hex(const std::string& data);

}  // namespace grpcover
