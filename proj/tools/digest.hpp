#ifndef RCASPACE_TOOLS_DIGEST_HPP
#define RCASPACE_TOOLS_DIGEST_HPP

#include <string>
#include <string_view>

namespace rcaspace::tools {

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

} // namespace rcaspace::tools

#endif
