#include "digest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace rcaspace::tools {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 0x0F];
  }
  return out;
}

} // namespace rcaspace::tools
