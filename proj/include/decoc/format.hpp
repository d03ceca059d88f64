#ifndef DECOC_FORMAT_HPP
#define DECOC_FORMAT_HPP

#include <charconv>
#include <string>

namespace decoc {

/// Shortest round-trip decimal form of a double; deterministic, locale-free.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace decoc

#endif  // DECOC_FORMAT_HPP
