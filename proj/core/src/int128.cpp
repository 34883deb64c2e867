#include "adp/int128.hpp"

#include <algorithm>
#include <cctype>

namespace adp {

std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

int128 parse_int128(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size()) throw DomainError("parse_int128: empty input");
  unsigned __int128 u = 0;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 127;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("parse_int128: invalid digit in '" + s + "'");
    unsigned d = static_cast<unsigned>(s[i] - '0');
    if (u > (limit - d) / 10) throw CapacityError("parse_int128: value out of range");
    u = u * 10 + d;
  }
  if (!neg && u >= limit) throw CapacityError("parse_int128: value out of range");
  if (neg && u > limit) throw CapacityError("parse_int128: value out of range");
  if (neg) {
    if (u == limit) return -static_cast<int128>(limit - 1) - 1;
    return -static_cast<int128>(u);
  }
  return static_cast<int128>(u);
}

}  // namespace adp
