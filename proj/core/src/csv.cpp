#include "metjet/csv.hpp"

#include <charconv>

namespace metjet {

std::string fmt_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace metjet
