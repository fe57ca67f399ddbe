#pragma once

#include <string>

namespace metjet {

// Shortest decimal that round-trips to the same double (CSV contract).
std::string fmt_double(double v);

}  // namespace metjet
