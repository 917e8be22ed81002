#include "mfc/k_param.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace mfc {

KParam KParam::parse(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "inf" || lowered == "infinity") return infinite();
  char* end = nullptr;
  const double value = std::strtod(lowered.c_str(), &end);
  if (end == lowered.c_str() || *end != '\0')
    throw std::invalid_argument("not a k value: '" + std::string(text) + "'");
  return finite(value);
}

}  // namespace mfc
