#include "tendo/error.hpp"

namespace tendo {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace tendo
