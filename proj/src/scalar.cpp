#include "torelli/scalar.hpp"

namespace torelli {

std::string to_string(const Scalar& value) { return value.get_str(); }

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace torelli
