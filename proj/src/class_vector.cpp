// SPDX-License-Identifier: Apache-2.0

#include "trinom/class_vector.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace trinom {

ClassLabel parse_class(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A':
        return ClassLabel::A;
      case 'B':
        return ClassLabel::B;
      case 'C':
        return ClassLabel::C;
      case 'D':
        return ClassLabel::D;
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown class '" + std::string(text) + "' (expected A, B, C or D)");
}

}  // namespace trinom
