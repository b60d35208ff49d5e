#ifndef HW4K_SERIALIZE_HPP
#define HW4K_SERIALIZE_HPP

#include <string>

#include "hw4k/types.hpp"

namespace hw4k {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string certificate_to_text(const Certificate& cert);
Certificate certificate_from_text(const std::string& text);

/// Dispatch on content: JSON when the first non-space byte is '{'.
Certificate certificate_from_string(const std::string& text);

}  // namespace hw4k

#endif
