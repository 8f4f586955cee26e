#pragma once

#include <stdexcept>
#include <string>

namespace hwrbench {

// Raised for malformed or inconsistent input data (files, logs, numeric
// arguments). The CLI maps it to exit status 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hwrbench
