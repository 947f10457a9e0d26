#pragma once

#include <stdexcept>
#include <string>

namespace modsearch {

// Bad arguments or an invalid configuration.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Dataset or CSV input could not be parsed or failed validation.
class load_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A scenario cannot produce a query for the given data.
class scenario_infeasible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace modsearch
