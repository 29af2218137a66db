#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace umacs {

// Invalid parameters / malformed inputs. The CLI maps this to exit code 2.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search that could not certify a result. CLI exit code 3.
class search_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace umacs
