#pragma once

#include <stdexcept>
#include <string>

namespace tnncells {

// Error taxonomy shared by the library and the command line driver.
// The driver maps these onto process exit codes:
//   validation_error    -> 2  (rejected input: bad words, bad index sets, ...)
//   verification_error  -> 3  (an internal cross-check or golden comparison failed)
//   resource_error      -> 4  (a requested computation exceeds the built-in caps)
// numeric_domain_error marks inputs outside the supported numeric regime
// (e.g. a spectrum that is not positive real); the driver treats it as
// a validation failure.

class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class verification_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class numeric_domain_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tnncells
