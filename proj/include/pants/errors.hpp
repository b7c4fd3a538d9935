#pragma once

#include <stdexcept>
#include <string>

namespace pants {

// Argument outside the domain of a function (e.g. a dilogarithm argument
// outside [0,1], a non-positive length, a coordinate too close to 0 or 1).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested tolerance is below what the selected precision mode can deliver.
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested (boundary, waist) lengths admit no symmetric trace marking.
class inadmissible_shape : public domain_error {
 public:
  using domain_error::domain_error;
};

// McShane sums require a cusped torus (boundary trace exactly -2).
class not_cusped : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace pants
