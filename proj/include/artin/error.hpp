#pragma once

#include <stdexcept>
#include <string>

namespace artin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violations in the linear-algebra substrate.
struct FieldMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct InvalidField : Error {
  using Error::Error;
};

// Pipeline-level failures that abort rather than re-descend.
struct ZeroCorner : Error {
  using Error::Error;
};
struct RelationsFailed : Error {
  RelationsFailed(size_t i, size_t j, size_t k, size_t l)
      : Error("matrix unit relation failed at (" + std::to_string(i) + "," + std::to_string(j) +
              ")x(" + std::to_string(k) + "," + std::to_string(l) + ")"),
        i(i), j(j), k(k), l(l) {}
  size_t i, j, k, l;
};

struct TooLarge : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace artin
