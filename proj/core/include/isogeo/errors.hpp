#pragma once

#include <stdexcept>
#include <string>

namespace isogeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error { using Error::Error; };
struct LookupError : Error { using Error::Error; };
struct SamplingError : Error { using Error::Error; };
struct FocalPointError : Error { using Error::Error; };
struct ModelConsistencyError : Error { using Error::Error; };
struct FocalTimeError : Error { using Error::Error; };
struct StencilError : Error { using Error::Error; };
struct UndefinedEntryError : Error { using Error::Error; };
struct StructuralError : Error { using Error::Error; };

}  // namespace isogeo
