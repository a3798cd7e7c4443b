#pragma once

#include <stdexcept>
#include <string>

namespace flagvec {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FLAGVEC_DEFINE_ERROR(name) \
  class name : public error {      \
   public:                         \
    using error::error;            \
  }

FLAGVEC_DEFINE_ERROR(invalid_params);
FLAGVEC_DEFINE_ERROR(limit_exceeded);
FLAGVEC_DEFINE_ERROR(face_not_in_lattice);
FLAGVEC_DEFINE_ERROR(missing_entry);
FLAGVEC_DEFINE_ERROR(incomplete_basis);
FLAGVEC_DEFINE_ERROR(dimension_mismatch);
FLAGVEC_DEFINE_ERROR(unsupported_dimension);
FLAGVEC_DEFINE_ERROR(not_eulerian);
FLAGVEC_DEFINE_ERROR(degree_mismatch);
FLAGVEC_DEFINE_ERROR(parse_error);

#undef FLAGVEC_DEFINE_ERROR

}  // namespace flagvec
