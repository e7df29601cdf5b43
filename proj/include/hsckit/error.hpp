#pragma once

#include <stdexcept>
#include <string>

namespace hsckit {

/// Base class for domain errors. `name()` is the stable identifier reported
/// by the command line tool.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define HSCKIT_DEFINE_ERROR(Type)                                              \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(#Type, what) {}             \
  }

HSCKIT_DEFINE_ERROR(InadmissibleRank);
HSCKIT_DEFINE_ERROR(NodeOutOfRange);
HSCKIT_DEFINE_ERROR(DimensionMismatch);
HSCKIT_DEFINE_ERROR(NotUnitary);
HSCKIT_DEFINE_ERROR(FrameConstraintViolated);
HSCKIT_DEFINE_ERROR(RegimeViolation);
HSCKIT_DEFINE_ERROR(NotSurface);
HSCKIT_DEFINE_ERROR(MissingChernNumbers);
HSCKIT_DEFINE_ERROR(FormatError);

#undef HSCKIT_DEFINE_ERROR

/// Raised when a tensor fails the Einstein condition; carries the spread of
/// the Ricci eigenvalues.
class NotEinstein : public Error {
public:
  NotEinstein(const std::string& what, double anisotropy)
      : Error("NotEinstein", what), anisotropy_(anisotropy) {}

  double anisotropy() const noexcept { return anisotropy_; }

private:
  double anisotropy_;
};

} // namespace hsckit
