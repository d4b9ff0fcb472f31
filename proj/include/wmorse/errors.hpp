#pragma once

#include <stdexcept>
#include <string>

namespace wmorse {

enum class Errc {
  NonConvergence,
  SeedFailure,
  QuadratureFailure,
  Overflow,
  EmptySpectrum,
  IndexOutOfSpectrum,
  IncompleteSpectrum,
  InsufficientBox,
  OrderAnomaly,
  SingularShift,
  KinkPoint,
  WronskianZero,
  InadmissibleSet,
  DomainError,
  BadConfig,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wmorse
