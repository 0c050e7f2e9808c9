#pragma once

#include <stdexcept>
#include <string>

namespace gsqg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct SingularMultiplier : Error {
  double xi;
  explicit SingularMultiplier(double xi_)
      : Error("multiplier not finite at xi = " + std::to_string(xi_)), xi(xi_) {}
};

struct BlockOutOfRange : Error {
  using Error::Error;
};

struct ZeroShift : Error {
  ZeroShift() : Error("difference quotient requires a nonzero shift") {}
};

struct QuadratureDiverged : Error {
  using Error::Error;
};

struct UseLogBranch : Error {
  UseLogBranch() : Error("alpha too close to 1; use the log-dispersion branch") {}
};

struct VelocityOutOfRange : Error {
  using Error::Error;
};

struct DataTooLarge : Error {
  double slope_sup;
  explicit DataTooLarge(double s)
      : Error("|phi_x| sup " + std::to_string(s) + " violates the 1/2 coercivity margin"),
        slope_sup(s) {}
};

struct BlowupDetected : Error {
  double t;
  explicit BlowupDetected(double t_)
      : Error("state left the resolvable regime at t = " + std::to_string(t_)), t(t_) {}
};

struct PacketDoesNotFit : Error {
  using Error::Error;
};

struct InsufficientSeries : Error {
  using Error::Error;
};

struct NotInScatteringRegime : Error {
  using Error::Error;
};

struct CorruptSnapshot : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace gsqg
