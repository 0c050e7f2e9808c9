#pragma once

#include <cmath>
#include <string>

#include "gsqg/errors.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

enum class DatumKind { GaussianBump, ModulatedPacket, TwoMode };

struct DatumSpec {
  DatumKind kind = DatumKind::GaussianBump;
  double sigma = 4.0;
  double x0 = 0.0;
  double carrier = 12.0;  // ModulatedPacket only
  double xi1 = 0.5;       // TwoMode only
  double xi2 = 0.75;
};

inline const char* datum_name(DatumKind k) {
  switch (k) {
    case DatumKind::GaussianBump: return "GaussianBump";
    case DatumKind::ModulatedPacket: return "ModulatedPacket";
    case DatumKind::TwoMode: return "TwoMode";
  }
  return "?";
}

// localized data must sit well inside the box so the periodic images are
// below roundoff; six sigmas of clearance keeps the tail under 1e-8
inline bool datum_fits(const Grid& g, const DatumSpec& d) {
  if (d.kind == DatumKind::TwoMode) return true;
  return std::abs(d.x0) + 6.0 * d.sigma <= g.L;
}

// snap a requested wavenumber onto the grid so the mode is exactly periodic
inline double snap_mode(const Grid& g, double xi) {
  double dxi = M_PI / g.L;
  double k = std::round(xi / dxi);
  if (k == 0.0) k = 1.0;
  return k * dxi;
}

inline Field build_datum(const Grid& g, const DatumSpec& d, double epsilon) {
  switch (d.kind) {
    case DatumKind::GaussianBump:
      return dealias_truncate(Field::sample(g, [&](double x) {
        double z = (x - d.x0) / d.sigma;
        return epsilon * std::exp(-0.5 * z * z);
      }));
    case DatumKind::ModulatedPacket:
      return dealias_truncate(Field::sample(g, [&](double x) {
        double z = (x - d.x0) / d.sigma;
        return epsilon * std::exp(-0.5 * z * z) * std::cos(d.carrier * (x - d.x0));
      }));
    case DatumKind::TwoMode: {
      double k1 = snap_mode(g, d.xi1);
      double k2 = snap_mode(g, d.xi2);
      return dealias_truncate(Field::sample(
          g, [&](double x) { return epsilon * (std::cos(k1 * x) + std::cos(k2 * x)); }));
    }
  }
  throw Error("unknown datum kind");
}

}  // namespace gsqg
