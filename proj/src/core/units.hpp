#ifndef EULERSPIN_CORE_UNITS_HPP
#define EULERSPIN_CORE_UNITS_HPP

#include <string>

namespace eulerspin {

// hbar*c used for nuclear-scale energy estimates, in MeV*fm.
inline constexpr double kHbarCMevFm = 197.327;

// Gaussian-cgs constants used by the relativistic ring estimates.
inline constexpr double kHbarCgs = 1.0546e-27;  // erg*s
inline constexpr double kSpeedOfLightCgs = 2.9979e10;  // cm/s

inline constexpr double kCmPerFm = 1e-13;
inline constexpr double kErgPerMev = 1.602176634e-6;

enum class UnitMode { natural, mev_fm, cgs };

// Carrier for the two dimensional constants everything downstream needs.
// natural: hbar = c = 1. mev_fm: energies in MeV, lengths in fm, times in
// fm/c, so hbar = hbar*c numerically. cgs: Gaussian units.
struct UnitSystem {
  UnitMode mode = UnitMode::natural;
  double hbar = 1.0;
  double c = 1.0;

  static UnitSystem natural() { return {UnitMode::natural, 1.0, 1.0}; }
  static UnitSystem mev_fm() { return {UnitMode::mev_fm, kHbarCMevFm, 1.0}; }
  static UnitSystem cgs() { return {UnitMode::cgs, kHbarCgs, kSpeedOfLightCgs}; }
  static UnitSystem parse(const std::string& name);

  double hbar_c() const { return hbar * c; }
};

inline double fm_to_cm(double fm) { return fm * kCmPerFm; }
inline double cm_to_fm(double cm) { return cm / kCmPerFm; }
inline double mev_to_erg(double mev) { return mev * kErgPerMev; }
inline double erg_to_mev(double erg) { return erg / kErgPerMev; }

}  // namespace eulerspin

#endif
