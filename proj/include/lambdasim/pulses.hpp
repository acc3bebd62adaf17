#pragma once

#include <memory>
#include <variant>
#include <vector>

namespace lambdasim {

/// Time-dependent Rabi-frequency envelope. Amplitudes are angular
/// frequencies in rad/ns, times in ns on the scenario clock.
///
/// Envelopes are immutable value objects; evaluation is pure and
/// non-negative for all t.
class PulseEnvelope {
 public:
  struct Constant {
    double level;
    bool operator==(const Constant&) const = default;
  };

  /// Gaussian of the Rabi amplitude; fwhm_ns is the FWHM of the
  /// amplitude itself, not of the intensity.
  struct Gaussian {
    double peak;
    double center_ns;
    double fwhm_ns;
    bool operator==(const Gaussian&) const = default;
  };

  /// Holds the inner envelope value at cutoff_ns and ramps it to exactly
  /// zero over ramp_ns with a half-Gaussian profile. Two envelopes
  /// truncated with the same cutoff and ramp keep their amplitude ratio
  /// frozen through the turn-off.
  struct Truncated {
    std::shared_ptr<const PulseEnvelope> inner;
    double cutoff_ns;
    double ramp_ns;
    bool operator==(const Truncated& other) const;
  };

  struct Scaled {
    std::shared_ptr<const PulseEnvelope> inner;
    double factor;
    bool operator==(const Scaled& other) const;
  };

  struct Sum {
    std::vector<PulseEnvelope> parts;
    bool operator==(const Sum&) const = default;
  };

  using Shape = std::variant<Constant, Gaussian, Truncated, Scaled, Sum>;

  static PulseEnvelope constant(double level);
  static PulseEnvelope gaussian(double peak, double center_ns, double fwhm_rabi_ns);
  static PulseEnvelope truncated(PulseEnvelope inner, double cutoff_ns, double ramp_ns);
  static PulseEnvelope scaled(PulseEnvelope inner, double factor);
  static PulseEnvelope sum(std::vector<PulseEnvelope> parts);

  /// Rabi amplitude at time t, rad/ns.
  double operator()(double t_ns) const;

  const Shape& shape() const { return shape_; }
  bool operator==(const PulseEnvelope& other) const { return shape_ == other.shape_; }

 private:
  explicit PulseEnvelope(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

/// FWHM of a Gaussian Rabi amplitude given the FWHM of the corresponding
/// intensity profile (amplitude goes as the square root of intensity,
/// which widens the Gaussian by sqrt(2)).
double intensity_fwhm_to_rabi_fwhm(double fwhm_intensity_ns);

/// Pump/Stokes pair for fractional STIRAP: a long early Stokes Gaussian
/// and a short late pump Gaussian, both cut off together so the
/// pump/Stokes ratio is finite and frozen during and after turn-off.
struct StirapPair {
  PulseEnvelope pump;
  PulseEnvelope stokes;
  double frozen_ratio;  // pump/Stokes amplitude ratio held from cutoff on
};

StirapPair fractional_stirap_pair(double peak_pump, double peak_stokes,
                                  double fwhm_pump_ns, double fwhm_stokes_ns,
                                  double pump_center_ns, double stokes_advance_ns,
                                  double cutoff_ns, double ramp_ns);

}  // namespace lambdasim
