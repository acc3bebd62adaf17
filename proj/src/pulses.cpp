#include "lambdasim/pulses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lambdasim {

namespace {

constexpr double kFourLn2 = 2.772588722239781;  // 4 ln 2

// Half-Gaussian turn-off with sigma = ramp/6, shifted and rescaled so the
// factor is exactly 1 at the cutoff and exactly 0 at cutoff + ramp.
double ramp_factor(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  const double kExponent = 18.0;  // (ramp/sigma)^2 / 2 with sigma = ramp/6
  const double floor = std::exp(-kExponent);
  const double g = std::exp(-kExponent * u * u);
  const double f = (g - floor) / (1.0 - floor);
  return f > 0.0 ? f : 0.0;
}

}  // namespace

bool PulseEnvelope::Truncated::operator==(const Truncated& other) const {
  return cutoff_ns == other.cutoff_ns && ramp_ns == other.ramp_ns &&
         *inner == *other.inner;
}

bool PulseEnvelope::Scaled::operator==(const Scaled& other) const {
  return factor == other.factor && *inner == *other.inner;
}

PulseEnvelope PulseEnvelope::constant(double level) {
  if (level < 0.0)
    throw std::invalid_argument("PulseEnvelope::constant: level must be >= 0, got " +
                                std::to_string(level));
  return PulseEnvelope(Constant{level});
}

PulseEnvelope PulseEnvelope::gaussian(double peak, double center_ns, double fwhm_rabi_ns) {
  if (peak < 0.0)
    throw std::invalid_argument("PulseEnvelope::gaussian: peak must be >= 0, got " +
                                std::to_string(peak));
  if (!(fwhm_rabi_ns > 0.0))
    throw std::invalid_argument("PulseEnvelope::gaussian: fwhm must be > 0, got " +
                                std::to_string(fwhm_rabi_ns));
  return PulseEnvelope(Gaussian{peak, center_ns, fwhm_rabi_ns});
}

PulseEnvelope PulseEnvelope::truncated(PulseEnvelope inner, double cutoff_ns, double ramp_ns) {
  if (!(ramp_ns > 0.0))
    throw std::invalid_argument("PulseEnvelope::truncated: ramp must be > 0, got " +
                                std::to_string(ramp_ns));
  return PulseEnvelope(Truncated{
      std::make_shared<const PulseEnvelope>(std::move(inner)), cutoff_ns, ramp_ns});
}

PulseEnvelope PulseEnvelope::scaled(PulseEnvelope inner, double factor) {
  if (factor < 0.0)
    throw std::invalid_argument("PulseEnvelope::scaled: factor must be >= 0, got " +
                                std::to_string(factor));
  return PulseEnvelope(Scaled{
      std::make_shared<const PulseEnvelope>(std::move(inner)), factor});
}

PulseEnvelope PulseEnvelope::sum(std::vector<PulseEnvelope> parts) {
  if (parts.empty())
    throw std::invalid_argument("PulseEnvelope::sum: needs at least one part");
  return PulseEnvelope(Sum{std::move(parts)});
}

double PulseEnvelope::operator()(double t_ns) const {
  struct Eval {
    double t;
    double operator()(const Constant& c) const { return c.level; }
    double operator()(const Gaussian& g) const {
      const double u = (t - g.center_ns) / g.fwhm_ns;
      return g.peak * std::exp(-kFourLn2 * u * u);
    }
    double operator()(const Truncated& tr) const {
      if (t >= tr.cutoff_ns + tr.ramp_ns) return 0.0;
      if (t <= tr.cutoff_ns) return (*tr.inner)(t);
      const double held = (*tr.inner)(tr.cutoff_ns);
      return held * ramp_factor((t - tr.cutoff_ns) / tr.ramp_ns);
    }
    double operator()(const Scaled& s) const { return s.factor * (*s.inner)(t); }
    double operator()(const Sum& s) const {
      double total = 0.0;
      for (const auto& part : s.parts) total += part(t);
      return total;
    }
  };
  return std::visit(Eval{t_ns}, shape_);
}

double intensity_fwhm_to_rabi_fwhm(double fwhm_intensity_ns) {
  if (!(fwhm_intensity_ns > 0.0))
    throw std::invalid_argument("intensity_fwhm_to_rabi_fwhm: input must be > 0, got " +
                                std::to_string(fwhm_intensity_ns));
  return fwhm_intensity_ns * std::sqrt(2.0);
}

StirapPair fractional_stirap_pair(double peak_pump, double peak_stokes,
                                  double fwhm_pump_ns, double fwhm_stokes_ns,
                                  double pump_center_ns, double stokes_advance_ns,
                                  double cutoff_ns, double ramp_ns) {
  if (!(stokes_advance_ns > 0.0))
    throw std::invalid_argument("fractional_stirap_pair: stokes_advance must be > 0");
  if (cutoff_ns < pump_center_ns)
    throw std::invalid_argument("fractional_stirap_pair: cutoff must not precede the pump center");
  if (!(ramp_ns > 0.0))
    throw std::invalid_argument("fractional_stirap_pair: ramp must be > 0");

  auto pump_inner = PulseEnvelope::gaussian(peak_pump, pump_center_ns, fwhm_pump_ns);
  auto stokes_inner = PulseEnvelope::gaussian(peak_stokes, pump_center_ns - stokes_advance_ns,
                                              fwhm_stokes_ns);
  const double pump_at_cutoff = pump_inner(cutoff_ns);
  const double stokes_at_cutoff = stokes_inner(cutoff_ns);
  if (!(stokes_at_cutoff > 0.0))
    throw std::invalid_argument(
        "fractional_stirap_pair: Stokes amplitude vanishes at the cutoff; "
        "the frozen pump/Stokes ratio would be undefined");

  return StirapPair{
      PulseEnvelope::truncated(std::move(pump_inner), cutoff_ns, ramp_ns),
      PulseEnvelope::truncated(std::move(stokes_inner), cutoff_ns, ramp_ns),
      pump_at_cutoff / stokes_at_cutoff};
}

}  // namespace lambdasim
