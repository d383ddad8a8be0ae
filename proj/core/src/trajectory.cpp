#include "gdec/trajectory.hpp"

#include <stdexcept>

namespace gdec {

namespace {

void check_in_range(double t, double t_f, const char* op) {
  if (!(t >= 0.0 && t <= t_f))
    throw std::domain_error(std::string(op) + ": t outside [0, t_f]");
}

}  // namespace

SpatialVector branch_separation(double t, const SuperpositionConfig& c) {
  c.validate();
  check_in_range(t, c.t_f, "branch_separation");
  if (t <= 0.5 * c.t_f) return 2.0 * t * c.v;
  return 2.0 * (c.t_f - t) * c.v;
}

SpatialVector branch_velocity(double t, const SuperpositionConfig& c) {
  c.validate();
  check_in_range(t, c.t_f, "branch_velocity");
  if (t <= 0.5 * c.t_f) return 2.0 * c.v;
  return -2.0 * c.v;
}

}  // namespace gdec
