#include "geoflow/operators.hpp"

namespace geoflow {

PeriodicField lie_bracket(const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "lie_bracket");
  return multiply(u, derivative(v)) - multiply(derivative(u), v);
}

PeriodicField bilinear_b(SobolevOrder k, const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "bilinear_b");
  // A_k commutes with d/dx, so A_k(u_x) = (A_k u)_x.
  const PeriodicField au = apply_inertia(k, u);
  PeriodicField inner = multiply(derivative(v), au);
  inner *= 2.0;
  inner += multiply(v, derivative(au));
  return -invert_inertia(k, inner);
}

PeriodicField q_operator(SobolevOrder k, const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "q_operator");
  PeriodicField sum = multiply(derivative(u), v);
  sum += multiply(u, derivative(v));
  sum += bilinear_b(k, u, v);
  sum += bilinear_b(k, v, u);
  return 0.5 * std::move(sum);
}

PeriodicField theta_operator(SobolevOrder k, const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "theta_operator");
  const PeriodicField ux = derivative(u);
  const PeriodicField vx = derivative(v);
  const PeriodicField au = apply_inertia(k, u);
  const PeriodicField av = apply_inertia(k, v);

  PeriodicField first = multiply(vx, au) + multiply(ux, av);
  PeriodicField second = multiply(v, derivative(au)) + multiply(u, derivative(av));
  PeriodicField local = multiply(v, ux) + multiply(u, vx);

  PeriodicField out = invert_inertia(k, first);
  out += 0.5 * invert_inertia(k, second);
  out -= 0.5 * std::move(local);
  return out;
}

PeriodicField transport_rhs_symmetric(SobolevOrder k, const PeriodicField& u,
                                      const PeriodicField& v) {
  require_same_grid(u, v, "transport_rhs_symmetric");
  PeriodicField sum = multiply(v, derivative(u));
  sum -= multiply(derivative(v), u);
  sum += bilinear_b(k, u, v);
  sum += bilinear_b(k, v, u);
  return 0.5 * std::move(sum);
}

PeriodicField transport_rhs(SobolevOrder k, const PeriodicField& u, const PeriodicField& v) {
  PeriodicField out = theta_operator(k, u, v);
  out += multiply(u, derivative(v));
  return -std::move(out);
}

}  // namespace geoflow
