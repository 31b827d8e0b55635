#pragma once

#include "geoflow/spectral.hpp"

namespace geoflow {

// Bracket of right-invariant vector fields: [u,v] = -(u_x v - u v_x).
PeriodicField lie_bracket(const PeriodicField& u, const PeriodicField& v);

// B_k(u,v) = -A_k^{-1}(2 v_x A_k(u) + v A_k(u_x)), the operator satisfying
// <B_k(u,v), w>_k = <u, [v,w]>_k.
PeriodicField bilinear_b(SobolevOrder k, const PeriodicField& u, const PeriodicField& v);

// Q_k(u,v) = (u_x v + u v_x + B_k(u,v) + B_k(v,u)) / 2; the Christoffel-type
// term of the derivation along curves.
PeriodicField q_operator(SobolevOrder k, const PeriodicField& u, const PeriodicField& v);

// Theta_k(u,v) = A_k^{-1}[v_x A_k u + u_x A_k v]
//              + (1/2) A_k^{-1}[v A_k(u_x) + u A_k(v_x)] - (1/2)(v u_x + u v_x).
PeriodicField theta_operator(SobolevOrder k, const PeriodicField& u, const PeriodicField& v);

// Eulerian parallel-transport velocity, two algebraically equivalent routes:
//   symmetric form   v_t = (v u_x - v_x u + B_k(u,v) + B_k(v,u)) / 2
//   transport form   v_t = -u v_x - Theta_k(u,v)
PeriodicField transport_rhs_symmetric(SobolevOrder k, const PeriodicField& u,
                                      const PeriodicField& v);
PeriodicField transport_rhs(SobolevOrder k, const PeriodicField& u, const PeriodicField& v);

}  // namespace geoflow
