#ifndef DQP_BUNDLED_HPP
#define DQP_BUNDLED_HPP

#include "dqp/algebra_file.hpp"

namespace dqp {

/// Built-in worked examples. None of them is trusted axiomatically: each
/// carries the list of checks that certify it, and the test suites run
/// those checks before using the example as an oracle.
///
///   qp2: k[t]/(t^2), zero bracket, tau = 1. Both sides of the modified
///        Jacobi identity vanish, so it is quasi-Poisson.
///   qp3: k[t]/(t^3), {{t,t}} = (t^2 (x) 1 - 1 (x) t^2)/2, tau = 1.
///        Quasi-Poisson but not Poisson.
///   dp3: k[t]/(t^3), {{t,t}} = t (x) 1 - 1 (x) t, tau = 0. Double Poisson.
AlgebraInput make_qp2();
AlgebraInput make_qp3();
AlgebraInput make_dp3();

AlgebraInput make_bundled(const std::string& name);  // by one of the names above

}  // namespace dqp

#endif
