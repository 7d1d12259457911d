#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace fracheat::detail {

// The double-exponential rules extend their node tables lazily, so each
// thread keeps its own instance. Nested integrations use distinct slots.
template <int Slot = 0>
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(12);
  return rule;
}

template <int Slot = 0>
boost::math::quadrature::exp_sinh<double>& exp_sinh_rule() {
  thread_local boost::math::quadrature::exp_sinh<double> rule(12);
  return rule;
}

template <class F>
double gauss_kronrod(F&& f, double a, double b, double tol, double* err = nullptr) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol, err);
}

}  // namespace fracheat::detail
