// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Adaptive embedded Runge-Kutta-Fehlberg 7(8) integration sampled on a fixed
// output grid (ascending or descending), for any floating scalar.

#pragma once

#include <array>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ptw/error.hpp"

// Quad-precision numbers expose a self-referential value_type; stop the
// odeint value-type walk there.
namespace boost::numeric::odeint::detail {
template <>
struct extract_value_type<boost::multiprecision::cpp_bin_float_quad, void> {
  using type = boost::multiprecision::cpp_bin_float_quad;
};
}  // namespace boost::numeric::odeint::detail

namespace ptw::detail {

template <class T, std::size_t N, class Rhs>
std::vector<std::array<T, N>> integrate_on_grid(Rhs&& rhs, std::array<T, N> x0,
                                                const std::vector<T>& times, T tol,
                                                std::size_t max_steps = 2000000) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<T, N>;
  using Stepper = odeint::runge_kutta_fehlberg78<State, T, State, T>;

  std::vector<State> out;
  out.reserve(times.size());
  T last_time = times.front();
  auto observer = [&](const State& x, T time) {
    for (const T& v : x) {
      if (!std::isfinite(static_cast<double>(v)))
        throw IntegrationFailure("solution blew up near " + std::to_string(static_cast<double>(time)),
                                 static_cast<double>(time));
    }
    last_time = time;
    out.push_back(x);
  };
  const T span = times.back() - times.front();
  T dt = span / T(static_cast<double>(std::max<std::size_t>(times.size(), 2) * 4));
  try {
    odeint::integrate_times(odeint::make_controlled(tol, tol, Stepper()), rhs, x0, times.begin(),
                            times.end(), dt, observer, odeint::max_step_checker(max_steps));
  } catch (const IntegrationFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw IntegrationFailure(std::string("step-size collapse after t = ") +
                                 std::to_string(static_cast<double>(last_time)) + ": " + e.what(),
                             static_cast<double>(last_time));
  }
  return out;
}

}  // namespace ptw::detail
