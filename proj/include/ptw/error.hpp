// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ptw {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Working precision was not enough to keep an exactly-valid invariant
/// (|U_n| < 1, positive-definite pivots, ...). `index()` names the offending n
/// when there is one, otherwise -1.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, int index = -1)
      : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// ODE integration failed: step-size collapse or solution blow-up.
class IntegrationFailure : public Error {
 public:
  IntegrationFailure(const std::string& what, double where)
      : Error(what), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

/// A requested quantity lies outside what a grid resolves.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace ptw
