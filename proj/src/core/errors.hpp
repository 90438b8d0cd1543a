// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_ERRORS_HPP
#define DYONMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyonmap {

/// The radial amplitude has a zero at (or numerically at) r: its logarithmic
/// derivative is singular there and the mapping equation cannot be evaluated.
class node_error : public std::runtime_error {
 public:
  explicit node_error(double r)
      : std::runtime_error("radial node at r = " + std::to_string(r)), r_(r) {}
  double r() const { return r_; }

 private:
  double r_;
};

/// The mass distribution reached a nonpositive value where the equation has a
/// 1/M singularity.
class mass_singularity_error : public std::runtime_error {
 public:
  explicit mass_singularity_error(double r)
      : std::runtime_error("nonpositive mass at r = " + std::to_string(r)), r_(r) {}
  double r() const { return r_; }

 private:
  double r_;
};

/// Configuration file / key-value errors, with a 1-based line number when the
/// source was a file (0 for programmatic sets).
class config_error : public std::runtime_error {
 public:
  config_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace dyonmap

#endif
