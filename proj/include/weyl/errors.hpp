// Copyright 2026 The weylmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace weyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad HNF triple, weights that
/// do not sum to one, mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An HNF triple that none of the three subgroup types covers.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// A map eigenvalue fell below the invertibility threshold. Carries the
/// offending phase point v = (i, j) and the time (NaN when not known).
class NoninvertibleError : public Error {
 public:
  NoninvertibleError(int i, int j, int d, double t, const std::string& what)
      : Error(what), i_(i), j_(j), d_(d), t_(t) {}

  int i() const { return i_; }
  int j() const { return j_; }
  int d() const { return d_; }
  double t() const { return t_; }

 private:
  int i_, j_, d_;
  double t_;
};

/// A closed-form expression hit a vanishing denominator.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// An inverse-DFT rate kept an imaginary part above tolerance.
class ResidueError : public Error {
 public:
  using Error::Error;
};

}  // namespace weyl
