// Copyright 2026 The sdnfp Authors.
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


#ifndef SDNFP_ERRORS_H_
#define SDNFP_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace sdnfp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scenario or command-line configuration. `field` names the
/// offending key path (e.g. "scenarios[2].trains").
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptySamples : public Error {
 public:
  EmptySamples() : Error("empty sample population") {}
  explicit EmptySamples(const std::string& what) : Error(what) {}
};

class DegenerateVariance : public Error {
 public:
  DegenerateVariance() : Error("population has fewer than 2 samples or zero variance") {}
};

class FitFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace sdnfp

#endif  // SDNFP_ERRORS_H_
