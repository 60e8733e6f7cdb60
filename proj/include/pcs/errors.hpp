/* Copyright 2026 The pcsengine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PCS_ERRORS_HPP_
#define PCS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcs {

// Exit-code contract for the CLI: ConfigError -> 2, DataError -> 3,
// BackendError -> 4. Everything else is an internal failure (1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public DataError {
 public:
  explicit UnknownLabel(const std::string& raw)
      : DataError("unknown label: \"" + raw + "\""), raw_(raw) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

class CalibrationError : public DataError {
 public:
  using DataError::DataError;
};

class UndefinedMetric : public DataError {
 public:
  using DataError::DataError;
};

class ZeroVariance : public DataError {
 public:
  using DataError::DataError;
};

class BackendError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure that persisted through the retry budget.
class BackendUnavailable : public BackendError {
 public:
  explicit BackendUnavailable(const std::string& what, std::size_t completed_cells = 0)
      : BackendError(what), completed_cells_(completed_cells) {}
  // Cells already materialized (and cached) before the failure; a rerun
  // resumes from the cache.
  std::size_t completed_cells() const { return completed_cells_; }

 private:
  std::size_t completed_cells_ = 0;
};

class MutationFailed : public BackendError {
 public:
  using BackendError::BackendError;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

class NotAvailable : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace pcs

#endif  // PCS_ERRORS_HPP_
