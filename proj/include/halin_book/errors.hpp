#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace halin_book {

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An exact search was asked to run beyond its configured size guard.
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input did not describe a valid Halin graph; one entry per violated invariant.
class InvalidHalin : public std::runtime_error {
public:
  explicit InvalidHalin(std::vector<std::string> issues);

  const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
  std::vector<std::string> issues_;
};

/// A JSON document could not be parsed or refers to unknown labels.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The constructive embedder produced something it could not certify.
/// `instance` is a self-contained JSON description for bug reports.
class ConstructionFailure : public std::runtime_error {
public:
  ConstructionFailure(const std::string& what, std::string instance)
      : std::runtime_error(what), instance_(std::move(instance)) {}

  const std::string& instance() const noexcept { return instance_; }

private:
  std::string instance_;
};

}  // namespace halin_book
