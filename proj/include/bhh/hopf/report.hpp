#pragma once

#include <string>
#include <vector>

namespace bhh {

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s);

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;  // counterexample or reason
};

/// Ordered list of named checks.
class Report {
 public:
  void add(std::string name, bool ok, std::string detail = {});
  void not_applicable(std::string name, std::string why);
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;  // no failures
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace bhh
