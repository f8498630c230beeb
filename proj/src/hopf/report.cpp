#include "bhh/hopf/report.hpp"

namespace bhh {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void Report::not_applicable(std::string name, std::string why) {
  checks_.push_back({std::move(name), Status::NotApplicable, std::move(why)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.status, c.detail});
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return false;
  return true;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::summary() const {
  std::string s;
  for (const auto& c : checks_) {
    s += std::string(status_name(c.status)) + "  " + c.name;
    if (!c.detail.empty()) s += "  (" + c.detail + ")";
    s += "\n";
  }
  return s;
}

}  // namespace bhh
