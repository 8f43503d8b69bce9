#include "rthh/check_report.hpp"

#include <stdexcept>

namespace rthh {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
    case CheckStatus::kPreconditionFailed:
      return "precondition-failed";
  }
  return "fail";
}

CheckStatus status_from_name(std::string_view name) {
  if (name == "pass") return CheckStatus::kPass;
  if (name == "fail") return CheckStatus::kFail;
  if (name == "inconclusive") return CheckStatus::kInconclusive;
  if (name == "precondition-failed") return CheckStatus::kPreconditionFailed;
  throw std::invalid_argument("unknown check status: " + std::string(name));
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = std::string(status_name(status));
  j["witness"] = witness;
  if (!details.empty()) j["details"] = details;
  return j;
}

namespace {
int severity(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return 0;
    case CheckStatus::kPreconditionFailed:
      return 1;
    case CheckStatus::kInconclusive:
      return 2;
    case CheckStatus::kFail:
      return 3;
  }
  return 3;
}
}  // namespace

CheckStatus combine(CheckStatus a, CheckStatus b) { return severity(a) >= severity(b) ? a : b; }

void absorb(CheckReport& parent, const CheckReport& child) {
  parent.details["parts"].push_back(child.to_json());
  CheckStatus next = combine(parent.status, child.status);
  if (next != parent.status) parent.witness = child.witness;
  parent.status = next;
}

}  // namespace rthh
