// Machine-readable verdicts for the identity checks.

#ifndef RTHH_CHECK_REPORT_HPP
#define RTHH_CHECK_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

namespace rthh {

enum class CheckStatus { kPass, kFail, kInconclusive, kPreconditionFailed };

std::string_view status_name(CheckStatus s);
CheckStatus status_from_name(std::string_view name);

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::ordered_json witness;  // null unless the check failed or was inconclusive
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return status == CheckStatus::kPass; }

  static CheckReport pass(std::string check) { return {std::move(check), CheckStatus::kPass, nullptr}; }
  static CheckReport fail(std::string check, nlohmann::ordered_json witness) {
    return {std::move(check), CheckStatus::kFail, std::move(witness)};
  }
  static CheckReport inconclusive(std::string check, nlohmann::ordered_json witness) {
    return {std::move(check), CheckStatus::kInconclusive, std::move(witness)};
  }
  static CheckReport precondition_failed(std::string check, nlohmann::ordered_json witness) {
    return {std::move(check), CheckStatus::kPreconditionFailed, std::move(witness)};
  }

  // {"check", "status", "witness"} plus "details" when non-empty.
  nlohmann::ordered_json to_json() const;
};

// Worst status wins: fail > inconclusive > precondition-failed > pass.
CheckStatus combine(CheckStatus a, CheckStatus b);

// Folds sub-reports into a parent; the parent records each child under
// details["parts"] and takes the worst status.
void absorb(CheckReport& parent, const CheckReport& child);

}  // namespace rthh

#endif  // RTHH_CHECK_REPORT_HPP
