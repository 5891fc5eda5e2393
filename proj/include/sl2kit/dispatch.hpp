#pragma once

#include "sl2kit/errors.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sl2kit {

// Exit classes of the command-line front end.
enum class ExitClass : int { Ok = 0, UsageError = 1, DomainError = 2, CheckFailed = 3 };

struct Response {
    bool ok = true;
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> diagnostics;
    ExitClass exit_class = ExitClass::Ok;
    nlohmann::json error;  // {"code", "class", "message", "witness"?} when !ok

    nlohmann::json to_json() const;
};

ExitClass exit_class_of(ErrorCode code);

// Routes {"command": name, ...payload} to the matching operation. Never
// throws; failures come back as error responses.
Response dispatch(const nlohmann::json& request);

// Command names accepted by dispatch.
const std::vector<std::string>& command_names();

}  // namespace sl2kit
