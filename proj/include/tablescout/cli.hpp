#pragma once

#include <string>
#include <vector>

namespace tablescout::cli {

// Entry point shared by the tablescout binary and the test harness.
// Exit codes: 0 success, 1 fatal or usage error, 2 partial success.
int run(const std::vector<std::string>& args);

}  // namespace tablescout::cli
