#pragma once

#include <string>
#include <vector>

namespace regkit {
namespace cli {

// Exit codes: 0 success / expected verdict, 1 Fails verdict, 2 usage or IO
// error. --expect {hold,fail,level:X} flips the semantics for negative tests.
int run(const std::vector<std::string>& argv);
int run(int argc, char** argv);

}  // namespace cli
}  // namespace regkit
