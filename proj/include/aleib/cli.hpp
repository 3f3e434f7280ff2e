#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace aleib {

// Exit 0 when every clause holds, 1 when a checked identity fails, 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace aleib
