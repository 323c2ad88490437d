#pragma once
#include <iosfwd>
#include <string>
#include <vector>
namespace adelic {
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
}
