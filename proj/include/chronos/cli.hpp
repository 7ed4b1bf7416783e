#pragma once
#include <ostream>
#include <string>
#include <vector>
namespace chronos::cli { int run(const std::vector<std::string>&, std::ostream&, std::ostream&); }
