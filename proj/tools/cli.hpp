#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffrep::cli {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kCatalogMiss = 3 };

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliffrep::cli
