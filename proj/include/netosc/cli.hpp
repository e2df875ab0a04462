#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "netosc/graph.hpp"

namespace netosc::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kVerifyFailed = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Vector mini-syntax used for initial states and power profiles:
///   ""                    all zeros
///   "1,0,0,0"             one value per node
///   "e:1=4" / "e:1=4,34=-1"   sparse, 1-based node ids
///   anything else         file with one value per line (or comma separated)
/// Throws ParseError or InvalidArgument.
Vector parse_vector_spec(const std::string& spec, std::size_t n);

/// Resolves --graph: the path itself if it exists, else relative to the
/// directory named by NETOSC_DATA_DIR.
std::string resolve_data_path(const std::string& path);

}  // namespace netosc::cli
