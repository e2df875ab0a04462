#pragma once

#include <iosfwd>
#include <string>

#include "netosc/dynamics.hpp"

namespace netosc {

/// CSV with header `t,x_1,...,x_n,v_1,...,v_n`, 12 significant digits and
/// LF line endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// Inverse of write_trajectory_csv. Throws ParseError on malformed input.
Trajectory read_trajectory_csv(std::istream& in);
Trajectory read_trajectory_csv(const std::string& path);

}  // namespace netosc
