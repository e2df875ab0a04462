#include "netosc/trajectory_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

void put(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out << buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string header_for(std::size_t n) {
  std::string h = "t";
  for (std::size_t i = 1; i <= n; ++i) h += ",x_" + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) h += ",v_" + std::to_string(i);
  return h;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t n = traj.n();
  out << header_for(n) << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    put(out, traj.times[k]);
    const State& s = traj.states[k];
    for (Eigen::Index i = 0; i < s.x.size(); ++i) {
      out << ',';
      put(out, s.x(i));
    }
    for (Eigen::Index i = 0; i < s.v.size(); ++i) {
      out << ',';
      put(out, s.v(i));
    }
    out << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  write_trajectory_csv(out, traj);
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path);
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "trajectory CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> head = split(line);
  if (head.size() < 3 || head.size() % 2 == 0 || head.front() != "t") {
    throw Error(ErrorCode::ParseError, "unexpected trajectory CSV header");
  }
  const std::size_t n = (head.size() - 1) / 2;
  if (line != header_for(n)) throw Error(ErrorCode::ParseError, "unexpected trajectory CSV header");

  Trajectory traj;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != 2 * n + 1) {
      throw Error(ErrorCode::ParseError, "wrong column count on line " + std::to_string(lineno));
    }
    std::vector<double> v(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const char* begin = cells[c].c_str();
      char* end = nullptr;
      v[c] = std::strtod(begin, &end);
      if (end == begin || *end != '\0') {
        throw Error(ErrorCode::ParseError, "bad number on line " + std::to_string(lineno));
      }
    }
    State s = State::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.x(static_cast<Eigen::Index>(i)) = v[1 + i];
      s.v(static_cast<Eigen::Index>(i)) = v[1 + n + i];
    }
    traj.times.push_back(v[0]);
    traj.states.push_back(std::move(s));
  }
  if (traj.states.empty()) throw Error(ErrorCode::ParseError, "trajectory CSV has no rows");
  return traj;
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_trajectory_csv(in);
}

}  // namespace netosc
