#include "akr/state.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "akr/errors.hpp"
#include "akr/hash.hpp"

namespace akr {

WalkState::WalkState(const GridGeometry& geometry)
    : geom_(geometry), amps_(geometry.basis_size(), 0.0) {}

double WalkState::squared_norm() const {
  double sum = 0.0;
  for (double a : amps_) sum += a * a;
  return sum;
}

double WalkState::norm_error() const { return std::abs(squared_norm() - 1.0); }

bool operator==(const WalkState& a, const WalkState& b) {
  return a.geom_ == b.geom_ && a.amps_ == b.amps_;
}

WalkState uniform_state(const GridGeometry& geometry) {
  WalkState s(geometry);
  const double amp = 1.0 / std::sqrt(static_cast<double>(geometry.basis_size()));
  for (std::size_t i = 0; i < s.size(); ++i) s.data()[i] = amp;
  return s;
}

double max_abs_difference(const WalkState& a, const WalkState& b) {
  double worst = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t m = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double d = std::abs(pa[i] - pb[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

void write_snapshot(std::ostream& out, const WalkState& state, long long t,
                    std::uint64_t marked_hash) {
  out << "akrwalk-state 1\n";
  out << "n " << state.geometry().side() << "\n";
  out << "t " << t << "\n";
  out << "marked " << to_hex(marked_hash) << "\n";
  char buf[64];
  for (double a : state.amplitudes()) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", a);
    out << buf;
  }
  if (!out) throw IoError("snapshot write failed");
}

Snapshot read_snapshot(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "akrwalk-state" || version != 1) {
    throw IoError("not an akrwalk state snapshot");
  }
  std::string key;
  int n = 0;
  long long t = 0;
  std::string hash_hex;
  if (!(in >> key >> n) || key != "n") throw IoError("snapshot header: missing n");
  if (!(in >> key >> t) || key != "t") throw IoError("snapshot header: missing t");
  if (!(in >> key >> hash_hex) || key != "marked") throw IoError("snapshot header: missing marked hash");

  Snapshot snap{WalkState(GridGeometry(n)), t, std::stoull(hash_hex, nullptr, 16)};
  for (std::size_t i = 0; i < snap.state.size(); ++i) {
    if (!(in >> snap.state.data()[i])) {
      throw IoError("snapshot truncated at amplitude " + std::to_string(i));
    }
  }
  return snap;
}

}  // namespace akr
