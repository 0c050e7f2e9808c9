#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "gsqg/errors.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

struct Snapshot {
  Field field;
  double t = 0.0;
};

// plain text state file:
//   gsqgfield v1, <n>, <L>, <t>
//   x_0, value_0
//   ...
// %.17g round-trips doubles exactly, so write/read is bit stable
inline void write_snapshot(const std::string& path, const Field& f, double t) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw Error("cannot open snapshot for writing: " + path);
  const Grid& g = f.grid();
  std::fprintf(fp, "gsqgfield v1, %d, %.17g, %.17g\n", g.n, g.L, t);
  const auto& v = f.values();
  for (int j = 0; j < g.n; ++j) std::fprintf(fp, "%.17g, %.17g\n", g.x(j), v[j].real());
  std::fclose(fp);
}

inline Snapshot read_snapshot(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "r");
  if (!fp) throw CorruptSnapshot("cannot open snapshot: " + path);
  int version = 0, n = 0;
  double L = 0.0, t = 0.0;
  if (std::fscanf(fp, "gsqgfield v%d, %d, %lf, %lf\n", &version, &n, &L, &t) != 4) {
    std::fclose(fp);
    throw CorruptSnapshot(path + ": unrecognized header");
  }
  if (version != 1) {
    std::fclose(fp);
    throw CorruptSnapshot(path + ": unsupported version v" + std::to_string(version));
  }
  Grid g;
  try {
    g = Grid(n, L);
  } catch (const Error& e) {
    std::fclose(fp);
    throw CorruptSnapshot(path + ": bad header geometry: " + e.what());
  }
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) {
    double x = 0.0, val = 0.0;
    if (std::fscanf(fp, "%lf, %lf\n", &x, &val) != 2) {
      std::fclose(fp);
      throw CorruptSnapshot(path + ": truncated at row " + std::to_string(j) + " of " +
                            std::to_string(n));
    }
    vals[j] = val;
  }
  double extra = 0.0;
  if (std::fscanf(fp, "%lf", &extra) == 1) {
    std::fclose(fp);
    throw CorruptSnapshot(path + ": more rows than the declared length " + std::to_string(n));
  }
  std::fclose(fp);
  return {Field::from_real(g, vals), t};
}

}  // namespace gsqg
