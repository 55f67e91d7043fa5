#pragma once

#include "sqpack/packing.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqpack {

// Malformed input text; the message names the line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  std::vector<Scalar> sides;
  std::vector<int> lines;  // source line of each side
};

// One side per line as p/q or a finite decimal; '#' starts a comment.
InstanceFile parse_instance(const std::string& text);
std::string format_instance(const std::vector<Scalar>& sides);

// Header id,side,x,y and one exact row per placement.
std::string placements_csv(const Packing& p);
std::vector<Placement> parse_placements_csv(const std::string& text);

struct SvgOptions {
  std::vector<Rect> hatched;  // hole cells to overlay
  double scale = 400;         // pixels per unit
};
std::string render_svg(const Packing& p, const SvgOptions& opt = {});

// Sides k / 2^20 with k uniform over the grid points in [lo, hi].
std::vector<Scalar> gen_random(std::mt19937_64& rng, int n, const Scalar& lo, const Scalar& hi);
std::vector<Scalar> gen_random(int n, std::uint64_t seed, const Scalar& lo, const Scalar& hi);

struct RunStats {
  std::size_t n = 0;
  Scalar height;
  Scalar area_sum;
  Scalar max_side;
  Scalar ratio;  // height / max(area_sum, max_side)
  std::optional<Scalar> hole_sum;    // BottomLeft: total hole area after closing
  std::optional<Scalar> max_charge;  // BottomLeft: largest square charge; slot: largest |F_i| / a_i^2
};
RunStats run_stats(const Packing& p);
std::string format_stats(const RunStats& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace sqpack
