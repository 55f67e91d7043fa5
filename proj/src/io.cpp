#include "sqpack/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqpack {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

Scalar parse_at(const std::string& token, int line, const char* what) {
  try {
    return parse_scalar(token);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + token + "'");
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  InstanceFile f;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.find_first_of(" \t") != std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected one side, got '" + s + "'");
    Scalar a = parse_at(s, line, "side");
    if (!(a > 0) || a > 1) throw ParseError("line " + std::to_string(line) + ": side " + s + " is not in (0,1]");
    f.sides.push_back(a);
    f.lines.push_back(line);
  }
  return f;
}

std::string format_instance(const std::vector<Scalar>& sides) {
  std::string out;
  for (const auto& a : sides) out += to_string(a) + "\n";
  return out;
}

std::string placements_csv(const Packing& p) {
  std::string out = "id,side,x,y\n";
  for (const auto& pl : p.placements())
    out += std::to_string(pl.item.id) + "," + to_fraction(pl.side()) + "," + to_fraction(pl.x) + "," + to_fraction(pl.y) +
           "\n";
  return out;
}

std::vector<Placement> parse_placements_csv(const std::string& text) {
  std::vector<Placement> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto f = split(s, ',');
    if (!header) {
      if (f != std::vector<std::string>{"id", "side", "x", "y"})
        throw ParseError("line " + std::to_string(line) + ": expected header id,side,x,y");
      header = true;
      continue;
    }
    if (f.size() != 4) throw ParseError("line " + std::to_string(line) + ": expected 4 fields");
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(f[0], &used);
      if (used != f[0].size()) throw std::invalid_argument(f[0]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line) + ": bad id '" + f[0] + "'");
    }
    Scalar a = parse_at(f[1], line, "side");
    if (!(a > 0) || a > 1) throw ParseError("line " + std::to_string(line) + ": side " + f[1] + " is not in (0,1]");
    out.push_back(Placement{SquareItem{id, a}, parse_at(f[2], line, "x"), parse_at(f[3], line, "y")});
  }
  if (!header) throw ParseError("missing header id,side,x,y");
  return out;
}

std::string render_svg(const Packing& p, const SvgOptions& opt) {
  const double s = opt.scale, m = 10;
  double h = std::max(1.0, to_double(packing_height(p)));
  for (const auto& r : opt.hatched) h = std::max(h, to_double(r.top()));
  const double w = s + 2 * m, ht = h * s + 2 * m;
  auto X = [&](const Scalar& x) { return num(m + to_double(x) * s); };
  auto Y = [&](const Scalar& y) { return num(m + (h - to_double(y)) * s); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(ht)
      << "\" viewBox=\"0 0 " << num(w) << " " << num(ht) << "\">\n";
  if (!opt.hatched.empty()) {
    out << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\">"
           "<path d=\"M0,6 L6,0\" stroke=\"#c0392b\" stroke-width=\"1\"/></pattern></defs>\n";
  }
  out << "<rect x=\"" << num(m) << "\" y=\"" << num(m) << "\" width=\"" << num(s) << "\" height=\"" << num(h * s)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& r : opt.hatched)
    out << "<rect class=\"hole\" x=\"" << X(r.left()) << "\" y=\"" << Y(r.top()) << "\" width=\"" << num(to_double(r.width()) * s)
        << "\" height=\"" << num(to_double(r.height()) * s) << "\" fill=\"url(#hatch)\" stroke=\"none\"/>\n";
  for (const auto& pl : p.placements()) {
    double a = to_double(pl.side()) * s;
    out << "<rect class=\"square\" x=\"" << X(pl.x) << "\" y=\"" << Y(pl.top()) << "\" width=\"" << num(a) << "\" height=\""
        << num(a) << "\" fill=\"#9ecae1\" stroke=\"#08306b\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(m + to_double(pl.x) * s + a / 2) << "\" y=\"" << num(m + (h - to_double(pl.y)) * s - a / 2)
        << "\" font-size=\"" << num(std::clamp(a / 3, 4.0, 16.0))
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << pl.item.id << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<Scalar> gen_random(std::mt19937_64& rng, int n, const Scalar& lo, const Scalar& hi) {
  const long grid = 1L << 20;
  Scalar l = lo * grid, h = hi * grid;
  BigInt klo = boost::multiprecision::numerator(l) / boost::multiprecision::denominator(l);
  if (Scalar(klo) < l) ++klo;
  BigInt khi = boost::multiprecision::numerator(h) / boost::multiprecision::denominator(h);
  if (klo < 1) klo = 1;
  if (khi > grid) khi = grid;
  if (khi < klo) throw std::invalid_argument("gen_random: no grid point in [min, max]");
  const std::uint64_t a = klo.convert_to<std::uint64_t>(), span = khi.convert_to<std::uint64_t>() - a + 1;
  std::vector<Scalar> out;
  for (int i = 0; i < n; ++i) out.push_back(Scalar(static_cast<long>(a + rng() % span)) / grid);
  return out;
}

std::vector<Scalar> gen_random(int n, std::uint64_t seed, const Scalar& lo, const Scalar& hi) {
  std::mt19937_64 rng(seed);
  return gen_random(rng, n, lo, hi);
}

RunStats run_stats(const Packing& p) {
  RunStats s;
  s.n = p.size();
  s.height = packing_height(p);
  for (const auto& pl : p.placements()) {
    s.area_sum += pl.side() * pl.side();
    s.max_side = std::max(s.max_side, pl.side());
  }
  Scalar lb = std::max(s.area_sum, s.max_side);
  s.ratio = lb > 0 ? s.height / lb : Scalar(0);
  return s;
}

std::string format_stats(const RunStats& s) {
  std::ostringstream out;
  out << "n " << s.n << "\n";
  out << "height " << to_string(s.height) << "\n";
  out << "area_sum " << to_string(s.area_sum) << "\n";
  out << "max_side " << to_string(s.max_side) << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(s.ratio));
  out << "ratio " << to_string(s.ratio) << " (" << buf << ")\n";
  if (s.hole_sum) out << "hole_sum " << to_string(*s.hole_sum) << "\n";
  if (s.max_charge) out << "max_charge " << to_string(*s.max_charge) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace sqpack
