#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apollo::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorEntry {
  std::string id;
  std::vector<double> center;
  double radius = 0.0;
};

/// Parsed generator file: JSON ({"dimension", "scale_exponent"?, "balls"})
/// or CSV (header id,x1..xd,r). ids unique, dimensions consistent.
struct GeneratorFile {
  std::size_t dimension = 0;
  std::optional<int> scale_exponent;  // for exact-predicate integerization
  std::vector<GeneratorEntry> balls;
};

GeneratorFile parse_generators_json(std::istream& in);
GeneratorFile parse_generators_csv(std::istream& in);

/// Dispatches on extension (.json/.csv), sniffing the first byte otherwise.
GeneratorFile load_generators(const std::string& path);

/// All numeric output carries 17 significant digits.
std::string fmt17(double v);

std::string json_escape(const std::string& s);

}  // namespace apollo::cli
