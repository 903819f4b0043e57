#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace apollo::cli {

namespace {

void check_entries(const GeneratorFile& g) {
  if (g.dimension < 1) throw ParseError("dimension must be >= 1");
  if (g.balls.empty()) throw ParseError("no balls in input");
  std::set<std::string> ids;
  for (const GeneratorEntry& e : g.balls) {
    if (!ids.insert(e.id).second) throw ParseError("duplicate ball id '" + e.id + "'");
    if (e.center.size() != g.dimension)
      throw ParseError("ball '" + e.id + "' has " + std::to_string(e.center.size()) +
                       " coordinates, expected " + std::to_string(g.dimension));
    for (double c : e.center)
      if (!std::isfinite(c)) throw ParseError("ball '" + e.id + "' has a non-finite coordinate");
    if (!std::isfinite(e.radius))
      throw ParseError("ball '" + e.id + "' has a non-finite radius");
  }
}

}  // namespace

GeneratorFile parse_generators_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  GeneratorFile g;
  try {
    g.dimension = j.at("dimension").get<std::size_t>();
    if (j.contains("scale_exponent") && !j["scale_exponent"].is_null())
      g.scale_exponent = j["scale_exponent"].get<int>();
    std::size_t auto_id = 0;
    for (const auto& jb : j.at("balls")) {
      GeneratorEntry e;
      e.id = jb.contains("id") ? jb["id"].get<std::string>() : "b" + std::to_string(auto_id);
      ++auto_id;
      e.center = jb.at("center").get<std::vector<double>>();
      e.radius = jb.at("radius").get<double>();
      g.balls.push_back(std::move(e));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad generator file: ") + e.what());
  }
  check_entries(g);
  return g;
}

GeneratorFile parse_generators_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV input");
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  const std::vector<std::string> header = split(line);
  if (header.size() < 3) throw ParseError("CSV header needs at least id,x1,r");

  GeneratorFile g;
  g.dimension = header.size() - 2;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split(line);
    if (f.size() != header.size())
      throw ParseError("CSV row has " + std::to_string(f.size()) + " fields, expected " +
                       std::to_string(header.size()));
    GeneratorEntry e;
    e.id = f[0];
    try {
      for (std::size_t j = 1; j + 1 < f.size(); ++j) e.center.push_back(std::stod(f[j]));
      e.radius = std::stod(f.back());
    } catch (const std::exception&) {
      throw ParseError("CSV row for '" + e.id + "' has a non-numeric field");
    }
    g.balls.push_back(std::move(e));
  }
  check_entries(g);
  return g;
}

GeneratorFile load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  const auto dotpos = path.rfind('.');
  const std::string ext = dotpos == std::string::npos ? "" : path.substr(dotpos);
  if (ext == ".csv") return parse_generators_csv(in);
  if (ext == ".json") return parse_generators_json(in);
  // sniff: JSON starts with '{'
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return parse_generators_json(in);
  return parse_generators_csv(in);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace apollo::cli
