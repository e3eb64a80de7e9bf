#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "error.hpp"
#include "json.hpp"

namespace cutgroup {

using nlohmann::json;

std::string group_to_json(const PermGroup& group, const std::optional<std::string>& parent) {
  json j;
  j["name"] = group.name();
  j["degree"] = group.degree();
  json gens = json::array();
  for (const auto& g : group.generators()) {
    gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  }
  j["generators"] = std::move(gens);
  if (parent) j["parent"] = *parent;
  return j.dump();
}

PermGroup group_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed group JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "group JSON must be an object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned()) {
    throw Error(ErrorCode::parse_error, "group JSON needs a non-negative integer \"degree\"");
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw Error(ErrorCode::parse_error, "group JSON needs a \"generators\" array");
  }
  const auto degree = j["degree"].get<std::uint64_t>();
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::invalid_argument, "degree " + std::to_string(degree) + " out of range");
  }
  std::string name = j.value("name", std::string{});
  std::vector<Permutation> gens;
  std::size_t idx = 0;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) {
      throw Error(ErrorCode::parse_error, "generator " + std::to_string(idx) + " is not an array");
    }
    if (g.size() != degree) {
      throw Error(ErrorCode::degree_mismatch, "generator " + std::to_string(idx) + " has " +
                                                  std::to_string(g.size()) + " images, expected " +
                                                  std::to_string(degree));
    }
    std::vector<Point> images;
    images.reserve(g.size());
    for (const auto& v : g) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorCode::parse_error,
                    "generator " + std::to_string(idx) + " contains a non-integer image");
      }
      images.push_back(v.get<Point>());
    }
    try {
      gens.emplace_back(std::move(images));
    } catch (const Error& e) {
      throw Error(e.code(), "generator " + std::to_string(idx) + ": " + e.what());
    }
    ++idx;
  }
  return PermGroup::from_generators(std::move(gens), degree, std::move(name));
}

PermGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str());
}

void save_group(const PermGroup& group, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << group_to_json(group) << '\n';
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace cutgroup
