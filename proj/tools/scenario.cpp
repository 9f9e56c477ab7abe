#include "scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "roguewave/errors.hpp"

namespace roguewave::cli {
namespace {

using nlohmann::json;

double number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) {
    throw ConfigurationError(std::string("scenario: '") + key +
                             "' must be a number");
  }
  return v.get<double>();
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) {
    throw ConfigurationError(std::string("scenario: ") + key + " > 0 violated");
  }
}

// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ConfigurationError("scenario: expected a JSON object");
  for (const char* key : {"q_star", "q_0"}) {
    if (!doc.contains(key)) {
      throw ConfigurationError(std::string("scenario: missing '") + key + "'");
    }
  }
  Scenario s;
  s.q_star = number(doc, "q_star", 0.0);
  s.q_0 = number(doc, "q_0", 0.0);
  if (doc.contains("q_ref")) {
    const json& v = doc.at("q_ref");
    if (v.is_string()) {
      if (v.get<std::string>() != "max") {
        throw ConfigurationError("scenario: q_ref must be a number or \"max\"");
      }
    } else if (v.is_number()) {
      s.q_ref = v.get<double>();
    } else {
      throw ConfigurationError("scenario: q_ref must be a number or \"max\"");
    }
  }
  s.consts.k = number(doc, "k", s.consts.k);
  s.consts.g = number(doc, "g", s.consts.g);
  s.consts.c_s = number(doc, "c_s", s.consts.c_s);
  s.consts.n_interactions = static_cast<int>(
      number(doc, "n_interactions", s.consts.n_interactions));
  s.t_end = number(doc, "t_end", s.t_end);
  s.dt = number(doc, "dt", s.dt);
  s.x1 = number(doc, "x1", s.x1);
  if (doc.contains("x2")) s.x2 = number(doc, "x2", 0.0);
  if (doc.contains("output_times")) {
    const json& v = doc.at("output_times");
    if (!v.is_array()) throw ConfigurationError("scenario: output_times must be an array");
    for (const json& t : v) {
      if (!t.is_number()) throw ConfigurationError("scenario: output_times must be numbers");
      s.output_times.push_back(t.get<double>());
    }
  }
  if (doc.contains("strict_admissibility")) {
    const json& v = doc.at("strict_admissibility");
    if (!v.is_boolean()) throw ConfigurationError("scenario: strict_admissibility must be a boolean");
    s.strict_admissibility = v.get<bool>();
  }

  require_positive(s.q_star, "q_star");
  require_positive(s.q_0, "q_0");
  if (s.q_ref) require_positive(*s.q_ref, "q_ref");
  require_positive(s.t_end, "t_end");
  require_positive(s.dt, "dt");
  s.consts.validate();
  if (!(s.q_star < s.q_0) && !(s.q_star == s.q_0 && (!s.q_ref || *s.q_ref == s.q_0))) {
    throw ConfigurationError("scenario: q_star < q_0 violated");
  }
  if (!(s.x1 < 0.0)) throw ConfigurationError("scenario: x1 < 0 violated");
  if (s.x2 && !(*s.x2 > 0.0)) throw ConfigurationError("scenario: x2 > 0 violated");

  s.hash = fnv1a(to_json(s).dump());
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("scenario: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("scenario: ") + e.what());
  }
  return parse_scenario(doc);
}

json to_json(const Scenario& s) {
  json doc;
  doc["q_star"] = s.q_star;
  doc["q_0"] = s.q_0;
  doc["q_ref"] = s.q_ref ? json(*s.q_ref) : json("max");
  doc["k"] = s.consts.k;
  doc["g"] = s.consts.g;
  doc["c_s"] = s.consts.c_s;
  doc["n_interactions"] = s.consts.n_interactions;
  doc["t_end"] = s.t_end;
  doc["dt"] = s.dt;
  doc["output_times"] = s.output_times;
  doc["x1"] = s.x1;
  doc["x2"] = s.x2 ? json(*s.x2) : json(nullptr);
  doc["strict_admissibility"] = s.strict_admissibility;
  return doc;
}

WaveConfig resolve(const Scenario& s) {
  const double q_ref = s.q_ref ? *s.q_ref : solve_max_qref(s.q_star, s.q_0, s.consts);
  return build_configuration(s.q_star, s.q_0, q_ref, s.consts);
}

std::string hash_hex(std::uint64_t hash) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace roguewave::cli
