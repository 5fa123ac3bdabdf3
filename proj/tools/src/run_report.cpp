#include "run_report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "orbithodge/errors.hpp"

namespace orbithodge::cli {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  auto& in = j["input"];
  in["h0"] = h0;
  if (command == "fibre") {
    in["h"] = h;
    in["lambda"] = lambda.value_or(0);
  }
  in["saturate_by"] = saturate_by;
  in["diamond"] = diamond_requested;
  in["full_verify"] = full_verify;
  j["prime"] = prime;
  j["invariants"] = nlohmann::ordered_json::parse(invariants.to_json());
  j["diamond"] = diamond ? nlohmann::ordered_json::parse(diamond->to_json()) : nlohmann::ordered_json(nullptr);
  j["diamond_mode"] = diamond_mode.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(diamond_mode);
  j["diamond_symmetric"] = diamond_symmetric ? nlohmann::ordered_json(*diamond_symmetric) : nlohmann::ordered_json(nullptr);
  j["prime_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : prime_checks) j["prime_checks"].push_back({{"prime", c.prime}, {"agrees", c.agrees}});
  j["timings_ms"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : timings_ms) j["timings_ms"][k] = v;
  return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    if (r.command != "orbit" && r.command != "fibre") throw UsageError("unknown report command: " + r.command);
    const auto& in = j.at("input");
    r.h0 = in.at("h0").get<std::vector<int>>();
    if (r.command == "fibre") {
      r.h = in.at("h").get<std::vector<int>>();
      r.lambda = in.at("lambda").get<std::int64_t>();
    }
    r.saturate_by = in.at("saturate_by").get<std::string>();
    r.diamond_requested = in.at("diamond").get<bool>();
    r.full_verify = in.at("full_verify").get<bool>();
    r.prime = j.at("prime").get<std::uint32_t>();
    r.invariants = InvariantReport::from_json(j.at("invariants").dump());
    if (!j.at("diamond").is_null()) r.diamond = HodgeDiamond::from_json(j["diamond"].dump());
    if (!j.at("diamond_mode").is_null()) r.diamond_mode = j["diamond_mode"].get<std::string>();
    if (!j.at("diamond_symmetric").is_null()) r.diamond_symmetric = j["diamond_symmetric"].get<bool>();
    for (const auto& c : j.at("prime_checks")) r.prime_checks.push_back({c.at("prime").get<std::uint32_t>(), c.at("agrees").get<bool>()});
    for (const auto& [k, v] : j.at("timings_ms").items()) {
      double ms = v.get<double>();
      if (ms < 0) throw UsageError("negative timing");
      r.timings_ms[k] = ms;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report JSON: ") + e.what());
  }
}

RunReport RunReport::without_timings() const {
  RunReport r = *this;
  r.timings_ms.clear();
  return r;
}

bool same_results(const RunReport& a, const RunReport& b) {
  if (!(a.invariants == b.invariants)) return false;
  if (a.diamond.has_value() != b.diamond.has_value()) return false;
  return !a.diamond || *a.diamond == *b.diamond;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command << " h0=" << join(h0);
  if (command == "fibre") os << " h=" << join(h) << " lambda=" << lambda.value_or(0);
  os << "\n";
  os << "prime " << prime << ", saturated by " << saturate_by << "\n";
  os << "ambient dimension  " << invariants.ambient_dim << "\n";
  os << "dimension          " << invariants.proj_dim << "\n";
  os << "degree             " << (invariants.degree ? std::to_string(*invariants.degree) : "-") << "\n";
  os << "singular codim     " << invariants.sing_codim << "\n";
  os << "smooth             " << (invariants.smooth ? "yes" : "no") << "\n";
  if (diamond) {
    os << "\nHodge diamond (" << diamond_mode << ")\n" << diamond->to_text();
    if (diamond_symmetric && !*diamond_symmetric) os << "warning: the computed numbers are not Hodge symmetric\n";
  } else if (diamond_requested) {
    os << "\nno Hodge diamond: the variety is empty\n";
  }
  for (const auto& c : prime_checks) os << "prime " << c.prime << (c.agrees ? " agrees" : " DISAGREES") << "\n";
  if (!timings_ms.empty()) {
    os << "\ntimings (ms)";
    for (const auto& [k, v] : timings_ms) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %s %.1f", k.c_str(), v);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace orbithodge::cli
