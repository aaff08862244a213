#include "treeschur/psi.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace treeschur {

namespace {
std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}
}  // namespace

StepFunction parse_psi(const GroupConfig& cfg, std::string_view spec) {
  if (spec == "one") return StepFunction::one(cfg);
  if (spec.starts_with("cyl:")) {
    try {
      return StepFunction::cylinder(cfg, parse_word(cfg, spec.substr(4)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad cylinder spec: ") + e.what());
    }
  }
  if (spec.starts_with("random:")) {
    const auto rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw UsageError("random spec needs 'random:<seed>:<depth>'");
    const std::uint64_t seed = parse_u64(rest.substr(0, colon), "seed");
    const std::uint64_t depth = parse_u64(rest.substr(colon + 1), "depth");
    if (depth > 12) throw UsageError("random depth too large");
    return StepFunction::random(cfg, seed, static_cast<unsigned>(depth));
  }
  if (spec.starts_with("@")) return load_step_function(cfg, std::string(spec.substr(1)));
  throw UsageError("unknown psi spec '" + std::string(spec) +
                   "' (want one | cyl:<word> | random:<seed>:<depth> | @file.json)");
}

std::string step_function_json(const GroupConfig& cfg, const StepFunction& f) {
  nlohmann::ordered_json j;
  j["depth"] = f.depth;
  j["rank"] = cfg.rank;
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  std::uint64_t r = 0;
  for_each_in_sphere(cfg, f.depth, [&](std::span<const Letter> w) {
    std::string key = "e";
    if (!w.empty()) {
      key.clear();
      for (Letter l : w) key.push_back(letter_char(cfg, l));
    }
    const CScalar& v = f.values[r++];
    vals[key] = {v.re().str(), v.im().str()};
  });
  j["values"] = std::move(vals);
  return j.dump(1);
}

StepFunction step_function_from_json(const GroupConfig& cfg, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad step function JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("depth") || !j.contains("values"))
    throw UsageError("step function JSON needs 'depth' and 'values'");
  if (j.contains("rank") && j["rank"].get<unsigned>() != cfg.rank)
    throw UsageError("step function rank does not match --rank");
  const unsigned depth = j["depth"].get<unsigned>();
  StepFunction f = StepFunction::zero(cfg, depth);
  const auto& vals = j["values"];
  if (!vals.is_object() || vals.size() != f.values.size())
    throw UsageError("step function values must cover the whole sphere (" +
                     std::to_string(f.values.size()) + " words)");
  std::vector<bool> seen(f.values.size(), false);
  for (const auto& [key, entry] : vals.items()) {
    Word w;
    try {
      w = parse_word(cfg, key);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad word key: ") + e.what());
    }
    if (w.length() != depth) throw UsageError("word key '" + key + "' has wrong length");
    if (!entry.is_array() || entry.size() != 2)
      throw UsageError("value for '" + key + "' must be [re, im]");
    const std::uint64_t r = sphere_rank(cfg, w.letters());
    if (seen[r]) throw UsageError("duplicate word key '" + key + "'");
    seen[r] = true;
    try {
      f.values[r] = CScalar(parse_qsqrt(entry[0].get<std::string>(), cfg.q()),
                            parse_qsqrt(entry[1].get<std::string>(), cfg.q()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad scalar for '") + key + "': " + e.what());
    }
  }
  return f;
}

StepFunction load_step_function(const GroupConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return step_function_from_json(cfg, buf.str());
}

}  // namespace treeschur
