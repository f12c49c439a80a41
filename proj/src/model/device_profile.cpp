#include "stencilforge/model/device_profile.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stencilforge::model {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<DeviceProfile>& builtin_profiles() {
  static const std::vector<DeviceProfile> profiles = [] {
    std::vector<DeviceProfile> p;
    // Intel Arria 10 GX 1150. onchip_bits covers M20K (2713 x 20480) plus
    // ~12.7 Mib of MLABs; shift registers spill into both. fmax is a
    // pre-synthesis estimate, typical achieved clocks span ~240-345 MHz.
    p.push_back({"arria10gx1150", 1518, 68878336, 20480, 34.1, 300.0, 1450.0, 70.0});
    // Tiny synthetic device for exercising exhausted-budget paths.
    p.push_back({"tiny8dsp", 8, 1000000, 20480, 8.0, 200.0, 3.2, 5.0});
    return p;
  }();
  return profiles;
}

static void validate_profile(const DeviceProfile& p) {
  auto positive = [&](double v, const char* field) {
    if (!(v > 0)) {
      throw std::runtime_error("device profile '" + p.name + "': " + field +
                               " must be positive");
    }
  };
  if (p.name.empty()) throw std::runtime_error("device profile: empty name");
  positive(p.dsp_count, "dsp_count");
  positive(static_cast<double>(p.onchip_bits), "onchip_bits");
  positive(static_cast<double>(p.bram_block_bits), "bram_block_bits");
  positive(p.mem_bandwidth_gbps, "mem_bandwidth_gbps");
  positive(p.fmax_mhz, "fmax_mhz");
  positive(p.peak_gflops, "peak_gflops");
  positive(p.tdp_watt, "tdp_watt");
}

DeviceProfile device_profile_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("device profile: invalid JSON: ") + e.what());
  }
  DeviceProfile p;
  try {
    p.name = j.at("name").get<std::string>();
    p.dsp_count = j.at("dsp_count").get<int>();
    p.onchip_bits = j.at("onchip_bits").get<std::int64_t>();
    p.bram_block_bits = j.value("bram_block_bits", std::int64_t{20480});
    p.mem_bandwidth_gbps = j.at("mem_bandwidth_gbps").get<double>();
    p.fmax_mhz = j.at("fmax_mhz").get<double>();
    p.peak_gflops = j.value("peak_gflops", 0.0);
    p.tdp_watt = j.value("tdp_watt", 1.0);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("device profile: missing or mistyped field: ") +
                             e.what());
  }
  if (p.peak_gflops == 0.0) {
    // FMA peak at the clock estimate; good enough when a file omits it.
    p.peak_gflops = 2.0 * p.dsp_count * p.fmax_mhz / 1000.0;
  }
  validate_profile(p);
  return p;
}

std::string device_profile_to_json_text(const DeviceProfile& p) {
  json j;
  j["name"] = p.name;
  j["dsp_count"] = p.dsp_count;
  j["onchip_bits"] = p.onchip_bits;
  j["bram_block_bits"] = p.bram_block_bits;
  j["mem_bandwidth_gbps"] = p.mem_bandwidth_gbps;
  j["fmax_mhz"] = p.fmax_mhz;
  j["peak_gflops"] = p.peak_gflops;
  j["tdp_watt"] = p.tdp_watt;
  return j.dump(2);
}

static DeviceProfile load_from_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("device profile: cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return device_profile_from_json_text(ss.str());
}

DeviceProfile load_device_profile(const std::string& name_or_path) {
  const fs::path as_path(name_or_path);
  if (fs::exists(as_path) && fs::is_regular_file(as_path)) {
    return load_from_file(as_path);
  }
  for (const DeviceProfile& p : builtin_profiles()) {
    if (p.name == name_or_path) return p;
  }
  if (const char* dir = std::getenv("STENCIL_FORGE_DEVICE_DIR")) {
    const fs::path candidate = fs::path(dir) / (name_or_path + ".json");
    if (fs::exists(candidate)) {
      return load_from_file(candidate);
    }
  }
  throw std::runtime_error("device profile '" + name_or_path +
                           "': not a file, not a built-in, and not found under "
                           "$STENCIL_FORGE_DEVICE_DIR");
}

}  // namespace stencilforge::model
