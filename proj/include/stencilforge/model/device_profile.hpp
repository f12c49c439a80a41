/// Device profiles for the resource and performance model.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stencilforge::model {

struct DeviceProfile {
  std::string name;
  int dsp_count = 0;                 // hard FMA units
  std::int64_t onchip_bits = 0;      // total embedded memory
  std::int64_t bram_block_bits = 20480;
  double mem_bandwidth_gbps = 0.0;   // external, GB/s
  double fmax_mhz = 0.0;             // pre-synthesis clock estimate
  double peak_gflops = 0.0;
  double tdp_watt = 0.0;             // informational
};

/// Built-in profiles: "arria10gx1150" and the deliberately starved
/// "tiny8dsp" used to exercise empty tuning results.
const std::vector<DeviceProfile>& builtin_profiles();

/// Resolution order: exact path to a JSON file, then built-in name, then
/// <name>.json under $STENCIL_FORGE_DEVICE_DIR. Throws std::runtime_error
/// when nothing matches or the file is malformed.
DeviceProfile load_device_profile(const std::string& name_or_path);

DeviceProfile device_profile_from_json_text(const std::string& text);
std::string device_profile_to_json_text(const DeviceProfile& profile);

}  // namespace stencilforge::model
