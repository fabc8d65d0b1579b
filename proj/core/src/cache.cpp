#include "logtangent/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace logtangent {

namespace {

std::vector<std::string> coeff_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> cs;
  cs.reserve(coeffs.size());
  for (const std::string& s : coeffs) cs.push_back(Rat::from_string(s));
  return Poly(std::move(cs));
}

}  // namespace

const char* DiskCache::current_version() { return "logtangent-cache-v1"; }

DiskCache::DiskCache(std::string dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_, ec)) {
    std::cerr << "warning: cache directory '" << dir_
              << "' is unusable, caching disabled\n";
    enabled_ = false;
    return;
  }
  // Probe writability: permission checks alone are unreliable (e.g. as root).
  const fs::path probe = fs::path(dir_) / ".write-probe";
  {
    std::ofstream out(probe);
    if (!out) {
      std::cerr << "warning: cache directory '" << dir_
                << "' is not writable, caching disabled\n";
      enabled_ = false;
      return;
    }
  }
  fs::remove(probe, ec);
  enabled_ = true;
}

std::string DiskCache::key_hash(const CanonKey& key) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

std::string DiskCache::path_for(const CanonKey& key) const {
  return (fs::path(dir_) / (key_hash(key) + ".json")).string();
}

std::optional<RatFunc> DiskCache::load(const CanonKey& key) {
  if (!enabled_) return std::nullopt;
  const std::string path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("version").get<std::string>() != version_) return std::nullopt;
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    Poly num = poly_from_strings(j.at("num").get<std::vector<std::string>>());
    Poly den = poly_from_strings(j.at("den").get<std::vector<std::string>>());
    return RatFunc(std::move(num), std::move(den));
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unreadable cache entry " << path << " ("
              << e.what() << ")\n";
    return std::nullopt;
  }
}

void DiskCache::store(const CanonKey& key, const RatFunc& value) {
  if (!enabled_) return;
  nlohmann::json j;
  j["version"] = version_;
  j["key"] = key;
  j["num"] = coeff_strings(value.num());
  j["den"] = coeff_strings(value.den());
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << j.dump() << "\n";
    if (!out) return;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace logtangent
