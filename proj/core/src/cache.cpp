#include "fiburn/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

namespace fiburn::cachefs {

namespace {

constexpr const char* kFormatVersion = "fiburn-cache-1";

std::string& dir_storage() {
  static std::string dir;
  return dir;
}

// FNV-1a over the table bytes plus the version tag
std::string hash_group(const Group& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const char* c = kFormatVersion; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ULL;
  }
  feed(static_cast<std::uint64_t>(g.order()));
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b) feed(static_cast<std::uint64_t>(g.mul(a, b)));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<std::vector<std::vector<Elt>>> load_lists(const Group& g,
                                                        const char* kind) {
  if (dir_storage().empty()) return std::nullopt;
  std::filesystem::path path =
      std::filesystem::path(dir_storage()) / (hash_group(g) + "-" + kind + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version") != kFormatVersion) return std::nullopt;
    if (j.at("order").get<int>() != g.order()) return std::nullopt;
    std::vector<std::vector<Elt>> out;
    for (const auto& row : j.at("data")) {
      std::vector<Elt> v;
      for (const auto& e : row) {
        Elt x = e.get<Elt>();
        if (x < 0 || x >= g.order()) return std::nullopt;
        v.push_back(x);
      }
      out.push_back(std::move(v));
    }
    return out;
  } catch (...) {
    return std::nullopt;  // corrupt entries are ignored and rebuilt
  }
}

void store_lists(const Group& g, const char* kind,
                 const std::vector<std::vector<Elt>>& data) {
  if (dir_storage().empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_storage(), ec);
  if (ec) return;
  nlohmann::json j;
  j["version"] = kFormatVersion;
  j["order"] = g.order();
  j["data"] = data;
  std::filesystem::path final_path =
      std::filesystem::path(dir_storage()) / (hash_group(g) + "-" + kind + ".json");
  std::filesystem::path tmp = final_path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, final_path, ec);  // atomic publish
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

void set_cache_dir(std::string dir) { dir_storage() = std::move(dir); }
const std::string& cache_dir() { return dir_storage(); }

std::string group_content_hash(const Group& g) { return hash_group(g); }

std::optional<std::vector<std::vector<Elt>>> load_subgroups(const Group& g) {
  return load_lists(g, "lattice");
}
void store_subgroups(const Group& g, const std::vector<std::vector<Elt>>& subs) {
  store_lists(g, "lattice", subs);
}

std::optional<std::vector<std::vector<Elt>>> load_automorphisms(const Group& g) {
  return load_lists(g, "aut");
}
void store_automorphisms(const Group& g,
                         const std::vector<std::vector<Elt>>& images) {
  store_lists(g, "aut", images);
}

}  // namespace fiburn::cachefs
