#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lattice.hpp"

namespace purespec {

// 64-bit FNV-1a; stable across platforms, used only to name cache files.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// On-disk store of ideal lattices keyed by the construction fingerprint.
// File layout: magic line, fingerprint line, order, ideal count, then one
// line of element indices per ideal. A hit is accepted only when the stored
// fingerprint matches the ring's; anything else is treated as a miss.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
      throw ConfigError("cache directory '" + dir_.string() + "' is not usable");
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::filesystem::path path_for(const FiniteRing& r) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(r.fingerprint())));
    return dir_ / (std::string(buf) + ".lattice");
  }

  std::optional<IdealLattice> load(const RingPtr& ring) const {
    std::ifstream in(path_for(*ring));
    if (!in) return std::nullopt;
    std::string magic, fp;
    std::getline(in, magic);
    std::getline(in, fp);
    if (magic != kMagic || fp != ring->fingerprint()) return std::nullopt;
    std::size_t order = 0, count = 0;
    if (!(in >> order >> count) || order != ring->order()) return std::nullopt;
    std::string line;
    std::getline(in, line);
    std::vector<Ideal> ideals;
    try {
      for (std::size_t k = 0; k < count; ++k) {
        if (!std::getline(in, line)) return std::nullopt;
        std::istringstream ls(line);
        ElementSet s(order);
        std::size_t e;
        while (ls >> e) {
          if (e >= order) return std::nullopt;
          s.insert(static_cast<Element>(e));
        }
        ideals.emplace_back(ring, std::move(s));  // re-validates closure
      }
      return IdealLattice::from_ideals(ring, std::move(ideals));
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  }

  // Atomic: write a private temp file, then rename over the target.
  void store(const IdealLattice& lat) const {
    const auto target = path_for(*lat.ring());
    const auto tmp = target.string() + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                     "." + std::to_string(counter_.fetch_add(1));
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << kMagic << '\n' << lat.ring()->fingerprint() << '\n' << lat.ring()->order() << ' ' << lat.ideals().size() << '\n';
      for (const auto& i : lat.ideals()) {
        bool first = true;
        i.members().for_each([&](Element e) {
          out << (first ? "" : " ") << e;
          first = false;
        });
        out << '\n';
      }
      if (!out) throw ConfigError("cannot write cache file " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw ConfigError("cannot publish cache file " + target.string());
    }
  }

  IdealLattice get_or_compute(const RingPtr& ring, const Limits& limits = {}) {
    if (auto hit = load(ring)) {
      if (hit->ideals().size() > limits.lattice_cap)
        throw IdealLatticeTooLarge(ring->label() + " has more than " + std::to_string(limits.lattice_cap) + " ideals");
      ++hits_;
      return std::move(*hit);
    }
    ++misses_;
    auto lat = IdealLattice::enumerate(ring, limits);
    store(lat);
    return lat;
  }

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  static constexpr const char* kMagic = "purespec-lattice 1";
  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0}, misses_{0};
  mutable std::atomic<std::uint64_t> counter_{0};
};

}  // namespace purespec
