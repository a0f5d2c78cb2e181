// Shared test helpers: seeded random network specs and scratch files.
#pragma once

#include <unistd.h>

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bpk/network.hpp"
#include "bpk/oracle.hpp"

namespace bpk_test {

// Random layered spec: every consecutive pair present, plus up to max_skips
// random longer pairs. Regenerates until the full path count stays under the
// enumeration guard, so callers can enumerate freely.
inline bpk::NetworkSpec random_spec(std::mt19937& rng, int max_depth = 6, int max_width = 3,
                                    int max_skips = 4, std::size_t path_limit = 10000) {
  for (;;) {
    std::uniform_int_distribution<int> depth_dist(2, max_depth);
    const int L = depth_dist(rng);
    std::uniform_int_distribution<int> width_dist(1, max_width);
    std::vector<int> widths(L + 1);
    for (int& w : widths) w = width_dist(rng);

    std::set<std::pair<int, int>> pairs;
    for (int l = 0; l < L; ++l) pairs.emplace(l, l + 1);
    std::uniform_int_distribution<int> skip_count_dist(0, max_skips);
    const int skips = skip_count_dist(rng);
    for (int s = 0; s < skips && L >= 2; ++s) {
      std::uniform_int_distribution<int> j_dist(0, L - 2);
      const int j = j_dist(rng);
      std::uniform_int_distribution<int> l_dist(j + 2, L);
      pairs.emplace(j, l_dist(rng));
    }
    bpk::NetworkSpec spec = bpk::validate_network(
        std::move(widths), std::vector<std::pair<int, int>>(pairs.begin(), pairs.end()));
    try {
      bpk::enumerate_all_paths(spec, path_limit);
      return spec;
    } catch (const bpk::Error&) {
      // too many paths, draw again
    }
  }
}

inline bpk::NetworkSpec random_no_skip_spec(std::mt19937& rng, int max_depth = 6,
                                            int max_width = 3) {
  return random_spec(rng, max_depth, max_width, /*max_skips=*/0);
}

// Layered skeleton from Fig-style examples: unit widths, consecutive pairs
// plus the given skips.
inline bpk::NetworkSpec skeleton_spec(int L, std::vector<std::pair<int, int>> skips,
                                      int width = 1) {
  std::vector<std::pair<int, int>> pairs;
  for (int l = 0; l < L; ++l) pairs.emplace_back(l, l + 1);
  for (auto& p : skips) pairs.push_back(p);
  return bpk::validate_network(std::vector<int>(L + 1, width), std::move(pairs));
}

class ScratchDir {
 public:
  ScratchDir() {
    static std::atomic<unsigned> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("bpk_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace bpk_test
