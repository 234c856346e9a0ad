#pragma once

#include <Eigen/Dense>

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mmag {

using Scalar = double;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using ArrayX = Eigen::ArrayXd;
using Field3 = Eigen::Matrix3Xd;  // one 3-vector per grid cell, column-major
using Index = Eigen::Index;

inline constexpr const char* kToolVersion = "mmh 1.0.0";

// ---------------------------------------------------------------------------
// Error classes map 1:1 onto CLI exit codes (see docs/exit_codes.md).

enum class errc : int {
  ok = 0,
  parse = 2,
  validation = 3,
  missing_artifact = 4,
  no_convergence = 5,
  compatibility = 6,
  io = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

// ---------------------------------------------------------------------------
// Worker pool. All reductions run over a fixed chunk decomposition so results
// are bitwise identical at any worker count.

namespace detail {
inline std::atomic<int>& worker_count() {
  static std::atomic<int> w{1};
  return w;
}
}  // namespace detail

inline void set_workers(int w) { detail::worker_count().store(w < 1 ? 1 : w); }
inline int workers() { return detail::worker_count().load(); }

inline constexpr Index kReductionChunks = 64;

struct ChunkRange {
  Index lo, hi;
};

inline std::vector<ChunkRange> fixed_chunks(Index total) {
  Index nc = std::min<Index>(kReductionChunks, std::max<Index>(total, 1));
  std::vector<ChunkRange> out(static_cast<size_t>(nc));
  for (Index c = 0; c < nc; ++c) {
    out[static_cast<size_t>(c)] = {total * c / nc, total * (c + 1) / nc};
  }
  return out;
}

// Runs fn(lo, hi) over the fixed chunk set; chunk boundaries do not depend on
// the worker count.
template <class Fn>
void parallel_chunks(Index total, Fn&& fn) {
  if (total <= 0) return;
  auto chunks = fixed_chunks(total);
  int w = workers();
  if (w <= 1 || chunks.size() == 1) {
    for (const auto& c : chunks) fn(c.lo, c.hi);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(w));
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&, t]() {
      for (size_t c = static_cast<size_t>(t); c < chunks.size(); c += static_cast<size_t>(w)) {
        fn(chunks[c].lo, chunks[c].hi);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Deterministic dot product: per-chunk partials combined in chunk order.
inline Scalar det_dot(const ArrayX& a, const ArrayX& b) {
  auto chunks = fixed_chunks(a.size());
  std::vector<Scalar> partial(chunks.size(), 0.0);
  parallel_chunks(a.size(), [&](Index lo, Index hi) {
    // locate the chunk id from bounds; chunks are disjoint so a linear scan
    // per call is fine (<= 64 entries)
    for (size_t c = 0; c < chunks.size(); ++c) {
      if (chunks[c].lo == lo && chunks[c].hi == hi) {
        partial[c] = a.segment(lo, hi - lo).matrix().dot(b.segment(lo, hi - lo).matrix());
        break;
      }
    }
  });
  Scalar s = 0.0;
  for (Scalar p : partial) s += p;
  return s;
}

inline Scalar det_sum(const ArrayX& a) {
  auto chunks = fixed_chunks(a.size());
  std::vector<Scalar> partial(chunks.size(), 0.0);
  parallel_chunks(a.size(), [&](Index lo, Index hi) {
    for (size_t c = 0; c < chunks.size(); ++c) {
      if (chunks[c].lo == lo && chunks[c].hi == hi) {
        partial[c] = a.segment(lo, hi - lo).sum();
        break;
      }
    }
  });
  Scalar s = 0.0;
  for (Scalar p : partial) s += p;
  return s;
}

}  // namespace mmag
