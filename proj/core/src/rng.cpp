#include "plantssl/rng.hpp"

#include <cmath>

namespace plantssl {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0,
                         std::uint32_t k1) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(splitmix64(seed)) {}

Rng Rng::child(std::uint64_t id) const {
  Rng c(0);
  c.key_ = splitmix64(key_ ^ splitmix64(id + 0x632BE59BD9B4E019ull));
  c.counter_ = 0;
  c.block_pos_ = 4;
  return c;
}

void Rng::refill() {
  std::array<std::uint32_t, 4> ctr = {
      std::uint32_t(counter_), std::uint32_t(counter_ >> 32), 0u, 0u};
  std::uint32_t k0 = std::uint32_t(key_);
  std::uint32_t k1 = std::uint32_t(key_ >> 32);
  for (int r = 0; r < 10; ++r) {
    philox_round(ctr, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  block_ = ctr;
  block_pos_ = 0;
  ++counter_;
}

std::uint32_t Rng::next_u32() {
  if (block_pos_ >= 4) refill();
  return block_[block_pos_++];
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double Rng::uniform() {
  // 53 random bits, [0, 1)
  const std::uint64_t bits = next_u64() >> 11;
  return double(bits) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int n) {
  // multiply-shift range reduction; bias is < n / 2^32
  return int((std::uint64_t(next_u32()) * std::uint64_t(n)) >> 32);
}

int Rng::uniform_int(int lo, int hi) { return lo + uniform_int(hi - lo + 1); }

double Rng::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  // u1 in (0, 1] so log is finite
  const double u1 = (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_normal_ = true;
  return r * std::cos(theta);
}

}  // namespace plantssl
