#pragma once

#include <cstdint>

namespace vrjp {

/// 128-bit key / block for the counter-based generator.
struct Key128 {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  friend bool operator==(const Key128&, const Key128&) = default;
};

/// Threefry2x64-20 block function (Salmon et al., SC 2011).
///
/// Stateless: the output is a pure function of (counter, key), so streams
/// can be replayed from any point and shared across threads without
/// coordination.
Key128 threefry2x64(Key128 counter, Key128 key);

/// Uniform double in (0,1), derived from the first output word.
/// Never returns 0 or 1, so it is safe to feed through -log().
double uniform_from_word(std::uint64_t word);

/// Standard exponential by inverse CDF of a counter-based draw.
double exp_draw(const Key128& stream_key, std::uint64_t index);

/// Uniform in (0,1) from a keyed counter, for samplers that want uniforms.
double uniform_draw(const Key128& stream_key, std::uint64_t index);

/// Key-derivation tags. Distinct tags keep the derivation tree free of
/// cross-purpose collisions.
enum class KeyTag : std::uint64_t {
  kRootVertex = 0x726f6f74,   // vertex-key chain anchor
  kChildVertex = 0x63686c64,  // parent vertex key -> child vertex key
  kEdgeDown = 0x65646f77,     // vertex key -> stream key toward child
  kEdgeUp = 0x65647570,       // vertex key -> stream key toward parent
  kDraw = 0x64726177,         // stream key + index -> variate
  kCampaignRun = 0x63616d70,  // master seed + run index -> run seed
  kReplica = 0x7265706c,      // seed + replica index -> replica stream
};

/// Derive a child key from (parent key, tag, salt).
Key128 derive_key(const Key128& parent, KeyTag tag, std::uint64_t salt);

/// Anchor of the per-run derivation tree.
Key128 master_key(std::uint64_t seed);

}  // namespace vrjp
