#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "amilte/errors.hpp"
#include "amilte/fraction.hpp"
#include "amilte/tbs_table_data.hpp"

namespace amilte {

inline constexpr std::int64_t kTtiMs = 1;  // one subframe

// ---------------------------------------------------------------------------
// Channel bandwidth -> resource block capacity

enum class ChannelBandwidth { kMhz1_4, kMhz3, kMhz5, kMhz10, kMhz15, kMhz20 };

inline constexpr std::array<ChannelBandwidth, 6> kAllBandwidths = {
    ChannelBandwidth::kMhz1_4, ChannelBandwidth::kMhz3,  ChannelBandwidth::kMhz5,
    ChannelBandwidth::kMhz10,  ChannelBandwidth::kMhz15, ChannelBandwidth::kMhz20,
};

constexpr int rb_capacity(ChannelBandwidth bw) {
  switch (bw) {
    case ChannelBandwidth::kMhz1_4: return 6;
    case ChannelBandwidth::kMhz3:   return 15;
    case ChannelBandwidth::kMhz5:   return 25;
    case ChannelBandwidth::kMhz10:  return 50;
    case ChannelBandwidth::kMhz15:  return 75;
    case ChannelBandwidth::kMhz20:  return 100;
  }
  return 0;  // unreachable, enum is closed
}

constexpr double bandwidth_mhz(ChannelBandwidth bw) {
  switch (bw) {
    case ChannelBandwidth::kMhz1_4: return 1.4;
    case ChannelBandwidth::kMhz3:   return 3.0;
    case ChannelBandwidth::kMhz5:   return 5.0;
    case ChannelBandwidth::kMhz10:  return 10.0;
    case ChannelBandwidth::kMhz15:  return 15.0;
    case ChannelBandwidth::kMhz20:  return 20.0;
  }
  return 0.0;
}

// Only the six standardized channel bandwidths are accepted.
inline ChannelBandwidth bandwidth_from_mhz(double mhz) {
  for (ChannelBandwidth bw : kAllBandwidths)
    if (std::abs(bandwidth_mhz(bw) - mhz) < 1e-9) return bw;
  throw ConfigError("channel bandwidth must be one of 1.4, 3, 5, 10, 15, 20 MHz (got " +
                    std::to_string(mhz) + ")");
}

// ---------------------------------------------------------------------------
// TDD uplink share

// AsPrinted follows the literal definition uplink/frame; TableReproduction
// divides by non-special subframes only, which is the accounting the
// published consumption tables were computed with.
enum class EtaMode { kAsPrinted, kTableReproduction };

struct TddUplinkShare {
  int n_sf_uplink = 4;
  int n_sf_frame = 10;
  int n_sf_special = 2;
  EtaMode accounting_mode = EtaMode::kTableReproduction;

  friend bool operator==(const TddUplinkShare&, const TddUplinkShare&) = default;
};

inline Frac uplink_share(const TddUplinkShare& tdd) {
  if (tdd.n_sf_uplink <= 0 || tdd.n_sf_frame <= 0 ||
      tdd.n_sf_uplink + tdd.n_sf_special > tdd.n_sf_frame)
    throw ConfigError("TDD share: need uplink >= 1 and uplink + special <= frame");
  if (tdd.accounting_mode == EtaMode::kAsPrinted)
    return Frac(tdd.n_sf_uplink, tdd.n_sf_frame);
  const int non_special = tdd.n_sf_frame - tdd.n_sf_special;
  if (non_special == 0)
    throw ConfigError("TDD share: frame has only special subframes");
  return Frac(tdd.n_sf_uplink, non_special);
}

enum class SubframeKind : std::uint8_t { kDownlink, kSpecial, kUplink };

// Subframe pattern for one radio frame. Uplink-downlink configuration 1
// (DSUUDDSUUD) is reproduced exactly; other splits are laid out canonically
// as D, specials, uplinks, remaining downlinks.
inline std::array<SubframeKind, 10> tdd_frame_pattern(const TddUplinkShare& tdd) {
  using K = SubframeKind;
  if (tdd.n_sf_frame != 10)
    throw ConfigError("TDD pattern: only 10-subframe frames are supported");
  if (tdd.n_sf_uplink == 4 && tdd.n_sf_special == 2)
    return {K::kDownlink, K::kSpecial, K::kUplink, K::kUplink, K::kDownlink,
            K::kDownlink, K::kSpecial, K::kUplink, K::kUplink, K::kDownlink};
  std::array<SubframeKind, 10> p{};
  p.fill(K::kDownlink);
  int pos = (tdd.n_sf_uplink + tdd.n_sf_special < 10) ? 1 : 0;
  for (int i = 0; i < tdd.n_sf_special; ++i) p[pos++] = K::kSpecial;
  for (int i = 0; i < tdd.n_sf_uplink; ++i) p[pos++] = K::kUplink;
  return p;
}

inline bool is_uplink_tti(const TddUplinkShare& tdd, std::int64_t tti_index) {
  return tdd_frame_pattern(tdd)[static_cast<std::size_t>(tti_index % tdd.n_sf_frame)] ==
         SubframeKind::kUplink;
}

// ---------------------------------------------------------------------------
// MCS / TBS

enum class Modulation { kQpsk, kQam16, kQam64 };

inline const char* modulation_name(Modulation m) {
  switch (m) {
    case Modulation::kQpsk:  return "qpsk";
    case Modulation::kQam16: return "16qam";
    case Modulation::kQam64: return "64qam";
  }
  return "?";
}

inline Modulation modulation_from_order(int bits_per_symbol) {
  switch (bits_per_symbol) {
    case 2: return Modulation::kQpsk;
    case 4: return Modulation::kQam16;
    case 6: return Modulation::kQam64;
    default: throw ConfigError("unknown modulation order " + std::to_string(bits_per_symbol));
  }
}

struct McsScheme {
  Modulation modulation = Modulation::kQpsk;
  int i_mcs = 9;
  int i_tbs = 9;

  friend bool operator==(const McsScheme&, const McsScheme&) = default;
};

inline McsScheme mcs_from_imcs(int i_mcs) {
  for (const auto& e : detail::kUplinkMcsMap)
    if (e.i_mcs == i_mcs)
      return {modulation_from_order(e.modulation_order), e.i_mcs, e.i_tbs};
  throw LookupError("uplink I_MCS out of range 0-28: " + std::to_string(i_mcs));
}

// TBS indices reachable with a given modulation under the uplink MCS map.
inline std::pair<int, int> itbs_range(Modulation m) {
  int lo = detail::kTbsRows, hi = -1;
  for (const auto& e : detail::kUplinkMcsMap) {
    if (modulation_from_order(e.modulation_order) != m) continue;
    lo = std::min(lo, e.i_tbs);
    hi = std::max(hi, e.i_tbs);
  }
  return {lo, hi};
}

// Builds a scheme from modulation + TBS index, resolving the smallest
// matching I_MCS; throws if the index is not reachable with the modulation.
inline McsScheme mcs_from_modulation_itbs(Modulation m, int i_tbs) {
  for (const auto& e : detail::kUplinkMcsMap)
    if (modulation_from_order(e.modulation_order) == m && e.i_tbs == i_tbs)
      return {m, e.i_mcs, e.i_tbs};
  throw ConfigError(std::string("I_TBS ") + std::to_string(i_tbs) +
                    " is not reachable with " + modulation_name(m));
}

// Library defaults. QPSK index 9 is the published choice; the 16QAM/64QAM
// indices are the smallest that reproduce every published consumption cell
// (see fixtures/mcs_itbs_scan.tsv for the full satisfying sets).
inline McsScheme default_mcs(Modulation m) {
  switch (m) {
    case Modulation::kQpsk:  return mcs_from_modulation_itbs(m, 9);
    case Modulation::kQam16: return mcs_from_modulation_itbs(m, 14);
    case Modulation::kQam64: return mcs_from_modulation_itbs(m, 23);
  }
  throw ConfigError("unknown modulation");
}

class TbsTable {
 public:
  static constexpr int min_itbs() { return 0; }
  static constexpr int max_itbs() { return detail::kTbsRows - 1; }
  static constexpr int max_prbs() { return detail::kTbsPrbs; }

  static int bits(int i_tbs, int n_prb) {
    if (i_tbs < min_itbs() || i_tbs > max_itbs())
      throw LookupError("I_TBS out of range 0-26: " + std::to_string(i_tbs));
    if (n_prb < 1 || n_prb > max_prbs())
      throw LookupError("n_prb out of range 1-100: " + std::to_string(n_prb));
    return detail::kTbsBits[static_cast<std::size_t>(i_tbs)]
                           [static_cast<std::size_t>(n_prb - 1)];
  }

  // Row view for search-based solvers.
  static const std::array<int, detail::kTbsPrbs>& row(int i_tbs) {
    if (i_tbs < min_itbs() || i_tbs > max_itbs())
      throw LookupError("I_TBS out of range 0-26: " + std::to_string(i_tbs));
    return detail::kTbsBits[static_cast<std::size_t>(i_tbs)];
  }
};

inline int transport_block_bits(const McsScheme& mcs, int n_prb) {
  return TbsTable::bits(mcs.i_tbs, n_prb);
}

// Bits per second over n_prb resource blocks: one transport block per TTI.
inline std::int64_t achievable_rate_bps(const McsScheme& mcs, int n_prb) {
  return static_cast<std::int64_t>(transport_block_bits(mcs, n_prb)) * 1000 / kTtiMs;
}

}  // namespace amilte
