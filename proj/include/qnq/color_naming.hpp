// Copyright 2026 The QNQ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNQ_COLOR_NAMING_HPP
#define QNQ_COLOR_NAMING_HPP

// Static RGB-cube partition into named colors.
//
// A dictionary is text. Each channel is cut into four fuzzy sets
// L=[0,t1) ML=[t1,t2) MH=[t2,t3) H=[t3,255]; each fine category is a
// conjunction of fuzzy-set memberships and linear inequalities between
// channels (spectral rules). Fine categories roll up into the eleven basic
// colors plus "unknown" through a fixed parent map.
//
//   threshold R 64 128 192
//   semantics unordered                     # or: ordered (first match wins)
//   spectral SR1 := max(B,G) < 0.5*R
//   rule 4 bright_dominant_red red := FS(R,H) & SR1
//   rule 5 pink pink := FS(R,H) & FS(G,L|ML|MH) & min(G,B) >= 0.5*R
//   color 4 227 56 56                       # pseudocolor for map rendering
//
// Several rule lines may share one fine id; the category is then their
// union, so a category need not be convex or connected.
//
// Rules are tried in file order and the first match wins. A dictionary that
// declares `semantics unordered` additionally claims its rules never
// overlap; validate_dictionary() checks that claim over the whole cube.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/raster.hpp"

namespace qnq {

inline constexpr std::size_t kFineLevels = 50;    // 49 names + unknown
inline constexpr std::size_t kCoarseLevels = 12;  // 11 basic colors + unknown
inline constexpr std::uint8_t kFineUnknown = 49;
inline constexpr std::uint8_t kCoarseUnknown = 11;

enum class BasicColor : std::uint8_t {
  Black, White, Gray, Red, Orange, Yellow, Green, Blue, Purple, Pink, Brown, Unknown
};

std::string_view basic_color_name(std::uint8_t coarse_id);
const std::array<Rgb, kCoarseLevels>& basic_color_palette();

enum class FuzzyLabel : std::uint8_t { L = 0, ML = 1, MH = 2, H = 3 };

struct ChannelThresholds {
  std::array<std::uint8_t, 3> t{64, 128, 192};  // strictly increasing, in [1, 254]
};

struct FuzzyPartition {
  std::array<ChannelThresholds, 3> channels{};
};

FuzzyLabel membership(std::uint8_t value, const ChannelThresholds& thresholds);

enum class CompareOp : std::uint8_t { Less, LessEqual, Greater, GreaterEqual };

/// One linear term: coefficient times a channel, max/min of channels, or a
/// constant. Coefficients are fixed-point with six decimals so evaluation
/// is exact integer arithmetic.
struct LinearTerm {
  enum class Kind : std::uint8_t { Constant, Channel, Max, Min };
  Kind kind = Kind::Constant;
  std::uint8_t channels = 0;  // bitmask over R=1, G=2, B=4
  std::int64_t coefficient = 0;  // scaled by kCoefficientScale
};

inline constexpr std::int64_t kCoefficientScale = 1'000'000;

/// `sum(terms) op 0`, where the right-hand side has been moved left.
struct SpectralRule {
  std::string identifier;
  std::vector<LinearTerm> terms;
  CompareOp op = CompareOp::Less;
};

/// Parses "max(B,G) < 0.5*R" style text into a rule.
SpectralRule parse_spectral_rule(std::string_view text, std::string identifier = {});

bool eval_rule(const SpectralRule& rule, const Rgb& rgb);

struct ColorRule {
  std::uint8_t fine_id = 0;
  std::string name;
  /// Allowed fuzzy labels per channel, bitmask over L..H (15 = any).
  std::array<std::uint8_t, 3> fuzzy_masks{15, 15, 15};
  std::vector<SpectralRule> spectral;
};

struct ColorName {
  std::uint8_t fine_id = 0;
  std::string name;
  std::uint8_t parent_id = kCoarseUnknown;
};

class ColorDictionary {
 public:
  /// Throws Format with the offending line number on malformed text.
  static ColorDictionary parse(std::string_view text);
  static const ColorDictionary& default_dictionary();
  static std::string_view default_text();

  const FuzzyPartition& partition() const noexcept { return partition_; }
  const std::vector<ColorRule>& rules() const noexcept { return rules_; }
  bool claims_order_independence() const noexcept { return unordered_; }

  const ColorName& name(std::uint8_t fine_id) const { return names_.at(fine_id); }
  std::uint8_t parent(std::uint8_t fine_id) const { return names_.at(fine_id).parent_id; }
  const std::array<Rgb, kFineLevels>& fine_palette() const noexcept { return palette_; }

  /// Index of the fuzzy cell (4^3 = 64 cells) holding `rgb`.
  std::size_t cell_of(const Rgb& rgb) const;
  /// Rules whose fuzzy conjuncts admit `cell`, in rule order.
  const std::vector<std::uint16_t>& candidates(std::size_t cell) const {
    return cell_rules_[cell];
  }

  /// Copy with every rule of category `fine_id` removed; the category's
  /// pixels then fall through to later rules or to "unknown".
  ColorDictionary without_rule(std::uint8_t fine_id) const;

 private:
  void index_cells();

  FuzzyPartition partition_;
  std::vector<ColorRule> rules_;
  std::array<ColorName, kFineLevels> names_{};
  std::array<Rgb, kFineLevels> palette_{};
  std::array<std::vector<std::uint16_t>, 64> cell_rules_{};
  std::array<std::array<std::uint8_t, 256>, 3> label_lut_{};
  bool unordered_ = false;
};

/// First matching rule in dictionary order; kFineUnknown if none matches.
std::uint8_t quantize_pixel(const Rgb& rgb, const ColorDictionary& dict);

/// Fine map, 50 levels. Processed stripe by stripe.
ColorMap quantize_image(const RasterImage& image, const ColorDictionary& dict,
                        std::size_t tile_height = 0, std::size_t threads = 1);

/// Fine (50-level) to coarse (12-level) map through the parent table.
/// Throws Integrity on a code >= 50 or a map that is not 50-level.
ColorMap coarsen(const ColorMap& fine, const ColorDictionary& dict);

struct DictionaryReport {
  bool exhaustive = false;
  bool exclusive = false;
  std::uint64_t unknown_count = 0;
  /// Triples matched by more than one rule (only counted when the
  /// dictionary claims order independence).
  std::uint64_t overlap_count = 0;
  std::array<std::uint64_t, kFineLevels> per_category{};
};

/// Sweeps all 2^24 RGB triples.
DictionaryReport validate_dictionary(const ColorDictionary& dict, std::size_t threads = 1);

}  // namespace qnq

#endif  // QNQ_COLOR_NAMING_HPP
