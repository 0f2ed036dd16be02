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

#include "qnq/color_naming.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "qnq/error.hpp"
#include "qnq/parallel.hpp"

namespace qnq {

namespace {

constexpr std::array<std::string_view, kCoarseLevels> kBasicNames = {
    "black", "white", "gray",   "red",  "orange", "yellow",
    "green", "blue",  "purple", "pink", "brown",  "unknown"};

}  // namespace

std::string_view basic_color_name(std::uint8_t coarse_id) {
  return coarse_id < kBasicNames.size() ? kBasicNames[coarse_id] : "invalid";
}

const std::array<Rgb, kCoarseLevels>& basic_color_palette() {
  static const std::array<Rgb, kCoarseLevels> palette = {{
      {0, 0, 0},       {255, 255, 255}, {128, 128, 128}, {220, 20, 20},
      {255, 140, 0},   {255, 230, 0},   {30, 160, 30},   {30, 60, 220},
      {128, 0, 160},   {255, 150, 190}, {130, 80, 30},   {255, 0, 255},
  }};
  return palette;
}

FuzzyLabel membership(std::uint8_t value, const ChannelThresholds& thresholds) {
  if (value < thresholds.t[0]) return FuzzyLabel::L;
  if (value < thresholds.t[1]) return FuzzyLabel::ML;
  if (value < thresholds.t[2]) return FuzzyLabel::MH;
  return FuzzyLabel::H;
}

// ---------------------------------------------------------------------------
// Spectral rules

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  SpectralRule parse_comparison() {
    const auto [op_pos, op_len, op] = find_operator();
    SpectralRule rule;
    rule.op = op;
    ExprParser lhs(s_.substr(0, op_pos));
    ExprParser rhs(s_.substr(op_pos + op_len));
    lhs.parse_sum(+1, rule.terms);
    rhs.parse_sum(-1, rule.terms);
    bool has_channel = false;
    for (const auto& t : rule.terms)
      has_channel = has_channel || t.kind != LinearTerm::Kind::Constant;
    if (!has_channel) error("comparison does not reference any channel");
    return rule;
  }

 private:
  struct OperatorMatch {
    std::size_t pos;
    std::size_t len;
    CompareOp op;
  };

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Format, "spectral rule '" + std::string(s_) + "': " + what);
  }

  OperatorMatch find_operator() const {
    std::optional<OperatorMatch> found;
    int depth = 0;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const char c = s_[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth != 0 || (c != '<' && c != '>')) continue;
      if (found) error("more than one comparison operator");
      const bool eq = i + 1 < s_.size() && s_[i + 1] == '=';
      const CompareOp op = c == '<' ? (eq ? CompareOp::LessEqual : CompareOp::Less)
                                    : (eq ? CompareOp::GreaterEqual : CompareOp::Greater);
      found = OperatorMatch{i, eq ? 2u : 1u, op};
      if (eq) ++i;
    }
    if (!found) error("missing comparison operator");
    return *found;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  static std::optional<std::uint8_t> channel_bit(char c) {
    switch (c) {
      case 'R': return 1;
      case 'G': return 2;
      case 'B': return 4;
      default: return std::nullopt;
    }
  }

  std::uint8_t parse_channel() {
    skip_ws();
    if (pos_ >= s_.size()) error("expected a channel");
    const auto bit = channel_bit(s_[pos_]);
    if (!bit) error("expected R, G or B");
    ++pos_;
    return *bit;
  }

  std::int64_t parse_number() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t integer = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      integer = integer * 10 + (s_[pos_++] - '0');
      if (integer > 1'000'000'000) error("coefficient too large");
    }
    std::int64_t fraction = 0;
    std::int64_t scale = kCoefficientScale;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (scale == 1) error("at most six decimals are supported");
        scale /= 10;
        fraction += (s_[pos_++] - '0') * scale;
      }
    }
    if (pos_ == start) error("expected a number");
    return integer * kCoefficientScale + fraction;
  }

  bool next_is_number() {
    skip_ws();
    return pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.');
  }

  // atom := R | G | B | max(ch, ch, ...) | min(ch, ch, ...)
  LinearTerm parse_atom() {
    skip_ws();
    LinearTerm term;
    const auto rest = s_.substr(pos_);
    if (rest.starts_with("max") || rest.starts_with("min")) {
      term.kind = rest.starts_with("max") ? LinearTerm::Kind::Max : LinearTerm::Kind::Min;
      pos_ += 3;
      expect('(');
      term.channels = parse_channel();
      while (accept(',')) term.channels |= parse_channel();
      expect(')');
    } else {
      term.kind = LinearTerm::Kind::Channel;
      term.channels = parse_channel();
    }
    return term;
  }

  // term := number | atom | number '*' atom | atom '*' number
  LinearTerm parse_term() {
    if (next_is_number()) {
      const std::int64_t k = parse_number();
      if (accept('*')) {
        LinearTerm t = parse_atom();
        t.coefficient = k;
        return t;
      }
      return LinearTerm{LinearTerm::Kind::Constant, 0, k};
    }
    LinearTerm t = parse_atom();
    t.coefficient = accept('*') ? parse_number() : kCoefficientScale;
    return t;
  }

  void parse_sum(int sign, std::vector<LinearTerm>& out) {
    int term_sign = sign;
    if (accept('-'))
      term_sign = -sign;
    else
      accept('+');
    while (true) {
      LinearTerm t = parse_term();
      t.coefficient *= term_sign;
      out.push_back(t);
      if (accept('+'))
        term_sign = sign;
      else if (accept('-'))
        term_sign = -sign;
      else
        break;
    }
    if (!at_end()) error("unexpected trailing text");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::int64_t atom_value(const LinearTerm& t, const Rgb& rgb) {
  switch (t.kind) {
    case LinearTerm::Kind::Constant: return 1;
    case LinearTerm::Kind::Channel:
      return t.channels == 1 ? rgb[0] : t.channels == 2 ? rgb[1] : rgb[2];
    case LinearTerm::Kind::Max: {
      int v = 0;
      for (int c = 0; c < 3; ++c)
        if (t.channels & (1 << c)) v = std::max<int>(v, rgb[c]);
      return v;
    }
    case LinearTerm::Kind::Min: {
      int v = 255;
      for (int c = 0; c < 3; ++c)
        if (t.channels & (1 << c)) v = std::min<int>(v, rgb[c]);
      return v;
    }
  }
  return 0;
}

}  // namespace

SpectralRule parse_spectral_rule(std::string_view text, std::string identifier) {
  SpectralRule rule = ExprParser(text).parse_comparison();
  rule.identifier = identifier.empty() ? std::string(text) : std::move(identifier);
  return rule;
}

bool eval_rule(const SpectralRule& rule, const Rgb& rgb) {
  std::int64_t sum = 0;
  for (const auto& t : rule.terms) sum += t.coefficient * atom_value(t, rgb);
  switch (rule.op) {
    case CompareOp::Less: return sum < 0;
    case CompareOp::LessEqual: return sum <= 0;
    case CompareOp::Greater: return sum > 0;
    case CompareOp::GreaterEqual: return sum >= 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Dictionary text

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class DictionaryParser {
 public:
  std::size_t line_no = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Format, "dictionary line " + std::to_string(line_no) + ": " + what);
  }

  long parse_int(std::string_view w, long lo, long hi) const {
    long v = 0;
    if (w.empty()) error("expected an integer");
    for (char c : w) {
      if (!std::isdigit(static_cast<unsigned char>(c))) error("expected an integer, got '" + std::string(w) + "'");
      v = v * 10 + (c - '0');
      if (v > hi) break;
    }
    if (v < lo || v > hi)
      error("value " + std::string(w) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  std::size_t channel_index(std::string_view w) const {
    if (w == "R") return 0;
    if (w == "G") return 1;
    if (w == "B") return 2;
    error("expected channel R, G or B, got '" + std::string(w) + "'");
  }

  std::uint8_t fuzzy_mask(std::string_view labels) const {
    std::uint8_t mask = 0;
    for (auto label : split(labels, '|')) {
      if (label == "L") mask |= 1;
      else if (label == "ML") mask |= 2;
      else if (label == "MH") mask |= 4;
      else if (label == "H") mask |= 8;
      else error("unknown fuzzy label '" + std::string(label) + "'");
    }
    return mask;
  }

  std::uint8_t parent_id(std::string_view w) const {
    for (std::size_t i = 0; i < kBasicNames.size(); ++i)
      if (kBasicNames[i] == w) return static_cast<std::uint8_t>(i);
    error("unknown basic color '" + std::string(w) + "'");
  }

  static bool is_identifier(std::string_view w) {
    if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
    return std::all_of(w.begin(), w.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }
};

}  // namespace

ColorDictionary ColorDictionary::parse(std::string_view text) {
  ColorDictionary dict;
  DictionaryParser p;
  std::map<std::string, SpectralRule, std::less<>> named_rules;
  std::array<bool, kFineLevels> defined{};

  for (std::uint8_t id = 0; id < kFineLevels; ++id) {
    dict.names_[id] = {id, "unused_" + std::to_string(id), kCoarseUnknown};
    dict.palette_[id] = {128, 128, 128};
  }
  dict.names_[kFineUnknown].name = "unknown";
  dict.palette_[kFineUnknown] = {255, 0, 255};

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++p.line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view head = line;
    std::string_view body;
    if (const auto assign = line.find(":="); assign != std::string_view::npos) {
      head = trim(line.substr(0, assign));
      body = trim(line.substr(assign + 2));
    }
    const auto w = words(head);
    const std::string_view keyword = w[0];

    if (keyword == "threshold") {
      if (w.size() != 5 || !body.empty()) p.error("usage: threshold <R|G|B> t1 t2 t3");
      auto& t = dict.partition_.channels[p.channel_index(w[1])].t;
      for (int i = 0; i < 3; ++i) t[i] = static_cast<std::uint8_t>(p.parse_int(w[2 + i], 1, 254));
      if (!(t[0] < t[1] && t[1] < t[2])) p.error("thresholds must be strictly increasing");
    } else if (keyword == "semantics") {
      if (w.size() != 2) p.error("usage: semantics <ordered|unordered>");
      if (w[1] == "ordered") dict.unordered_ = false;
      else if (w[1] == "unordered") dict.unordered_ = true;
      else p.error("semantics must be 'ordered' or 'unordered'");
    } else if (keyword == "spectral") {
      if (w.size() != 2 || body.empty()) p.error("usage: spectral <name> := <comparison>");
      if (!DictionaryParser::is_identifier(w[1])) p.error("bad spectral rule name");
      if (named_rules.count(w[1])) p.error("duplicate spectral rule '" + std::string(w[1]) + "'");
      named_rules.emplace(std::string(w[1]), parse_spectral_rule(body, std::string(w[1])));
    } else if (keyword == "rule") {
      if (w.size() != 4 || body.empty()) p.error("usage: rule <fine_id> <name> <parent> := <conjuncts>");
      ColorRule rule;
      rule.fine_id = static_cast<std::uint8_t>(p.parse_int(w[1], 0, kFineUnknown - 1));
      rule.name = std::string(w[2]);
      const std::uint8_t parent = p.parent_id(w[3]);
      if (defined[rule.fine_id]) {
        const auto& prior = dict.names_[rule.fine_id];
        if (prior.name != rule.name || prior.parent_id != parent)
          p.error("fine id " + std::string(w[1]) + " redefined with a different name or parent");
      }
      defined[rule.fine_id] = true;
      dict.names_[rule.fine_id] = {rule.fine_id, rule.name, parent};

      for (auto conjunct : split(body, '&')) {
        if (conjunct.empty()) p.error("empty conjunct");
        if (conjunct == "true") continue;
        if (conjunct.starts_with("FS(")) {
          if (conjunct.back() != ')') p.error("unterminated FS(...)");
          const auto args = split(conjunct.substr(3, conjunct.size() - 4), ',');
          if (args.size() != 2) p.error("usage: FS(<channel>,<labels>)");
          rule.fuzzy_masks[p.channel_index(args[0])] &= p.fuzzy_mask(args[1]);
        } else if (DictionaryParser::is_identifier(conjunct) && conjunct != "R" &&
                   conjunct != "G" && conjunct != "B") {
          const auto it = named_rules.find(conjunct);
          if (it == named_rules.end()) p.error("undefined spectral rule '" + std::string(conjunct) + "'");
          rule.spectral.push_back(it->second);
        } else {
          try {
            rule.spectral.push_back(parse_spectral_rule(conjunct));
          } catch (const Error& e) {
            p.error(e.what());
          }
        }
      }
      dict.rules_.push_back(std::move(rule));
    } else if (keyword == "color") {
      if (w.size() != 5 || !body.empty()) p.error("usage: color <fine_id> r g b");
      const auto id = static_cast<std::uint8_t>(p.parse_int(w[1], 0, kFineUnknown));
      for (int c = 0; c < 3; ++c)
        dict.palette_[id][c] = static_cast<std::uint8_t>(p.parse_int(w[2 + c], 0, 255));
    } else {
      p.error("unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (dict.rules_.empty()) fail(ErrorKind::Format, "dictionary defines no rules");
  if (dict.rules_.size() > 0xFFFF) fail(ErrorKind::Capacity, "too many dictionary rules");
  dict.index_cells();
  return dict;
}

void ColorDictionary::index_cells() {
  for (std::size_t c = 0; c < 3; ++c)
    for (int v = 0; v < 256; ++v)
      label_lut_[c][v] = static_cast<std::uint8_t>(
          membership(static_cast<std::uint8_t>(v), partition_.channels[c]));
  for (std::size_t cell = 0; cell < 64; ++cell) {
    cell_rules_[cell].clear();
    const std::array<std::size_t, 3> labels = {cell / 16, (cell / 4) % 4, cell % 4};
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const auto& masks = rules_[i].fuzzy_masks;
      if ((masks[0] >> labels[0] & 1) && (masks[1] >> labels[1] & 1) && (masks[2] >> labels[2] & 1))
        cell_rules_[cell].push_back(static_cast<std::uint16_t>(i));
    }
  }
}

std::size_t ColorDictionary::cell_of(const Rgb& rgb) const {
  return label_lut_[0][rgb[0]] * 16u + label_lut_[1][rgb[1]] * 4u + label_lut_[2][rgb[2]];
}

ColorDictionary ColorDictionary::without_rule(std::uint8_t fine_id) const {
  ColorDictionary copy = *this;
  std::erase_if(copy.rules_, [&](const ColorRule& r) { return r.fine_id == fine_id; });
  if (fine_id < kFineUnknown)
    copy.names_[fine_id] = {fine_id, "unused_" + std::to_string(fine_id), kCoarseUnknown};
  copy.index_cells();
  return copy;
}

// ---------------------------------------------------------------------------
// Quantization

namespace {

bool rule_matches(const ColorRule& rule, const Rgb& rgb) {
  for (const auto& s : rule.spectral)
    if (!eval_rule(s, rgb)) return false;
  return true;
}

}  // namespace

std::uint8_t quantize_pixel(const Rgb& rgb, const ColorDictionary& dict) {
  const auto& rules = dict.rules();
  for (std::uint16_t i : dict.candidates(dict.cell_of(rgb)))
    if (rule_matches(rules[i], rgb)) return rules[i].fine_id;
  return kFineUnknown;
}

ColorMap quantize_image(const RasterImage& image, const ColorDictionary& dict,
                        std::size_t tile_height, std::size_t threads) {
  ColorMap map(image.width(), image.height(), kFineLevels);
  if (tile_height == 0) tile_height = image.height();
  const auto stripes = stripe_ranges(image.height(), tile_height);
  parallel_for(stripes.size(), threads, [&](std::size_t s) {
    const std::size_t first = stripes[s].begin * image.width();
    const std::size_t last = stripes[s].end * image.width();
    for (std::size_t i = first; i < last; ++i) map.codes[i] = quantize_pixel(image.pixel(i), dict);
  });
  return map;
}

ColorMap coarsen(const ColorMap& fine, const ColorDictionary& dict) {
  if (fine.levels != kFineLevels)
    fail(ErrorKind::Integrity, "coarsen expects a 50-level fine map, got " +
                                   std::to_string(fine.levels) + " levels");
  std::array<std::uint8_t, kFineLevels> parent{};
  for (std::uint8_t id = 0; id < kFineLevels; ++id) parent[id] = dict.parent(id);
  ColorMap coarse(fine.width, fine.height, kCoarseLevels);
  for (std::size_t i = 0; i < fine.codes.size(); ++i) {
    const std::uint8_t code = fine.codes[i];
    if (code >= kFineLevels)
      fail(ErrorKind::Integrity, "corrupted fine map: code " + std::to_string(code) +
                                     " at pixel " + std::to_string(i));
    coarse.codes[i] = parent[code];
  }
  return coarse;
}

DictionaryReport validate_dictionary(const ColorDictionary& dict, std::size_t threads) {
  // One partial report per red level, merged in order.
  std::vector<DictionaryReport> partial(256);
  const auto& rules = dict.rules();
  const bool check_overlap = dict.claims_order_independence();

  parallel_for(256, threads, [&](std::size_t r) {
    DictionaryReport& rep = partial[r];
    for (int g = 0; g < 256; ++g) {
      for (int b = 0; b < 256; ++b) {
        const Rgb rgb = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                         static_cast<std::uint8_t>(b)};
        const auto& cands = dict.candidates(dict.cell_of(rgb));
        std::uint8_t code = kFineUnknown;
        bool overlap = false;
        for (std::uint16_t i : cands) {
          if (!rule_matches(rules[i], rgb)) continue;
          if (code == kFineUnknown) {
            code = rules[i].fine_id;
            if (!check_overlap) break;
          } else if (rules[i].fine_id != code) {
            overlap = true;
            break;
          }
        }
        ++rep.per_category[code];
        if (overlap) ++rep.overlap_count;
      }
    }
  });

  DictionaryReport report;
  for (const auto& rep : partial) {
    for (std::size_t c = 0; c < kFineLevels; ++c) report.per_category[c] += rep.per_category[c];
    report.overlap_count += rep.overlap_count;
  }
  std::uint64_t total = 0;
  for (auto n : report.per_category) total += n;
  report.unknown_count = report.per_category[kFineUnknown];
  report.exhaustive = total == (1ull << 24);
  report.exclusive = report.overlap_count == 0;
  return report;
}

}  // namespace qnq
