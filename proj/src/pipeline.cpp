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

#include "qnq/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <system_error>

#include "qnq/colormap_codec.hpp"
#include "qnq/error.hpp"
#include "qnq/image_io.hpp"
#include "qnq/qa_report.hpp"

namespace qnq {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string_view to_string(Quantizer q) {
  switch (q) {
    case Quantizer::Rgbiam: return "rgbiam";
    case Quantizer::Kmeans: return "kmeans";
    case Quantizer::Hybrid: return "hybrid";
  }
  return "?";
}

Quantizer parse_quantizer(std::string_view text) {
  if (text == "rgbiam") return Quantizer::Rgbiam;
  if (text == "kmeans") return Quantizer::Kmeans;
  if (text == "hybrid") return Quantizer::Hybrid;
  fail(ErrorKind::Usage, "unknown quantizer '" + std::string(text) + "'");
}

void PipelineConfig::validate() const {
  if (!(constancy.clip_percent >= 0.0 && constancy.clip_percent < 0.5))
    fail(ErrorKind::Usage, "clip percent must lie in [0, 0.5)");
  if (!(constancy.spike_fraction > 0.0 && constancy.spike_fraction < 1.0))
    fail(ErrorKind::Usage, "spike fraction must lie in (0, 1)");
  if (constancy.max_passes < 1) fail(ErrorKind::Usage, "max passes must be at least 1");
  if (texture_window < 3 || texture_window % 2 == 0)
    fail(ErrorKind::Usage, "texture window must be odd and >= 3");
  if (ram_budget == 0) fail(ErrorKind::Usage, "RAM budget must be positive");
  if (threads == 0) fail(ErrorKind::Usage, "thread count must be positive");
  if (quantizer != Quantizer::Rgbiam) kmeans.validate();
  for (const auto& g : emit)
    if (std::find(kArtifactGroups.begin(), kArtifactGroups.end(), g) == kArtifactGroups.end())
      fail(ErrorKind::Usage, "unknown artifact group '" + g + "'");
}

bool PipelineConfig::emits(std::string_view group) const {
  return emit.empty() || emit.count(std::string(group)) > 0;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<Rgb> codebook_palette(const Codebook& cb) {
  std::vector<Rgb> p;
  for (const auto& c : cb.centroids)
    p.push_back({byte_encode_unit(c[0] / 255.0), byte_encode_unit(c[1] / 255.0),
                 byte_encode_unit(c[2] / 255.0)});
  return p;
}

LevelOutputs process_level(std::string name, ColorMap map, std::vector<Rgb> palette,
                           const RasterImage& image, const PipelineConfig& config,
                           const TileScheme& scheme, StageTimes& times) {
  LevelOutputs lv;
  lv.name = std::move(name);
  lv.map = std::move(map);
  lv.palette = std::move(palette);

  auto t = Clock::now();
  lv.labels = label_components_streamed(lv.map, scheme, config.connectivity, config.threads);
  times.compute_ms[2] += ms_since(t);

  t = Clock::now();
  lv.aura4 = cross_aura(lv.map, AuraKind::Aura4);
  lv.aura8 = cross_aura(lv.map, AuraKind::Aura8);
  lv.texture = texture_mask(lv.aura4, config.texture_window);
  lv.perimeters = perimeters(lv.labels);
  times.compute_ms[3] += ms_since(t);

  t = Clock::now();
  lv.sdt = build_sdt(lv.labels, lv.map, image, scheme.tile_height, config.threads);
  times.compute_ms[4] += ms_since(t);

  t = Clock::now();
  lv.reconstruction = object_mean_view(lv.labels, lv.sdt);
  lv.error = error_image(image, lv.reconstruction);
  lv.rmse = rmse_all(image, lv.reconstruction);
  times.compute_ms[5] += ms_since(t);
  return lv;
}

}  // namespace

StageOutputs compute_stages(const RasterImage& input, const PipelineConfig& config,
                            const ColorDictionary& dict) {
  config.validate();
  StageOutputs out;
  out.width = input.width();
  out.height = input.height();
  out.scheme = config.tile_height == 0
                   ? TileScheme::from_budget(input.width(), input.height(), kTileBytesPerPixel,
                                             config.ram_budget)
                   : TileScheme{config.tile_height, config.ram_budget};
  out.scheme.validate(input.height());

  auto t = Clock::now();
  out.constancy = color_constancy(input, config.constancy, &out.constancy_trace);
  out.times.compute_ms[0] = ms_since(t);

  t = Clock::now();
  ColorMap fine = quantize_image(out.constancy, dict, out.scheme.tile_height, config.threads);
  std::vector<std::pair<std::string, ColorMap>> maps;
  std::vector<std::vector<Rgb>> palettes;
  if (config.quantizer == Quantizer::Rgbiam) {
    ColorMap coarse = coarsen(fine, dict);
    const auto& fp = dict.fine_palette();
    const auto& cp = basic_color_palette();
    maps.emplace_back("fine", std::move(fine));
    palettes.emplace_back(fp.begin(), fp.end());
    maps.emplace_back("coarse", std::move(coarse));
    palettes.emplace_back(cp.begin(), cp.end());
  } else {
    KMeansConfig kc = config.kmeans;
    kc.threads = config.threads;
    kc.init = config.quantizer == Quantizer::Hybrid ? InitMode::Deductive : InitMode::Random;
    out.kmeans = kmeans_run(out.constancy, kc, fine);
    maps.emplace_back("vq", out.kmeans->assignment);
    palettes.push_back(codebook_palette(out.kmeans->codebook));
  }
  out.times.compute_ms[1] = ms_since(t);

  for (std::size_t i = 0; i < maps.size(); ++i)
    out.levels.push_back(process_level(maps[i].first, std::move(maps[i].second),
                                       std::move(palettes[i]), out.constancy, config, out.scheme,
                                       out.times));
  return out;
}

namespace {

json rgb_object(const std::array<double, kBands>& v) {
  return json{{"R", v[0]}, {"G", v[1]}, {"B", v[2]}};
}

json compression_json(std::size_t levels) {
  const CompressionReport c = compression_report(levels);
  return json{{"levels", c.levels},
              {"bits_per_pixel", c.bits_per_pixel},
              {"ratio_vs_24bit", c.ratio_vs_24bit},
              {"nominal_accounting", c.nominal_accounting}};
}

json level_json(const LevelOutputs& lv, std::size_t n) {
  std::uint64_t area_sum = 0;
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0, rsum = 0;
  for (const auto& rec : lv.sdt.records) {
    area_sum += rec.area;
    const double r = roundness(rec.area, lv.perimeters[rec.id]);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    rsum += r;
  }
  const std::size_t segs = lv.labels.segment_count;
  std::size_t textured = 0;
  for (auto m : lv.texture) textured += m;
  std::size_t unknown = 0;
  if (lv.name == "fine")
    unknown = static_cast<std::size_t>(std::count(lv.map.codes.begin(), lv.map.codes.end(), kFineUnknown));
  else if (lv.name == "coarse")
    unknown = static_cast<std::size_t>(std::count(lv.map.codes.begin(), lv.map.codes.end(), kCoarseUnknown));

  json j;
  j["levels"] = lv.map.levels;
  j["connectivity"] = nullptr;
  j["segment_count"] = segs;
  j["area_sum"] = area_sum;
  j["mean_area"] = static_cast<double>(n) / static_cast<double>(segs);
  j["unknown_pixels"] = unknown;
  j["rmse"] = rgb_object(lv.rmse);
  j["error_norm"] = json{{"min", lv.error.norm_min()}, {"max", lv.error.norm_max()},
                         {"mean", lv.error.norm_mean()}};
  j["roundness"] = json{{"min", rmin}, {"max", rmax}, {"mean", rsum / static_cast<double>(segs)}};
  j["texture_fraction"] = static_cast<double>(textured) / static_cast<double>(n);
  j["sdt_memory"] = json{{"estimate_bytes", memory_estimate(segs)},
                         {"actual_bytes", memory_actual(segs)}};
  j["compression"] = compression_json(lv.map.levels);
  return j;
}

}  // namespace

json report_json(const StageOutputs& out, const PipelineConfig& config,
                 const std::vector<std::string>& artifacts) {
  const std::size_t n = out.width * out.height;
  json r;
  r["format"] = "qnq-report/1";
  r["input"] = json{{"file", config.input.filename().string()},
                    {"width", out.width},
                    {"height", out.height},
                    {"pixels", n}};

  json cfg;
  cfg["quantizer"] = std::string(to_string(config.quantizer));
  cfg["dictionary"] = config.dictionary_path ? config.dictionary_path->filename().string() : "default";
  cfg["connectivity"] = static_cast<int>(config.connectivity);
  cfg["clip_percent"] = config.constancy.clip_percent;
  cfg["spike_fraction"] = config.constancy.spike_fraction;
  cfg["max_passes"] = config.constancy.max_passes;
  cfg["texture_window"] = config.texture_window;
  if (config.quantizer != Quantizer::Rgbiam) {
    cfg["k"] = config.kmeans.k;
    cfg["iters"] = config.kmeans.max_iterations;
    cfg["change_threshold"] = config.kmeans.change_threshold;
    cfg["seed"] = config.kmeans.seed;
  }
  r["config"] = cfg;

  const auto stripes = stripe_ranges(out.height, out.scheme.tile_height);
  r["tiling"] = json{{"tile_height", out.scheme.tile_height},
                     {"ram_budget", out.scheme.ram_budget},
                     {"stripes", stripes.size()},
                     {"tile_buffer_bytes", out.scheme.tile_height * out.width * kTileBytesPerPixel}};

  json passes = json::array();
  for (const auto& p : out.constancy_trace.categories)
    passes.push_back(json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}));
  r["constancy"] = json{{"passes", out.constancy_trace.passes}, {"categories", passes}};

  if (out.kmeans) {
    json centroids = json::array();
    for (const auto& c : out.kmeans->codebook.centroids) centroids.push_back(json::array({c[0], c[1], c[2]}));
    r["kmeans"] = json{{"k", out.kmeans->codebook.k()},
                       {"iterations_used", out.kmeans->iterations_used},
                       {"sse_trace", out.kmeans->sse_trace},
                       {"changed_trace", out.kmeans->changed_trace},
                       {"centroids", centroids}};
  }

  json levels;
  for (const auto& lv : out.levels) {
    json j = level_json(lv, n);
    j["connectivity"] = static_cast<int>(config.connectivity);
    levels[lv.name] = std::move(j);
  }
  r["levels"] = levels;

  r["compression"] = json{{"fine", compression_json(50)}, {"coarse", compression_json(12)}};

  r["quality_indicators"] = json{
      {"automation", "no training data and no user-set parameter beyond the defaults"},
      {"efficiency", "stage timings in timings.json; SDT memory per level above"},
      {"robustness", "unknown_pixels per level above"},
      {"timeliness", "single pass per stage, linear in the pixel count"}};
  r["artifacts"] = artifacts;
  return r;
}

json timings_json(const StageTimes& times) {
  static constexpr const char* kNames[6] = {"1_color_constancy", "2_color_naming", "3_segmentation",
                                            "4_contours", "5_sdt", "6_reconstruction"};
  json stages;
  double total = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    stages[kNames[i]] = times.compute_ms[i];
    total += times.compute_ms[i];
  }
  return json{{"unit", "ms"},
              {"compute", stages},
              {"compute_total", total},
              {"io_read", times.read_ms},
              {"io_write", times.write_ms}};
}

namespace {

std::vector<std::uint8_t> scaled(const std::vector<std::uint8_t>& v, unsigned top) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>((v[i] * 255u + top / 2) / top);
  return out;
}

class ArtifactWriter {
 public:
  explicit ArtifactWriter(fs::path dir) : dir_(std::move(dir)) {}

  void image(const std::string& name, const RasterImage& img) {
    write_png(dir_ / name, img);
    names_.push_back(name);
  }
  void gray(const std::string& name, std::size_t w, std::size_t h, const std::vector<std::uint8_t>& v) {
    write_gray_png(dir_ / name, w, h, v);
    names_.push_back(name);
  }
  void bytes(const std::string& name, const std::vector<std::uint8_t>& b) {
    write_file_bytes(dir_ / name, b);
    names_.push_back(name);
  }
  void text(const std::string& name, const std::string& s) {
    write_text_file(dir_ / name, s);
    names_.push_back(name);
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  fs::path dir_;
  std::vector<std::string> names_;
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    fail(ErrorKind::Io, "cannot create output directory " + dir.string());
}

ColorDictionary load_dictionary(const PipelineConfig& config) {
  if (!config.dictionary_path) return ColorDictionary::default_dictionary();
  const auto bytes = read_file_bytes(*config.dictionary_path);
  return ColorDictionary::parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  config.validate();
  PipelineResult result;
  const ColorDictionary dict = load_dictionary(config);

  auto t = Clock::now();
  const RasterImage input = read_image(config.input);
  const double read_ms = ms_since(t);

  result.outputs = compute_stages(input, config, dict);
  StageOutputs& out = result.outputs;
  out.times.read_ms = read_ms;

  t = Clock::now();
  ensure_dir(config.output_dir);
  ArtifactWriter w(config.output_dir);
  const std::size_t W = out.width, H = out.height;
  if (config.emits("constancy")) w.image("constancy.png", out.constancy);
  for (const auto& lv : out.levels) {
    const std::string& n = lv.name;
    if (config.emits("maps")) {
      w.image(n + "_map.png", render_pseudocolor(lv.map, lv.palette));
      if (lv.map.levels == 50 || lv.map.levels == 12) w.bytes(n + "_map.qnq", pack_colormap(lv.map));
    }
    if (config.emits("segments")) {
      w.bytes("segments_" + n + ".seg", encode_segmentation(lv.labels));
      w.image("segments_" + n + ".png", render_labels(lv.labels));
    }
    if (config.emits("contours")) {
      w.gray("aura4_" + n + ".png", W, H, scaled(lv.aura4.values, 4));
      w.gray("aura8_" + n + ".png", W, H, scaled(lv.aura8.values, 8));
      if (&lv == &out.levels.front())
        w.gray("aura_sum_" + n + ".png", W, H, scaled(aura_sum(lv.aura4, lv.aura8).values, 16));
    }
    if (config.emits("texture")) w.gray("texture_" + n + ".png", W, H, scaled(lv.texture, 1));
    if (config.emits("sdt")) w.text("sdt_" + n + ".csv", sdt_to_csv(lv.sdt));
    if (config.emits("reconstruction")) w.image("reconstruction_" + n + ".png", lv.reconstruction);
    if (config.emits("error")) {
      w.gray("error_norm_" + n + ".png", W, H, lv.error.norm_to_gray());
      w.image("error_abs_" + n + ".png", RasterImage(W, H, lv.error.abs_diff));
    }
  }
  std::vector<std::string> names = w.names();
  names.push_back("report.json");
  names.push_back("timings.json");
  write_text_file(config.output_dir / "report.json", report_json(out, config, names).dump(2) + "\n");
  out.times.write_ms = ms_since(t);
  write_text_file(config.output_dir / "timings.json", timings_json(out.times).dump(2) + "\n");
  result.artifacts = std::move(names);
  return result;
}

void run_cross_validation(const std::vector<fs::path>& inputs, const PipelineConfig& config) {
  config.validate();
  if (inputs.size() < 2) fail(ErrorKind::Usage, "cross-validation needs at least two inputs");
  const ColorDictionary dict = load_dictionary(config);
  std::vector<RasterImage> images;
  for (const auto& p : inputs) images.push_back(read_image(p));

  CrossValidationConfig cv;
  cv.dictionary = &dict;
  cv.constancy = config.constancy;
  cv.kmeans = config.kmeans;
  cv.connectivity = config.connectivity;
  cv.tile_height = config.tile_height;
  cv.threads = config.threads;
  const IndicatorTable table = cross_validate(images, cv);
  const ZScoreTable z = standardize(table);

  ensure_dir(config.output_dir);
  write_text_file(config.output_dir / "indicators.csv", indicators_csv(table));
  write_text_file(config.output_dir / "zscores.csv", zscores_csv(z));

  // Total VQ error per column: the sum over images of each band's RMSE,
  // i.e. training error plus the errors on the held-out images.
  json totals;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::array<double, kBands> sum{};
    for (std::size_t row = 0; row < table.rows.size(); ++row)
      for (std::size_t b = 0; b < kBands; ++b)
        if (row % 5 == b) sum[b] += table.rows[row].values[c];
    totals[table.columns[c]] = rgb_object(sum);
  }
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    rows.push_back(json{{"indicator", table.rows[i].name},
                        {"orientation", std::string(to_string(table.rows[i].orientation))},
                        {"values", table.rows[i].values},
                        {"zscores", z.rows[i].values},
                        {"degenerate", z.rows[i].degenerate}});
  json doc{{"columns", table.columns},
           {"rows", rows},
           {"ultimate_score", z.ultimate},
           {"oriented_score", z.oriented},
           {"rmse_sum_over_images", totals}};
  write_text_file(config.output_dir / "crossval.json", doc.dump(2) + "\n");
}

}  // namespace qnq
