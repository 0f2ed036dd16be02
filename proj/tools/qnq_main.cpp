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

// qnq: color naming, superpixel segmentation and object-mean reconstruction
// of an RGB image.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qnq/error.hpp"
#include "qnq/image_io.hpp"
#include "qnq/parallel.hpp"
#include "qnq/pipeline.hpp"

namespace {

int exit_code(qnq::ErrorKind kind) {
  switch (kind) {
    case qnq::ErrorKind::Usage:
    case qnq::ErrorKind::Range: return 2;
    case qnq::ErrorKind::Io: return 3;
    case qnq::ErrorKind::Format: return 4;
    case qnq::ErrorKind::Capacity: return 5;
    case qnq::ErrorKind::Integrity: return 6;
  }
  return 1;
}

void report_error(std::string_view kind, const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c == '\n' ? ' ' : c;
  }
  std::cerr << "error kind=" << kind << " message=\"" << escaped << "\"\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color naming, superpixels and object-mean reconstruction of RGB images"};
  qnq::PipelineConfig cfg;
  std::string input, out = "qnq_out", quantizer = "rgbiam", dictionary;
  std::vector<std::string> emit, cross;
  int connectivity = 8;
  bool dump = false;

  app.add_option("--input", input, "Input image (PNG or binary PPM, 8-bit RGB)");
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--quantizer", quantizer, "rgbiam, kmeans or hybrid")
      ->check(CLI::IsMember({"rgbiam", "kmeans", "hybrid"}))
      ->capture_default_str();
  app.add_option("--dictionary", dictionary, "Color dictionary file (default: built in)");
  app.add_flag("--dump-dictionary", dump, "Print the built-in dictionary and exit");
  app.add_option("--tile-height", cfg.tile_height, "Rows per stripe (0: from the RAM budget)")
      ->capture_default_str();
  app.add_option("--ram-budget", cfg.ram_budget, "Streaming buffer budget in bytes")
      ->capture_default_str();
  app.add_option("--connectivity", connectivity, "4 or 8")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  app.add_option("--clip-percent", cfg.constancy.clip_percent, "Histogram tail clip, a fraction")
      ->capture_default_str();
  app.add_option("--spike-fraction", cfg.constancy.spike_fraction, "Minimum mass of a spike")
      ->capture_default_str();
  app.add_option("--max-passes", cfg.constancy.max_passes, "Color constancy passes")
      ->capture_default_str();
  auto* k_opt = app.add_option("--k", cfg.kmeans.k, "Codebook size")->capture_default_str();
  auto* it_opt = app.add_option("--iters", cfg.kmeans.max_iterations, "k-means iterations")
                     ->capture_default_str();
  auto* th_opt = app.add_option("--change-threshold", cfg.kmeans.change_threshold,
                                "Stop when fewer pixels than this fraction move")
                     ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", cfg.kmeans.seed, "Random seed")->capture_default_str();
  app.add_option("--texture-window", cfg.texture_window, "Odd texture window size")
      ->capture_default_str();
  app.add_option("--emit", emit, "Artifact groups: constancy,maps,segments,contours,texture,sdt,"
                                 "reconstruction,error (default: all)")
      ->delimiter(',');
  app.add_option("--cross-validate", cross, "Two or more images: train k-means on each, apply to all")
      ->expected(2, -1);
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    report_error("usage", e.what());
    return 2;
  }

  try {
    if (dump) {
      std::cout << qnq::ColorDictionary::default_text();
      return 0;
    }
    cfg.output_dir = out;
    cfg.quantizer = qnq::parse_quantizer(quantizer);
    cfg.connectivity = connectivity == 4 ? qnq::Connectivity::Four : qnq::Connectivity::Eight;
    if (!dictionary.empty()) cfg.dictionary_path = dictionary;
    cfg.emit.insert(emit.begin(), emit.end());
    if (cfg.quantizer == qnq::Quantizer::Rgbiam) {
      for (auto* o : {k_opt, it_opt, th_opt, seed_opt})
        if (o->count() > 0)
          std::cerr << "warning: " << o->get_name() << " is ignored with --quantizer rgbiam\n";
    }

    if (!cross.empty()) {
      std::vector<std::filesystem::path> paths(cross.begin(), cross.end());
      qnq::run_cross_validation(paths, cfg);
      std::cout << "wrote indicators.csv, zscores.csv, crossval.json to " << cfg.output_dir.string()
                << "\n";
      return 0;
    }
    if (input.empty()) qnq::fail(qnq::ErrorKind::Usage, "--input is required");
    cfg.input = input;
    const qnq::PipelineResult r = qnq::run_pipeline(cfg);
    for (const auto& lv : r.outputs.levels)
      std::cout << lv.name << ": " << lv.labels.segment_count << " segments, rmse "
                << lv.rmse[0] << " " << lv.rmse[1] << " " << lv.rmse[2] << "\n";
    std::cout << r.artifacts.size() << " artifacts in " << cfg.output_dir.string() << "\n";
    return 0;
  } catch (const qnq::Error& e) {
    report_error(qnq::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    report_error("capacity", "out of memory");
    return 5;
  } catch (const std::exception& e) {
    report_error("integrity", e.what());
    return 6;
  }
}
