#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssrl/config.hpp"
#include "ssrl/image.hpp"
#include "ssrl/losses.hpp"
#include "ssrl/noise.hpp"
#include "ssrl/tomography.hpp"
#include "ssrl/train.hpp"

namespace ssrl {

namespace fs = std::filesystem;

/// Command-line overrides applied on top of the config file.
struct RunOptions {
  std::optional<fs::path> config;
  std::optional<fs::path> out;
  std::optional<std::uint64_t> seed;
};

// --- dataset directories -----------------------------------------------------
// manifest.csv: image_id,<field>...,unit with one F32R file per field.

struct DatasetRecord {
  std::string id;
  std::map<std::string, Image> fields;
};

void write_dataset(const fs::path& dir, const std::vector<DatasetRecord>& records,
                   const std::vector<std::string>& field_order, Unit unit);
std::vector<DatasetRecord> read_dataset(const fs::path& dir);
/// One field of every record, in manifest order.
std::vector<Image> read_field(const fs::path& dir, const std::string& field);

/// Refuses to reuse a directory that already has content.
void prepare_output_dir(const fs::path& dir);

// --- simulation building blocks ---------------------------------------------

/// Default CT acquisition for this toolkit's phantoms.
struct CtSetup {
  double pixel_pitch_mm = 0.25;
  std::size_t views = 90;
  std::size_t bins_per_pixel = 2;
  CtNoiseParams noise;
  bool split = true;
};

struct CtRecord {
  Image clean, noisy, fbp_odd, fbp_even;
};

CtRecord simulate_ct(const Image& y, const CtSetup& setup, RngStream& rng);

/// Pairs for a whole generated dataset: fields clean, noisy (+ fbp_odd,
/// fbp_even for CT when split).
std::vector<DatasetRecord> simulate_dataset(const DatasetSpec& spec, const CtSetup& ct, const MixedNoiseParams& cam);

// --- config sections ----------------------------------------------------------

PseudoPredictor parse_pseudo(Config& cfg, const std::string& section);
LearningSetup parse_setup(Config& cfg);
TrainConfig parse_train(Config& cfg);
Network build_network(Config& cfg, std::size_t channels, std::uint64_t seed);

/// Trained model bundle on disk: checkpoint plus its inference rule.
void save_denoiser(const fs::path& dir, const Denoiser& d, const LearningSetup& setup);
Denoiser load_denoiser(const fs::path& dir);

void write_train_log(const fs::path& path, const std::vector<TrainLogRow>& log);

// --- commands -----------------------------------------------------------------

void cmd_generate(const RunOptions& opt);
void cmd_train(const RunOptions& opt);
void cmd_denoise(const RunOptions& opt);
void cmd_eval(const RunOptions& opt);
void cmd_select_g(const RunOptions& opt);
/// suite: thm1, prop1, prop2, cross, sigma, noise-means or all. Returns the
/// number of failed checks.
std::size_t cmd_verify(const RunOptions& opt, const std::string& suite, std::size_t instances);
void cmd_mask_debug(const RunOptions& opt);

}  // namespace ssrl
