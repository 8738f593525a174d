// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Exit status: 0 = completed without detection,
// 2 = completed and the verifier flagged tampering, 1 = error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scramsim/config.hpp"
#include "scramsim/error.hpp"
#include "scramsim/harness.hpp"
#include "scramsim/report_io.hpp"
#include "scramsim/scrambler.hpp"

namespace fs = std::filesystem;
using namespace scramsim;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitDetected = 2;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  std::optional<std::string> noise_kind;
  std::optional<double> noise_peak_mv;
  std::optional<int> adc_bits;
  std::optional<double> threshold_mv;
  std::optional<double> safety_factor;
  std::optional<double> offset_mv;
};

void AddCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "Scenario config (JSON)");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--noise-kind", f.noise_kind, "none | uniform | gaussian");
  cmd->add_option("--noise-peak-mv", f.noise_peak_mv,
                  "Noise peak (uniform) or sigma (gaussian), mV");
  cmd->add_option("--adc-bits", f.adc_bits, "ADC resolution, 8..16 bits");
  cmd->add_option("--threshold-mv", f.threshold_mv,
                  "Detection threshold, mV (skips calibration)");
  cmd->add_option("--safety-factor", f.safety_factor,
                  "Multiplier on the calibrated worst-case diff");
  cmd->add_option("--offset-mv", f.offset_mv,
                  "Force the device input offset, mV");
}

ScenarioConfig BuildConfig(const CommonFlags& f) {
  ScenarioConfig cfg;
  if (!f.config.empty()) cfg = LoadConfig(f.config);
  if (f.seed) cfg.seed = *f.seed;
  if (f.noise_kind) cfg.noise.kind = NoiseKindFromString(*f.noise_kind);
  if (f.noise_peak_mv) cfg.noise.amplitude = *f.noise_peak_mv * 1e-3;
  if (f.adc_bits) cfg.verifier.adc.bits = *f.adc_bits;
  if (f.threshold_mv) cfg.verifier.v_th_detect = *f.threshold_mv * 1e-3;
  if (f.safety_factor) cfg.calibration.safety_factor = *f.safety_factor;
  if (f.offset_mv) cfg.device.v_os = *f.offset_mv * 1e-3;
  cfg.Validate();
  return cfg;
}

std::ofstream OpenOut(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / name).string());
  return out;
}

std::string Mv(double volts) { return FormatDouble(volts * 1e3) + " mV"; }

int RunAndReport(const ScenarioConfig& cfg, const fs::path& out_dir,
                 bool write_waveforms) {
  const RunReport report = RunScenario(cfg);
  {
    auto out = OpenOut(out_dir, "trace.csv");
    WriteTraceCsv(out, report);
  }
  {
    auto out = OpenOut(out_dir, "summary.json");
    out << SummaryToJson(report);
  }
  if (write_waveforms) {
    const TimeGrid grid = cfg.grid.ToGrid();
    auto a = OpenOut(out_dir, "sens_true.csv");
    WriteCsv(a, Waveform(grid, report.sens_true));
    auto b = OpenOut(out_dir, "sens_line.csv");
    WriteCsv(b, Waveform(grid, report.sens_line));
    auto c = OpenOut(out_dir, "scram_tx.csv");
    WriteCsv(c, Waveform(grid, report.scram_tx));
  }

  const RunSummary& s = report.summary;
  std::cout << "device v_os " << Mv(s.device.v_os) << ", sec "
            << FormatDouble(s.device.sec_enrolled) << " V\n"
            << "threshold " << Mv(s.v_th_detect)
            << (s.threshold_calibrated ? " (calibrated)" : "") << "\n"
            << "max diff " << Mv(s.max_diff) << "\n";
  if (!s.first_detection) {
    std::cout << "no detection over " << s.n_samples << " samples\n";
    return kExitClean;
  }
  std::cout << "first detection at sample " << s.first_detection->sample
            << " (t = " << FormatDouble(s.first_detection->time_s) << " s)";
  if (s.injected_amplitude_at_detection) {
    std::cout << ", injected amplitude "
              << Mv(*s.injected_amplitude_at_detection);
  }
  std::cout << "\n";
  return kExitDetected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavioral simulator of a signed analog sensor link"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* sweep = app.add_subcommand("sweep-dc", "DC characteristic of the scrambler");
  AddCommon(sweep, flags);
  std::size_t points = 81;
  std::vector<double> sweep_offsets_mv{-7.0, 0.0, 7.0};
  sweep->add_option("--points", points, "Points per curve")->capture_default_str();
  sweep->add_option("--offsets-mv", sweep_offsets_mv,
                    "Device offsets whose secrets are swept")
      ->capture_default_str();

  auto* calibrate = app.add_subcommand("calibrate", "Derive the detection threshold");
  AddCommon(calibrate, flags);

  auto* run = app.add_subcommand("run", "Run the configured scenario");
  AddCommon(run, flags);
  bool write_waveforms = false;
  run->add_flag("--write-waveforms", write_waveforms,
                "Also export sens/scram waveforms as time_s,volts CSV");

  auto* attack = app.add_subcommand("attack", "Run a ramp MitM attack scenario");
  AddCommon(attack, flags);
  double slope = 1.0;
  double start = 0.0;
  attack->add_option("--slope", slope, "Ramp slope, V/s")->capture_default_str();
  attack->add_option("--start", start, "Attack start time, s")->capture_default_str();
  attack->add_flag("--write-waveforms", write_waveforms,
                   "Also export sens/scram waveforms as time_s,volts CSV");

  auto* mc = app.add_subcommand("montecarlo", "Device population study");
  AddCommon(mc, flags);
  std::size_t n_devices = 100;
  mc->add_option("--devices", n_devices, "Number of devices")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitError;
  }

  try {
    ScenarioConfig cfg = BuildConfig(flags);
    const fs::path out_dir = flags.out;

    if (sweep->parsed()) {
      const Scrambler scrambler(cfg.scrambler);
      std::vector<double> secrets;
      for (double mv : sweep_offsets_mv) {
        secrets.push_back(SecretFromOffset(mv * 1e-3, cfg.device.amplifier));
      }
      const auto rows =
          DcSweep(scrambler, secrets, cfg.scrambler.trans_sens.in_min,
                  cfg.scrambler.trans_sens.in_max, points);
      auto out = OpenOut(out_dir, "dc_sweep.csv");
      WriteDcSweepCsv(out, rows);
      std::cout << "a_scale " << FormatDouble(scrambler.a_scale())
                << " V, b_offset " << FormatDouble(scrambler.b_offset())
                << " V, " << rows.size() << " rows -> "
                << (out_dir / "dc_sweep.csv").string() << "\n";
      return kExitClean;
    }

    if (calibrate->parsed()) {
      const CalibrationReport report = RunCalibration(cfg);
      {
        auto out = OpenOut(out_dir, "calibration.json");
        out << CalibrationToJson(report);
      }
      SaveConfig(WithThreshold(cfg, report), out_dir / "calibrated_config.json");
      for (std::size_t i = 0; i < report.secrets.size(); ++i) {
        std::cout << "sec " << FormatDouble(report.secrets[i]) << " V: max diff "
                  << Mv(report.per_secret_max_diff[i]) << "\n";
      }
      std::cout << "v_th_detect " << Mv(report.v_th_detect) << " (worst sec "
                << FormatDouble(report.argmax_secret) << " V)\n";
      return kExitClean;
    }

    if (run->parsed()) return RunAndReport(cfg, out_dir, write_waveforms);

    if (attack->parsed()) {
      cfg.attack.kind = AttackKind::kRamp;
      cfg.attack.param = slope;
      cfg.attack.start_s = start;
      cfg.Validate();
      return RunAndReport(cfg, out_dir, write_waveforms);
    }

    if (mc->parsed()) {
      const MonteCarloReport report = RunMonteCarlo(cfg, n_devices);
      {
        auto out = OpenOut(out_dir, "montecarlo.csv");
        WriteMonteCarloCsv(out, report);
      }
      {
        auto out = OpenOut(out_dir, "population.csv");
        WritePopulationCsv(out, report);
      }
      {
        auto out = OpenOut(out_dir, "montecarlo.json");
        out << MonteCarloToJson(report);
      }
      std::cout << report.devices.size() << " devices, " << report.undetected
                << " undetected, detection amplitude max "
                << Mv(report.detection_amplitude.max) << ", min |dsec| "
                << FormatDouble(report.min_pairwise_sec_distance) << " V"
                << (report.secret_collision ? " (COLLISION)" : "") << "\n";
      return kExitClean;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
