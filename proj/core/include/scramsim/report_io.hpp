// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "scramsim/harness.hpp"

namespace scramsim {

/// `time_s,sens_true,sens_line,scram_tx,scram_local,diff,detected`
void WriteTraceCsv(std::ostream& out, const RunReport& report);

std::string SummaryToJson(const RunReport& report);

/// {noise_kind, noise_peak, per_secret_max_diff[], v_th_detect,
///  argmax_secret, seed, ...}
std::string CalibrationToJson(const CalibrationReport& report);

/// `device_id,v_os_volts,sec_volts`
void WritePopulationCsv(std::ostream& out, const MonteCarloReport& report);

/// Per-device rows including the calibrated threshold and detection result.
void WriteMonteCarloCsv(std::ostream& out, const MonteCarloReport& report);

std::string MonteCarloToJson(const MonteCarloReport& report);

}  // namespace scramsim
