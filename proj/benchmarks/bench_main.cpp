// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

// The packaged benchmark_main archive can carry LTO bytecode from a
// different compiler build, so the entry point is compiled here.

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
