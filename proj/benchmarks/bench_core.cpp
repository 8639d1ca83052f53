// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "taes/key_recovery.hpp"
#include "taes/rng.hpp"

namespace {

using namespace taes;

const Block kKey = Block::from_hex("2b7e151628aed2a6abf7158809cf4f3c");
const Block kPlain = Block::from_hex("3243f6a8885a308d313198a2e0370734");

TrojanConfig bench_config(int q_max) {
  TrojanConfig c;
  c.trigger_positions = {2, 8, 93, 104, 126};
  c.trigger_values = {1, 1, 1, 0, 1};
  c.q_max = q_max;
  return c;
}

void BM_ExpandKey(benchmark::State& state) {
  const RoundKey key = RoundKey::from_block(kKey, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_key(key));
  }
}
BENCHMARK(BM_ExpandKey);

void BM_EncryptBlock(benchmark::State& state) {
  const RoundKey key = RoundKey::from_block(kKey, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encrypt_block(kPlain, key));
  }
}
BENCHMARK(BM_EncryptBlock);

void BM_MulticycleEncryption(benchmark::State& state) {
  const KeySchedule ks = expand_key(RoundKey::from_block(kKey, 0));
  CoreSim core(ks);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_encryption(core, kPlain));
  }
}
BENCHMARK(BM_MulticycleEncryption);

void BM_ReverseKeySchedule(benchmark::State& state) {
  const KeySchedule ks = expand_key(RoundKey::from_block(kKey, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reverse_key_schedule(ks.keys[10]));
  }
}
BENCHMARK(BM_ReverseKeySchedule);

void BM_RunAttack(benchmark::State& state) {
  const KeySchedule ks = expand_key(RoundKey::from_block(kKey, 0));
  const TrojanConfig config = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    TamperedCore core = insert_trojan(ks, config);
    benchmark::DoNotOptimize(run_attack(core, config));
  }
}
BENCHMARK(BM_RunAttack)->Arg(1)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
