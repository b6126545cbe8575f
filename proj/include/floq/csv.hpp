#pragma once

/// Deterministic serialization: shortest round-trip decimals, fixed
/// column order, LF endings. Identical inputs give identical bytes.

#include <ostream>
#include <string>

#include "floq/sweep.hpp"

namespace floq {

/// Shortest decimal that round-trips the double ("nan"/"inf"/"-inf"
/// for non-finite values).
std::string format_double(double v);

void write_sweep_csv(const SweepResult& r, std::ostream& os);
void write_scaling_csv(const ScalingResult& r, std::ostream& os);
void write_sweep_json(const SweepResult& r, std::ostream& os);
void write_scaling_json(const ScalingResult& r, std::ostream& os);

std::string sweep_csv_string(const SweepResult& r);
std::string scaling_csv_string(const ScalingResult& r);

}  // namespace floq
