#pragma once

#include "abwave/path_phase.hpp"
#include "abwave/wavefront.hpp"

namespace abwave {

// One Huygens step: every target amplitude is the phase-weighted sum over the
// source samples with the 2D line-source kernel 1/sqrt(distance).  Phases are
// taken relative to the center-to-center reference path before
// exponentiation.  The per-target accumulation order is fixed (outside-in
// symmetric pairs, compensated), so results are identical for every thread
// count and exactly mirror symmetric for mirror-symmetric inputs.
// Throws DegenerateGeometry when the stations are closer than 10 sample
// spacings.
Wavefront huygens_step(const Wavefront& w, double target_z,
                       std::vector<double> target_xs, const FieldModel& field,
                       const PathPhaseModel& model, double t = 0.0,
                       int threads = 1);

// Sum of per-channel wavefronts with the relative phase of each channel's
// representative path attached: amps = sum_c amps_c exp(i dphi_c),
// dphi_c = (q/hbar) (circ(path_c) - circ(path_0)).
// Throws ChannelMismatch unless all channels share station and grid.
Wavefront combine_channels(const std::vector<Wavefront>& channels,
                           const AlternativeMinimal& model,
                           const FieldModel& field, const SourceRef& src,
                           double t = 0.0);

}  // namespace abwave
