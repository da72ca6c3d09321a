#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jcas/experiment.hpp"

namespace jcas {

inline constexpr const char* kVersion = "0.1.0";

/// Deterministic float formatting shared by every CSV writer.
std::string format_double(double v);

/// Tidy results table: detector,mode,axis,value,detection_rate,
/// false_alarm_rate,trials,epsilon.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Calibration table: target_pfa,epsilon,trials.
void write_calibration_csv(std::ostream& out,
                           const std::vector<std::pair<double, double>>& pfa_epsilon, int trials);

/// Per-trial eigenvalue dump (columnar: trial,index,eigenvalue).
void dump_eigenvalues_csv(std::ostream& out, const ResolvedExperiment& rx, Hypothesis hyp,
                          TrialSet set, int trials);

/// Per-trial received-matrix dump (columnar: trial,antenna,slot,re,im).
void dump_received_csv(std::ostream& out, const ResolvedExperiment& rx, Hypothesis hyp,
                       TrialSet set, int trials);

} // namespace jcas
