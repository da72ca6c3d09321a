#include "jcas/report.hpp"

#include <cstdio>

namespace jcas {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "detector,mode,axis,value,detection_rate,false_alarm_rate,trials,epsilon\n";
    for (const auto& r : rows) {
        out << r.detector << ',' << r.mode << ',' << r.axis << ',' << format_double(r.value)
            << ',' << format_double(r.detection_rate) << ',' << format_double(r.false_alarm_rate)
            << ',' << r.trials << ',' << format_double(r.epsilon) << '\n';
    }
}

void write_calibration_csv(std::ostream& out,
                           const std::vector<std::pair<double, double>>& pfa_epsilon, int trials) {
    out << "target_pfa,epsilon,trials\n";
    for (const auto& [pfa, eps] : pfa_epsilon) {
        out << format_double(pfa) << ',' << format_double(eps) << ',' << trials << '\n';
    }
}

void dump_eigenvalues_csv(std::ostream& out, const ResolvedExperiment& rx, Hypothesis hyp,
                          TrialSet set, int trials) {
    out << "trial,index,eigenvalue\n";
    for (int trial = 0; trial < trials; ++trial) {
        const ObservationBatch batch = simulate_observation(rx, hyp, set, trial);
        for (int i = 0; i < batch.eigenvalues.size(); ++i) {
            out << trial << ',' << (i + 1) << ',' << format_double(batch.eigenvalues(i)) << '\n';
        }
    }
}

void dump_received_csv(std::ostream& out, const ResolvedExperiment& rx, Hypothesis hyp,
                       TrialSet set, int trials) {
    out << "trial,antenna,slot,re,im\n";
    for (int trial = 0; trial < trials; ++trial) {
        const ObservationBatch batch = simulate_observation(rx, hyp, set, trial);
        for (int n = 0; n < batch.received.rows(); ++n) {
            for (int t = 0; t < batch.received.cols(); ++t) {
                out << trial << ',' << n << ',' << t << ','
                    << format_double(batch.received(n, t).real()) << ','
                    << format_double(batch.received(n, t).imag()) << '\n';
            }
        }
    }
}

} // namespace jcas
