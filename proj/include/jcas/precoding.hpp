#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

namespace jcas {

enum class BeamformingMode { tdm, cm };

/// Slot scheduling and transmit precoding for the two JCAS modes.
///
/// TDM splits time: floor(alpha*T) sensing slots up front (K consecutive
/// per-target runs of floor(T_s/K)), the rest carries downlink traffic.
/// CM splits power: every slot carries one sensing beam (weight
/// sqrt(delta/K)) plus the UE beam (weight sqrt(1-delta)).
struct BeamformingPlan {
    BeamformingMode mode = BeamformingMode::tdm;
    int total_slots = 64;
    double alpha = 1.0; // TDM time share for sensing
    double delta = 1.0; // CM power share for sensing
    std::vector<double> sensing_aods; // one beam direction per hypothesized target
    double ue_aod = 0.0;
    double sensing_power = 1.0; // P_s, amplitude sqrt(P_s) on the sensing link
    double comm_power = 1.0;    // P_c, amplitude sqrt(P_c) on the UE link
    double beam_error = 0.0;    // angular error added to every sensing beam
    bool steered = true;        // false: unsteered broadside beam (no beamforming)

    int num_beams() const { return static_cast<int>(sensing_aods.size()); }
    void validate() const;
};

/// Per-slot assignment. beam[t] is the steered target index, or kCommSlot.
struct Schedule {
    static constexpr int kCommSlot = -1;
    std::vector<int> beam;

    int total_slots() const { return static_cast<int>(beam.size()); }
    int sensing_slots() const;
    int comm_slots() const { return total_slots() - sensing_slots(); }
    bool is_sensing(int t) const { return beam.at(t) != kCommSlot; }
    /// Indices of the slots that form the sensing observation window.
    std::vector<int> observation_slots() const;
};

/// Builds the slot labeling for the plan's mode. Throws config_error when
/// TDM cannot give each target at least one slot (floor(alpha*T) < K) or when
/// CM has fewer slots than targets.
Schedule slot_schedule(const BeamformingPlan& plan);

/// Transmit precoding vector (length M) for slot t of the schedule.
Eigen::VectorXcd precoder(const BeamformingPlan& plan, const Schedule& schedule,
                          int tx_antennas, int slot);

/// Received downlink sample at the UE: sqrt(P_c) * a_M(ue_aoa)^H w[t] s + z,
/// z ~ CN(0, ue_noise_variance).
std::complex<double> ue_received_sample(const BeamformingPlan& plan, const Schedule& schedule,
                                        int tx_antennas, int slot, std::complex<double> symbol,
                                        double ue_aoa, double ue_noise_variance,
                                        std::mt19937_64& rng);

} // namespace jcas
