#include "jcas/precoding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcas/array.hpp"
#include "jcas/errors.hpp"
#include "jcas/rng.hpp"

namespace jcas {

void BeamformingPlan::validate() const {
    if (total_slots < 1) throw config_error("plan: total_slots must be positive");
    if (alpha < 0.0 || alpha > 1.0) throw config_error("plan: alpha must lie in [0,1]");
    if (delta < 0.0 || delta > 1.0) throw config_error("plan: delta must lie in [0,1]");
    if (sensing_aods.empty()) throw config_error("plan: at least one sensing beam required");
    if (sensing_power <= 0.0) throw config_error("plan: sensing_power must be positive");
    if (comm_power < 0.0) throw config_error("plan: comm_power must be nonnegative");
}

int Schedule::sensing_slots() const {
    int n = 0;
    for (int b : beam) n += (b != kCommSlot);
    return n;
}

std::vector<int> Schedule::observation_slots() const {
    std::vector<int> slots;
    slots.reserve(beam.size());
    for (int t = 0; t < total_slots(); ++t) {
        if (beam[t] != kCommSlot) slots.push_back(t);
    }
    return slots;
}

Schedule slot_schedule(const BeamformingPlan& plan) {
    plan.validate();
    const int k = plan.num_beams();
    const int total = plan.total_slots;
    Schedule schedule;
    schedule.beam.assign(total, Schedule::kCommSlot);

    if (plan.mode == BeamformingMode::cm) {
        const int per_target = total / k;
        if (per_target < 1) {
            throw config_error("slot_schedule: CM needs total_slots >= num targets (" +
                               std::to_string(total) + " < " + std::to_string(k) + ")");
        }
        // K consecutive runs; floor-division leftovers extend the last run.
        for (int t = 0; t < total; ++t) {
            schedule.beam[t] = std::min(t / per_target, k - 1);
        }
    } else {
        const int sensing_span = static_cast<int>(std::floor(plan.alpha * total));
        if (sensing_span < k) {
            throw config_error("slot_schedule: TDM needs floor(alpha*T) >= num targets (" +
                               std::to_string(sensing_span) + " < " + std::to_string(k) + ")");
        }
        const int per_target = sensing_span / k;
        // K consecutive runs; leftovers go to communication.
        for (int t = 0; t < k * per_target; ++t) {
            schedule.beam[t] = t / per_target;
        }
    }
    return schedule;
}

namespace {
Eigen::VectorXcd sensing_beam(const BeamformingPlan& plan, int tx_antennas, int target) {
    const ArraySpec tx{tx_antennas, ArrayRole::transmit};
    if (!plan.steered) {
        // Unsteered transmission: same symbol on all elements, no phase taper,
        // equivalent to a fixed broadside beam.
        return steering_vector(tx, std::numbers::pi / 2.0);
    }
    return steering_vector(tx, plan.sensing_aods.at(target) + plan.beam_error);
}
} // namespace

Eigen::VectorXcd precoder(const BeamformingPlan& plan, const Schedule& schedule,
                          int tx_antennas, int slot) {
    if (slot < 0 || slot >= schedule.total_slots()) {
        throw config_error("precoder: slot index out of range");
    }
    const ArraySpec tx{tx_antennas, ArrayRole::transmit};
    const int k = plan.num_beams();
    const int target = schedule.beam[slot];

    if (plan.mode == BeamformingMode::cm) {
        Eigen::VectorXcd w = std::sqrt(plan.delta / k) * sensing_beam(plan, tx_antennas, target);
        if (plan.delta < 1.0) {
            w += std::sqrt(1.0 - plan.delta) * steering_vector(tx, plan.ue_aod);
        }
        return w;
    }
    if (target == Schedule::kCommSlot) {
        return steering_vector(tx, plan.ue_aod);
    }
    return sensing_beam(plan, tx_antennas, target) / std::sqrt(static_cast<double>(k));
}

std::complex<double> ue_received_sample(const BeamformingPlan& plan, const Schedule& schedule,
                                        int tx_antennas, int slot, std::complex<double> symbol,
                                        double ue_aoa, double ue_noise_variance,
                                        std::mt19937_64& rng) {
    const ArraySpec tx{tx_antennas, ArrayRole::transmit};
    const Eigen::VectorXcd w = precoder(plan, schedule, tx_antennas, slot);
    const std::complex<double> gain =
        steering_vector(tx, ue_aoa).dot(w) * std::sqrt(plan.comm_power);
    std::complex<double> z{0.0, 0.0};
    if (ue_noise_variance > 0.0) z = draw_cn(rng, ue_noise_variance);
    return gain * symbol + z;
}

} // namespace jcas
