#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jcas/array.hpp"
#include "jcas/errors.hpp"
#include "jcas/precoding.hpp"
#include "jcas/rng.hpp"

using namespace jcas;

namespace {
constexpr double pi = std::numbers::pi;

BeamformingPlan make_plan(BeamformingMode mode, int slots, double alpha, double delta, int k) {
    BeamformingPlan plan;
    plan.mode = mode;
    plan.total_slots = slots;
    plan.alpha = alpha;
    plan.delta = delta;
    plan.ue_aod = 0.35;
    for (int i = 0; i < k; ++i) plan.sensing_aods.push_back(1.0 + 0.4 * i);
    return plan;
}

int run_length(const Schedule& s, int beam) {
    int count = 0;
    for (int b : s.beam) count += (b == beam);
    return count;
}
} // namespace

TEST_CASE("CM schedule partitions slots into per-target runs") {
    const auto s = slot_schedule(make_plan(BeamformingMode::cm, 64, 1.0, 0.5, 4));
    CHECK(s.total_slots() == 64);
    CHECK(s.sensing_slots() == 64);
    for (int k = 0; k < 4; ++k) CHECK(run_length(s, k) == 16);
    // Runs are consecutive.
    for (int t = 0; t < 64; ++t) CHECK(s.beam[t] == t / 16);
}

TEST_CASE("TDM schedule: sensing block then communication") {
    const auto s = slot_schedule(make_plan(BeamformingMode::tdm, 64, 0.5, 1.0, 4));
    CHECK(s.sensing_slots() == 32);
    CHECK(s.comm_slots() == 32);
    for (int k = 0; k < 4; ++k) CHECK(run_length(s, k) == 8);
    for (int t = 0; t < 32; ++t) CHECK(s.beam[t] == t / 8);
    for (int t = 32; t < 64; ++t) CHECK(s.beam[t] == Schedule::kCommSlot);
}

TEST_CASE("TDM with alpha=1 and one target senses every slot") {
    const auto s = slot_schedule(make_plan(BeamformingMode::tdm, 64, 1.0, 1.0, 1));
    CHECK(s.sensing_slots() == 64);
    CHECK(s.comm_slots() == 0);
}

TEST_CASE("leftover slots: CM extends the last target, TDM hands them to comm") {
    const auto cm = slot_schedule(make_plan(BeamformingMode::cm, 10, 1.0, 0.5, 3));
    CHECK(run_length(cm, 0) == 3);
    CHECK(run_length(cm, 1) == 3);
    CHECK(run_length(cm, 2) == 4);

    const auto tdm = slot_schedule(make_plan(BeamformingMode::tdm, 10, 0.7, 1.0, 3));
    CHECK(tdm.sensing_slots() == 6); // floor(7/3)=2 per target
    CHECK(tdm.comm_slots() == 4);
}

TEST_CASE("schedule conservation for arbitrary parameters") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> slots(1, 200);
    std::uniform_int_distribution<int> targets(1, 6);
    std::uniform_real_distribution<double> alphas(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const int t = slots(rng);
        const int k = targets(rng);
        const double a = alphas(rng);
        auto plan = make_plan(BeamformingMode::tdm, t, a, 1.0, k);
        if (static_cast<int>(std::floor(a * t)) < k) {
            CHECK_THROWS_AS(slot_schedule(plan), config_error);
        } else {
            const auto s = slot_schedule(plan);
            CHECK(s.sensing_slots() + s.comm_slots() == t);
        }
        if (t >= k) {
            const auto s = slot_schedule(make_plan(BeamformingMode::cm, t, 1.0, 0.5, k));
            CHECK(s.sensing_slots() == t);
        }
    }
}

TEST_CASE("TDM with too few sensing slots is a configuration error") {
    CHECK_THROWS_WITH_AS(slot_schedule(make_plan(BeamformingMode::tdm, 64, 0.01, 1.0, 4)),
                         doctest::Contains("floor(alpha*T)"), config_error);
}

TEST_CASE("CM precoder interpolates between sensing and communication") {
    const int m = 8;
    const ArraySpec tx{m, ArrayRole::transmit};

    auto plan = make_plan(BeamformingMode::cm, 16, 1.0, 1.0, 2);
    auto s = slot_schedule(plan);
    SUBCASE("delta=1 is pure sensing") {
        const auto w = precoder(plan, s, m, 0);
        const Eigen::VectorXcd expected = steering_vector(tx, plan.sensing_aods[0]) / std::sqrt(2.0);
        CHECK((w - expected).norm() < 1e-12);
    }
    SUBCASE("delta=0 is pure communication") {
        plan.delta = 0.0;
        s = slot_schedule(plan);
        const auto w = precoder(plan, s, m, 5);
        CHECK((w - steering_vector(tx, plan.ue_aod)).norm() < 1e-12);
    }
}

TEST_CASE("TDM precoder norms") {
    const int m = 8;
    auto plan = make_plan(BeamformingMode::tdm, 64, 0.5, 1.0, 4);
    const auto s = slot_schedule(plan);
    CHECK(precoder(plan, s, m, 0).norm() == doctest::Approx(0.5).epsilon(1e-12)); // 1/sqrt(4)
    CHECK(precoder(plan, s, m, 40).norm() == doctest::Approx(1.0).epsilon(1e-12));

    auto single = make_plan(BeamformingMode::tdm, 8, 1.0, 1.0, 1);
    const auto s1 = slot_schedule(single);
    const ArraySpec tx{m, ArrayRole::transmit};
    const auto w = precoder(single, s1, m, 3);
    CHECK((w - steering_vector(tx, single.sensing_aods[0])).norm() < 1e-12);
}

TEST_CASE("CM precoder power splits as delta/K + (1-delta) for separated beams") {
    const int m = 8;
    auto plan = make_plan(BeamformingMode::cm, 16, 1.0, 0.6, 2);
    plan.sensing_aods = {1.1, 2.0};
    plan.ue_aod = 2.8;
    const auto s = slot_schedule(plan);
    const ArraySpec tx{m, ArrayRole::transmit};
    for (int slot : {0, 8}) {
        const int k = s.beam[slot];
        const auto w = precoder(plan, s, m, slot);
        const double cross =
            std::abs((steering_vector(tx, plan.sensing_aods[k]).adjoint() *
                      steering_vector(tx, plan.ue_aod))(0, 0));
        const double expected = 0.6 / 2 + 0.4;
        const double bound = 2.0 * std::sqrt(0.6 * 0.4 / 2.0) * cross;
        CHECK(std::abs(w.squaredNorm() - expected) <= bound + 1e-12);
    }
}

TEST_CASE("TDM at alpha=1 and CM at delta=1 coincide for one target") {
    const int m = 8;
    auto tdm = make_plan(BeamformingMode::tdm, 32, 1.0, 1.0, 1);
    auto cm = make_plan(BeamformingMode::cm, 32, 1.0, 1.0, 1);
    const auto st = slot_schedule(tdm);
    const auto sc = slot_schedule(cm);
    REQUIRE(st.sensing_slots() == sc.sensing_slots());
    for (int t = 0; t < 32; ++t) {
        CHECK((precoder(tdm, st, m, t) - precoder(cm, sc, m, t)).norm() < 1e-12);
    }
}

TEST_CASE("unsteered plans use the broadside beam") {
    const int m = 8;
    auto plan = make_plan(BeamformingMode::tdm, 8, 1.0, 1.0, 1);
    plan.steered = false;
    const auto s = slot_schedule(plan);
    const ArraySpec tx{m, ArrayRole::transmit};
    CHECK((precoder(plan, s, m, 0) - steering_vector(tx, pi / 2.0)).norm() < 1e-12);
}

TEST_CASE("UE received sample") {
    const int m = 8;
    const ArraySpec tx{m, ArrayRole::transmit};
    auto rng = make_stream(33, 0, 0);

    SUBCASE("matched beam on a TDM comm slot returns sqrt(P_c)") {
        auto plan = make_plan(BeamformingMode::tdm, 10, 0.5, 1.0, 1);
        plan.comm_power = 4.0;
        const auto s = slot_schedule(plan);
        REQUIRE(!s.is_sensing(9));
        const auto y = ue_received_sample(plan, s, m, 9, {1.0, 0.0}, plan.ue_aod, 0.0, rng);
        CHECK(std::abs(y - std::complex<double>(2.0, 0.0)) < 1e-12);
    }
    SUBCASE("CM at delta=1 leaves only sensing-beam leakage") {
        auto plan = make_plan(BeamformingMode::cm, 10, 1.0, 1.0, 1);
        plan.comm_power = 1.0;
        const auto s = slot_schedule(plan);
        const auto y = ue_received_sample(plan, s, m, 0, {1.0, 0.0}, plan.ue_aod, 0.0, rng);
        const std::complex<double> expected =
            (steering_vector(tx, plan.ue_aod).adjoint() *
             steering_vector(tx, plan.sensing_aods[0]))(0, 0);
        CHECK(std::abs(y - expected) < 1e-12);
    }
    SUBCASE("beamforming gain peaks at the matched angle") {
        auto plan = make_plan(BeamformingMode::tdm, 10, 0.5, 1.0, 1);
        const auto matched = std::abs((steering_vector(tx, plan.ue_aod).adjoint() *
                                       steering_vector(tx, plan.ue_aod))(0, 0));
        const auto mismatched = std::abs((steering_vector(tx, plan.ue_aod + 0.4).adjoint() *
                                          steering_vector(tx, plan.ue_aod))(0, 0));
        CHECK(matched == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mismatched < 1.0);
    }
}
