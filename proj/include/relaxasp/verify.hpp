#pragma once

#include <relaxasp/elimination.hpp>
#include <relaxasp/strips.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace relaxasp {

//! Shape of randomly generated problems. Atom and action counts are drawn
//! uniformly from [1, max_atoms] and [0, max_actions].
struct InstanceShape {
    std::size_t max_atoms    = 6;
    std::size_t max_actions  = 6;
    double      pre_density  = 0.3;
    double      add_density  = 0.3;
    double      del_density  = 0.2;
    double      init_density = 0.15;
    double      goal_density = 0.35;
    Cost        max_cost     = 3;
};

[[nodiscard]] StripsProblem random_problem(std::mt19937_64& rng, const InstanceShape& shape);

//! Problem number `index` of the campaign seeded with `seed`.
[[nodiscard]] StripsProblem random_problem(std::uint64_t seed, std::size_t index, const InstanceShape& shape);

struct CheckOutcome {
    std::string name;
    bool        passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckOutcome> checks;

    [[nodiscard]] bool                passed() const;
    [[nodiscard]] const CheckOutcome* find(std::string_view name) const;
};

struct VerifyOptions {
    std::size_t                   max_actions = 16;
    std::vector<OrderingStrategy> orderings   = {OrderingStrategy::min_degree, OrderingStrategy::input_order};
};

//! Runs every encoding through the semantics engine and compares the model
//! sets with the brute-force oracle. Check names:
//!   solvable, p-stable, acyc-stable, hplus[p],
//!   and per ordering: pc-plans[o], pd-pc[o], pd-plans[o], hplus[o], pc-acyclic[o].
//! Throws TooManyActions when the problem exceeds the oracle bound.
[[nodiscard]] VerificationReport verify_instance(const RelaxedProblem& problem, const VerifyOptions& options = {});

struct CampaignEntry {
    std::size_t        index = 0;
    StripsProblem      problem;
    VerificationReport report;
};

//! Verifies problems 0..count-1 of the campaign `seed` on `jobs` threads.
//! Entries come back in index order.
[[nodiscard]] std::vector<CampaignEntry> run_campaign(std::uint64_t seed, std::size_t count, const InstanceShape& shape,
                                                      const VerifyOptions& options = {}, std::size_t jobs = 1);

} // namespace relaxasp
