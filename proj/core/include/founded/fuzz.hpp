#pragma once

#include <founded/engine.hpp>

#include <random>

namespace founded {

struct FuzzOptions {
	std::uint64_t seed            = 1;
	std::size_t   count           = 100;
	std::size_t   maxPredicates   = 3;
	std::size_t   maxConstants    = 3;
	std::size_t   maxRules        = 6;
	bool          stratifiedOnly  = false; // only programs whose predicates can all be certain
	OracleBudget  budget;
};

/// A random program with conjunctive bodies, no negative facts or
/// conclusions, and a Herbrand base within the budget.
std::string randomProgramText(std::mt19937_64& rng, const FuzzOptions& options);

/// Names of the checks run per program.
const std::vector<std::string>& fuzzChecks();

struct CheckOutcome {
	std::string check;
	std::string detail;
};

/// Runs every applicable check; returns the first failure. Throws
/// BudgetExceeded if the program is too large for the oracles.
std::optional<CheckOutcome> checkProgram(const Program& parsed, const OracleBudget& budget);

/// Number of ground rules against the n^k * r bound.
struct GroundingBound {
	std::size_t rules = 0;
	std::size_t bound = 0;
};
GroundingBound groundingBound(const Program& resolved);

/// Greedily drops facts, rules and body literals while the same check
/// keeps failing.
std::string minimize(const std::string& text, const std::string& check, const OracleBudget& budget);

struct Counterexample {
	std::size_t index = 0;
	std::string check;
	std::string detail;
	std::string program; // minimized
};

struct FuzzReport {
	std::size_t                             generated = 0;
	std::map<std::string, std::size_t>      applied; // check name -> programs checked
	std::vector<Counterexample>             counterexamples;
	std::string                             render() const;
};

FuzzReport fuzz(const FuzzOptions& options);

} // namespace founded
