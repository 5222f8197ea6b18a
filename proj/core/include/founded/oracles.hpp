#pragma once

#include <founded/constraint.hpp>

namespace founded {

/// Brute-force reference semantics over ground programs. They do not use
/// the completion or founded modules.
struct OracleBudget {
	std::size_t maxGroundAtoms    = 16;
	std::size_t maxModelsExamined = std::size_t{1} << 16; // interpretations enumerated by model oracles
};

class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class NotStratified : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Kripke-Kleene: least 3-valued fixed point of the completion's
/// immediate-consequence operator, from all-undefined.
Interpretation fittingOracle(const GroundProgram& gp, OracleBudget budget = {});

/// 2-valued fixed points of the completion.
ModelSet supportedOracle(const GroundProgram& gp, OracleBudget budget = {});

/// Alternating-fixpoint well-founded model.
Interpretation wfsOracle(const GroundProgram& gp, OracleBudget budget = {});

/// Stable models: M equals the least model of the Gelfond-Lifschitz reduct by M.
ModelSet smsOracle(const GroundProgram& gp, OracleBudget budget = {});

/// Iterated least model over predicate strata.
Interpretation stratifiedOracle(const GroundProgram& gp, OracleBudget budget = {});

/// All 2-valued models of the rules read as material implications.
ModelSet foOracle(const GroundProgram& gp, OracleBudget budget = {});

} // namespace founded
