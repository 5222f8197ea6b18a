#pragma once

#include <founded/closed.hpp>

namespace founded {

/// A 2-valued interpretation as the sorted list of its true atoms.
struct TwoValuedModel {
	std::vector<AtomId> trueAtoms; // canonical atom order

	bool operator==(const TwoValuedModel&) const = default;
};

/// Models in canonical order: by their true-atom lists, compared in
/// canonical atom order.
struct ModelSet {
	std::shared_ptr<const AtomTable> atoms;
	std::vector<TwoValuedModel>      models;
	std::size_t                      count = 0;    // models found, may exceed models.size() under a limit
	bool                             exact = true; // false when the search stopped early

	bool contains(const TwoValuedModel& m) const;
	std::vector<std::string> trueAtomNames(std::size_t i) const;
	/// "{p, ¬q}, {¬p, q}" or "no model".
	std::string render() const;
	/// As render() when at most maxShown models exist, else "N models" or
	/// "at least N models".
	std::string summary(std::size_t maxShown) const;
	bool operator==(const ModelSet& o) const { return models == o.models; }
};

/// Sorts and deduplicates.
void canonicalize(ModelSet& set);
TwoValuedModel modelOf(const std::vector<bool>& values, const AtomTable& atoms);
Interpretation toInterpretation(const TwoValuedModel& m, const Interpretation& like);

struct ConstraintOptions {
	/// Keep at most this many models; counting continues while the number of
	/// undefined atoms is at most exactCountLimit.
	std::optional<std::size_t> limit;
	std::size_t                exactCountLimit = 30;
	/// Enforce A <=> B for every combined rule A <- B.
	bool completion = true;
};

/// 2-valued extensions of a consistent founded model satisfying every given
/// ground rule as an implication and, for complete predicates, the completion
/// as a biconditional.
ModelSet constraintModels(const GroundProgram& gp, const CompletedProgram& cp, const Interpretation& founded,
                          ConstraintOptions options = {});

/// Same without completion constraints.
ModelSet constraintModelsIncomplete(const GroundProgram& gp, const CompletedProgram& cp, const Interpretation& founded,
                                    ConstraintOptions options = {});

/// Drops every model in which some true atom of a closed predicate is
/// self-false with respect to the model itself.
ModelSet smsFilter(const ModelSet& models, const CompletedProgram& cp);

/// Direct check that m satisfies every ground rule and fact of gp as a
/// 2-valued implication.
bool satisfiesRules(const TwoValuedModel& m, const GroundProgram& gp);

/// Every T/F atom of founded has the same value in m.
bool extends(const TwoValuedModel& m, const Interpretation& founded);

} // namespace founded
