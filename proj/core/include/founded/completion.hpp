#pragma once

#include <founded/ground.hpp>

namespace founded {

/// Ground program extended with combined and inverse (completion) rules.
/// After renaming, every body is negation-free over the doubled atom space
/// where a negative GroundLiteral stands for n.p(...).
struct CompletedProgram {
	std::shared_ptr<const AtomTable> atoms;
	std::vector<PredicateDecl>       decls;
	std::vector<std::vector<PredId>> sccs;
	std::vector<GroundRule>          combinedRules;    // heads: positive atoms of complete predicates
	std::vector<GroundRule>          inverseRules;     // heads: n.-atoms, same order as combinedRules
	std::vector<GroundRule>          passthroughRules; // other predicates and all negative rules
	std::vector<GroundLiteral>       facts;            // everything not folded into a combined rule
	bool                             renamed = false;

	const PredicateDecl& decl(AtomId a) const { return decls[atoms->predicateOf(a)]; }
	std::size_t          size() const;
};

/// One combined rule per ground atom of each complete predicate. Positive
/// facts enter the disjunction as `true`; an atom with no rules gets `false`.
CompletedProgram combine(const GroundProgram& gp);

/// Adds n.A <- dual(B) for every combined rule A <- B.
CompletedProgram addInverseRules(CompletedProgram cp);

/// Pushes negation to the leaves and renames each negative literal to its n.-atom.
CompletedProgram renameNegations(CompletedProgram cp);

/// combine, addInverseRules, renameNegations.
CompletedProgram complete(const GroundProgram& gp);

/// De Morgan dual: the negation-normal form of "not e" over the doubled space.
GroundExpr dual(const GroundExpr& e);
/// Negation-normal form of e over the doubled space.
GroundExpr negationNormalForm(const GroundExpr& e);
bool       containsNegation(const GroundExpr& e);

std::string renderCompletedProgram(const CompletedProgram& cp);

} // namespace founded
