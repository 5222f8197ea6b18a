#pragma once

#include <founded/completion.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace founded {

enum class Truth : std::uint8_t { False = 0, Undefined = 1, True = 2 };

// Kleene connectives.
inline Truth kleeneNot(Truth t) { return static_cast<Truth>(2 - static_cast<int>(t)); }
inline Truth kleeneAnd(Truth a, Truth b) { return std::min(a, b); }
inline Truth kleeneOr(Truth a, Truth b) { return std::max(a, b); }

/// "true", "false" or "undefined".
std::string_view toString(Truth t);

/// A 3-valued interpretation over the ground atoms of a program. Atoms that
/// were never interned take the default of their predicate: false when
/// certain, undefined otherwise.
class Interpretation {
public:
	Interpretation() = default;
	Interpretation(std::shared_ptr<const AtomTable> atoms, std::vector<PredicateDecl> decls, std::vector<Truth> values,
	               std::vector<AtomId> conflicts = {});

	Truth                value(AtomId a) const { return values_[a]; }
	Truth                value(GroundLiteral l) const { return l.positive ? values_[l.atom] : kleeneNot(values_[l.atom]); }
	std::optional<Truth> value(std::string_view atomText) const;

	const std::vector<Truth>&  values() const { return values_; }
	const std::vector<AtomId>& conflicts() const { return conflicts_; }
	bool                       consistent() const { return conflicts_.empty(); }
	const AtomTable&           atoms() const { return *atoms_; }
	const std::shared_ptr<const AtomTable>& atomTable() const { return atoms_; }
	const std::vector<PredicateDecl>& decls() const { return decls_; }
	std::size_t                count(Truth t) const;

	/// Cell notation: "{p, ¬q, U r}" over all atoms in canonical order.
	std::string render() const;

	bool operator==(const Interpretation& o) const { return values_ == o.values_ && conflicts_ == o.conflicts_; }

private:
	std::shared_ptr<const AtomTable> atoms_;
	std::vector<PredicateDecl>       decls_;
	std::vector<Truth>               values_;
	std::vector<AtomId>              conflicts_;
};

/// Kleene evaluation of a variable-free body. A negative literal in the
/// doubled space reads the negation of its atom.
Truth eval3(const GroundExpr& body, const Interpretation& itp);

struct TraceStep {
	GroundLiteral                                 derived;
	std::string                                   ruleId; // c<i>, i<i>, r<i>, f<i>, "closure" or "self-false"
	std::vector<std::pair<GroundLiteral, Truth>> hypotheses;
	std::size_t                                   order = 0;
};

struct DerivationTrace {
	std::vector<TraceStep> steps;
	std::uint64_t          counter = 0; // firings + notifications (linearLfp), rule evaluations (foundedModel)
};

/// One line per firing: "atom <= rule-id [hyp=value, ...]".
std::string renderTrace(const DerivationTrace& trace, const AtomTable& atoms);

struct FoundedResult {
	Interpretation  model;
	DerivationTrace trace;
};

struct EvalOptions {
	/// Randomizes rule scan / worklist order; the result must not change.
	std::optional<std::uint64_t> shuffleSeed;
	bool                         recordTrace = true;
};

/// Reference evaluator: per SCC, rescans the SCC's rules until nothing new
/// fires, then makes underived atoms of certain predicates false.
FoundedResult foundedModel(const CompletedProgram& cp, EvalOptions options = {});

/// Same result in time linear in the size of the completed program: each
/// connective becomes a node; conjunctions count down unsatisfied inputs,
/// disjunctions fire on their first true input.
FoundedResult linearLfp(const CompletedProgram& cp, EvalOptions options = {});

} // namespace founded
