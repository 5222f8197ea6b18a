#pragma once

#include <founded/language.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace founded {

using ConstId = std::uint32_t;
using PredId  = std::uint32_t;
using AtomId  = std::uint32_t;

/// Constant order: numerals by value, then quoted strings lexicographically.
bool constantLess(std::string_view a, std::string_view b);

/// Interned ground atoms over a fixed constant domain.
class AtomTable {
public:
	AtomTable() = default;
	explicit AtomTable(std::vector<std::string> domain);

	const std::vector<std::string>& domain() const { return domain_; }
	std::optional<ConstId>          constant(std::string_view name) const;

	PredId                addPredicate(const std::string& name, std::size_t arity);
	std::optional<PredId> predicate(std::string_view name) const;
	std::size_t           numPredicates() const { return predNames_.size(); }
	const std::string&    predicateName(PredId p) const { return predNames_[p]; }
	std::size_t           arity(PredId p) const { return predArity_[p]; }

	AtomId                intern(PredId p, std::span<const ConstId> args);
	std::optional<AtomId> find(PredId p, std::span<const ConstId> args) const;
	/// Looks up an atom written as in program text, e.g. "shave('barber',x)" with constants only.
	std::optional<AtomId> find(std::string_view text) const;

	std::size_t              size() const { return atomPred_.size(); }
	PredId                   predicateOf(AtomId a) const { return atomPred_[a]; }
	std::span<const ConstId> args(AtomId a) const;
	const std::vector<AtomId>& atomsOf(PredId p) const { return predAtoms_[p]; }

	std::string name(AtomId a) const;
	/// Canonical atom order: predicate name, then arguments in constant order.
	bool less(AtomId a, AtomId b) const;
	std::vector<AtomId> sorted() const;

private:
	std::string key(PredId p, std::span<const ConstId> args) const;

	std::vector<std::string>                      domain_;
	std::unordered_map<std::string, ConstId>      constIndex_;
	std::vector<std::string>                      predNames_;
	std::vector<std::size_t>                      predArity_;
	std::unordered_map<std::string, PredId>       predIndex_;
	std::vector<std::vector<AtomId>>              predAtoms_;
	std::vector<PredId>                           atomPred_;
	std::vector<std::size_t>                      atomArgStart_;
	std::vector<ConstId>                          args_;
	std::unordered_map<std::string, AtomId>       atomIndex_;
};

/// A ground literal. In a completed program a negative literal names the
/// atom n.p(...) of the doubled atom space.
struct GroundLiteral {
	AtomId atom     = 0;
	bool   positive = true;
	bool operator==(const GroundLiteral&) const = default;
};

struct GroundExpr {
	enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or };
	Kind                    kind = Kind::True;
	GroundLiteral           lit;
	std::vector<GroundExpr> children;

	static GroundExpr constant(bool v) { GroundExpr e; e.kind = v ? Kind::True : Kind::False; return e; }
	static GroundExpr atom(AtomId a, bool positive = true) { GroundExpr e; e.kind = Kind::Atom; e.lit = {a, positive}; return e; }
	static GroundExpr negation(GroundExpr x) { GroundExpr e; e.kind = Kind::Not; e.children.push_back(std::move(x)); return e; }
	static GroundExpr conj(std::vector<GroundExpr> xs) { GroundExpr e; e.kind = Kind::And; e.children = std::move(xs); return e; }
	static GroundExpr disj(std::vector<GroundExpr> xs) { GroundExpr e; e.kind = Kind::Or; e.children = std::move(xs); return e; }
	bool operator==(const GroundExpr&) const = default;
};

struct GroundRule {
	GroundLiteral head;
	GroundExpr    body;
	std::size_t   sourceRule = 0; // index into Program::rules
};

struct GroundProgram {
	std::shared_ptr<const AtomTable>  atoms;
	std::vector<PredicateDecl>        decls; // indexed by PredId
	std::vector<std::vector<PredId>>  sccs;  // dependency order
	std::vector<GroundRule>           rules;
	std::vector<GroundLiteral>        facts;
	std::size_t                       size = 0;

	const std::vector<std::string>& domain() const { return atoms->domain(); }
	const PredicateDecl& decl(AtomId a) const { return decls[atoms->predicateOf(a)]; }
};

struct GroundOptions {
	/// Instantiate only assignments under which every top-level positive
	/// hypothesis over a certain extensional predicate is a given fact.
	/// Equivalent semantics; not used for golden output.
	bool pruneExtensional = false;
};

std::vector<std::string> constantDomain(const Program& program);

/// Grounds a resolved program over its constant domain.
GroundProgram ground(const Program& resolved, GroundOptions options = {});

/// Heads + connective nodes + literal occurrences (+1 per fact).
std::size_t groundSize(const GroundProgram& gp);
std::size_t exprSize(const GroundExpr& e);

/// Variables of a rule that are not bound by a quantifier.
std::vector<std::string> ruleVariables(const Rule& rule);

std::string renderGroundLiteral(const GroundLiteral& l, const AtomTable& atoms);
std::string renderGroundExpr(const GroundExpr& e, const AtomTable& atoms);
std::string renderGroundRule(const GroundRule& r, const AtomTable& atoms);
std::string renderGroundProgram(const GroundProgram& gp);

} // namespace founded
