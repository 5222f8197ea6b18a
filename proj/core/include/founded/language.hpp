#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace founded {

/// Position of a token in program text. Lines and columns are 1-based.
struct SourceSpan {
	int line = 1;
	int column = 1;
	int length = 0;
	bool operator==(const SourceSpan&) const = default;
};

struct Term {
	enum class Kind { Constant, Variable };
	Kind        kind = Kind::Constant;
	std::string name;

	static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
	static Term variable(std::string n) { return {Kind::Variable, std::move(n)}; }
	bool isVariable() const { return kind == Kind::Variable; }
	bool operator==(const Term&) const = default;
};

struct Atom {
	std::string       predicate;
	std::vector<Term> args;
	bool operator==(const Atom&) const = default;
};

struct Literal {
	Atom atom;
	bool negative = false;
	bool operator==(const Literal&) const = default;
};

/// Hypothesis tree. In rule bodies negation is always a Neg node over a
/// positive Literal; Literal::negative is only used for conclusions and facts.
struct HypExpr {
	enum class Kind { Literal, Conj, Disj, Neg, Exists, Forall, True, False };
	Kind                     kind = Kind::True;
	Literal                  literal;
	std::vector<HypExpr>     children;
	std::vector<std::string> vars; // quantified variables (Exists/Forall)

	static HypExpr lit(Atom a) { HypExpr e; e.kind = Kind::Literal; e.literal.atom = std::move(a); return e; }
	static HypExpr constant(bool v) { HypExpr e; e.kind = v ? Kind::True : Kind::False; return e; }
	static HypExpr neg(HypExpr x) { HypExpr e; e.kind = Kind::Neg; e.children.push_back(std::move(x)); return e; }
	static HypExpr conj(std::vector<HypExpr> xs) { HypExpr e; e.kind = Kind::Conj; e.children = std::move(xs); return e; }
	static HypExpr disj(std::vector<HypExpr> xs) { HypExpr e; e.kind = Kind::Disj; e.children = std::move(xs); return e; }
	static HypExpr quant(Kind k, std::vector<std::string> vs, HypExpr body) {
		HypExpr e; e.kind = k; e.vars = std::move(vs); e.children.push_back(std::move(body)); return e;
	}
	bool operator==(const HypExpr&) const = default;
};

struct Rule {
	Literal    conclusion;
	HypExpr    body;
	SourceSpan span;
	bool operator==(const Rule& o) const { return conclusion == o.conclusion && body == o.body; }
};

struct Fact {
	Literal    literal;
	SourceSpan span;
	bool operator==(const Fact& o) const { return literal == o.literal; }
};

enum class Certainty { Certain, Uncertain };
enum class Completeness { Complete, Incomplete, NotApplicable };
enum class Closedness { Closed, Open };

/// Per-predicate declaration. Unset fields are filled by resolveDeclarations.
struct PredicateDecl {
	std::string                 predicate;
	std::optional<Certainty>    certainty;
	std::optional<Completeness> completeness;
	std::optional<Closedness>   closedness;

	bool isCertain() const { return certainty == Certainty::Certain; }
	bool isComplete() const { return completeness == Completeness::Complete; }
	bool isClosed() const { return closedness == Closedness::Closed; }
	bool operator==(const PredicateDecl&) const = default;
};

struct Program {
	std::map<std::string, PredicateDecl> decls;
	std::vector<Rule>                    rules;
	std::vector<Fact>                    facts;
	std::vector<std::string>             warnings;

	/// Predicate name to arity for every predicate used in a rule or fact.
	std::map<std::string, std::size_t> arities() const;
	/// Every predicate mentioned in a rule, fact, or declaration.
	std::set<std::string> predicates() const;
	bool hasNegativeFactsOrConclusions() const;
};

class DeclarationError : public std::runtime_error {
public:
	DeclarationError(std::string predicate, const std::string& what)
		: std::runtime_error(what), predicate_(std::move(predicate)) {}
	const std::string& predicate() const { return predicate_; }
private:
	std::string predicate_;
};

enum class Polarity { Positive, Negative };

/// Edges run from each hypothesis predicate to the conclusion predicate.
struct DependencyGraph {
	struct Edge {
		std::string from;
		std::string to;
		Polarity    polarity;
		bool operator<(const Edge& o) const {
			return std::tie(from, to, polarity) < std::tie(o.from, o.to, o.polarity);
		}
		bool operator==(const Edge&) const = default;
	};
	std::vector<std::string> nodes; // sorted
	std::vector<Edge>        edges; // sorted, unique
};

DependencyGraph dependencyGraph(const Program& program);

struct DefinedUsing {
	std::string predicate;
	std::string uses;
	bool        throughNegation = false;
	bool operator==(const DefinedUsing&) const = default;
};

/// Transitive closure of the defined-using relation. One entry per
/// (predicate, uses) pair; throughNegation is set if any path has a negative edge.
std::vector<DefinedUsing> definedUsing(const Program& program);

/// Strongly connected components in dependency order. Each component is
/// sorted; ties between ready components go to the lexicographically least.
std::vector<std::vector<std::string>> sccOrder(const Program& program);

/// Predicates that may not be declared certain given the program's rules
/// and its explicit uncertain declarations.
std::set<std::string> mustBeUncertain(const Program& program);

/// Predicates appearing in the conclusion of some rule.
std::set<std::string> conclusionPredicates(const Program& program);

/// Fills in every declaration and validates explicit ones.
/// Throws DeclarationError on an illegal combination.
Program resolveDeclarations(const Program& program);

std::string_view toString(Certainty c);
std::string_view toString(Completeness c);

} // namespace founded
