#pragma once

#include <founded/language.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace founded {

class ParseError : public std::runtime_error {
public:
	ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

	const SourceSpan&               span() const { return span_; }
	const std::string&              message() const { return message_; }
	const std::vector<std::string>& expected() const { return expected_; }

private:
	SourceSpan               span_;
	std::string              message_;
	std::vector<std::string> expected_;
};

/// Parses program text:
///
///   program := (decl | clause)*
///   decl    := ("certain"|"uncertain"|"complete"|"incomplete"|"closed") pred ("," pred)* "."
///   clause  := literal ("<-" hyp)? "."
///   hyp     := ("some"|"each") var ("," var)* "|" hyp | disj
///   disj    := conj ("or" conj)*      conj := unit ("and" unit)*
///   unit    := "not" unit | "(" hyp ")" | "true" | "false" | literal
///
/// '%' starts a comment running to the end of the line.
Program parseProgram(std::string_view text);

/// Canonical text: declarations first (per predicate), then facts, then
/// rules, each group sorted. parseProgram(renderProgram(p)) is structurally p.
std::string renderProgram(const Program& program);

std::string renderTerm(const Term& t);
std::string renderAtom(const Atom& a);
std::string renderLiteral(const Literal& l);
std::string renderHyp(const HypExpr& e);
std::string renderRule(const Rule& r);

/// Same declarations, facts and rules, ignoring order, spans and warnings.
bool structurallyEqual(const Program& a, const Program& b);

} // namespace founded
