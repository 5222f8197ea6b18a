#include <founded/parser.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace founded {

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
	: std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message)
	, span_(span)
	, message_(std::move(message))
	, expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Quoted, Arrow, LParen, RParen, Comma, Dot, Bar, End };

struct Token {
	Tok         kind = Tok::End;
	std::string text;
	SourceSpan  span;
};

const std::set<std::string, std::less<>> keywords = {
	"certain", "uncertain", "complete", "incomplete", "closed",
	"not", "and", "or", "some", "each", "true", "false",
};

bool isLetter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
	explicit Lexer(std::string_view text) : text_(text) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		for (;;) {
			skipSpaceAndComments();
			Token t;
			t.span = {line_, col_, 0};
			if (pos_ >= text_.size()) {
				out.push_back(t);
				return out;
			}
			char c = text_[pos_];
			std::size_t start = pos_;
			if (isLetter(c)) {
				while (pos_ < text_.size() && (isLetter(text_[pos_]) || isDigit(text_[pos_]) || text_[pos_] == '_')) advance();
				t.kind = Tok::Ident;
			}
			else if (isDigit(c)) {
				while (pos_ < text_.size() && isDigit(text_[pos_])) advance();
				t.kind = Tok::Number;
			}
			else if (c == '\'') {
				advance();
				while (pos_ < text_.size() && text_[pos_] != '\'' && text_[pos_] != '\n') advance();
				if (pos_ >= text_.size() || text_[pos_] != '\'') {
					t.span.length = static_cast<int>(pos_ - start);
					throw ParseError(t.span, "unterminated quoted constant", {"'"});
				}
				advance();
				t.kind = Tok::Quoted;
			}
			else if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
				advance();
				advance();
				t.kind = Tok::Arrow;
			}
			else {
				switch (c) {
					case '(': t.kind = Tok::LParen; break;
					case ')': t.kind = Tok::RParen; break;
					case ',': t.kind = Tok::Comma; break;
					case '.': t.kind = Tok::Dot; break;
					case '|': t.kind = Tok::Bar; break;
					default:
						t.span.length = 1;
						throw ParseError(t.span, std::string("unexpected character '") + c + "'");
				}
				advance();
			}
			t.text = std::string(text_.substr(start, pos_ - start));
			t.span.length = static_cast<int>(pos_ - start);
			out.push_back(std::move(t));
		}
	}

private:
	void advance() {
		if (text_[pos_] == '\n') { ++line_; col_ = 1; }
		else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) { ++col_; }
		++pos_;
	}
	void skipSpaceAndComments() {
		while (pos_ < text_.size()) {
			char c = text_[pos_];
			if (c == '%') {
				while (pos_ < text_.size() && text_[pos_] != '\n') advance();
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			}
			else {
				break;
			}
		}
	}

	std::string_view text_;
	std::size_t      pos_ = 0;
	int              line_ = 1;
	int              col_ = 1;
};

std::string describe(const Token& t) {
	if (t.kind == Tok::End) return "end of input";
	return "'" + t.text + "'";
}

void freeVariables(const HypExpr& e, std::set<std::string>& bound, std::set<std::string>& out) {
	switch (e.kind) {
		case HypExpr::Kind::Literal:
			for (const auto& t : e.literal.atom.args) {
				if (t.isVariable() && !bound.count(t.name)) out.insert(t.name);
			}
			break;
		case HypExpr::Kind::Exists:
		case HypExpr::Kind::Forall: {
			std::set<std::string> inner = bound;
			inner.insert(e.vars.begin(), e.vars.end());
			freeVariables(e.children.front(), inner, out);
			break;
		}
		default:
			for (const auto& c : e.children) freeVariables(c, bound, out);
	}
}

void findShadowing(const HypExpr& e, const std::set<std::string>& scope, std::set<std::string>& out) {
	if (e.kind == HypExpr::Kind::Exists || e.kind == HypExpr::Kind::Forall) {
		std::set<std::string> inner = scope;
		for (const auto& v : e.vars) {
			if (!inner.insert(v).second) out.insert(v);
		}
		findShadowing(e.children.front(), inner, out);
		return;
	}
	for (const auto& c : e.children) findShadowing(c, scope, out);
}

class Parser {
public:
	explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

	Program run() {
		while (peek().kind != Tok::End) {
			const Token& t = peek();
			if (t.kind == Tok::Ident && isDeclKeyword(t.text)) parseDecl();
			else parseClause();
		}
		return std::move(prog_);
	}

private:
	static bool isDeclKeyword(std::string_view s) {
		return s == "certain" || s == "uncertain" || s == "complete" || s == "incomplete" || s == "closed";
	}

	const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
	Token        next() { Token t = peek(); if (pos_ < toks_.size() - 1) ++pos_; return t; }
	bool         atKeyword(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

	[[noreturn]] void fail(const Token& at, const std::string& what, std::vector<std::string> expected) {
		std::string msg = what.empty() ? "unexpected " + describe(at) : what;
		if (what.empty() && !expected.empty()) {
			msg += ", expected ";
			for (std::size_t i = 0; i != expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
		}
		throw ParseError(at.span, msg, std::move(expected));
	}

	Token expect(Tok kind, const char* desc) {
		if (peek().kind != kind) fail(peek(), "", {desc});
		return next();
	}

	std::string predicateName() {
		const Token& t = peek();
		if (t.kind != Tok::Ident || keywords.count(t.text)) fail(t, "", {"predicate name"});
		return next().text;
	}

	void parseDecl() {
		Token kw = next();
		for (;;) {
			Token       nameTok = peek();
			std::string name    = predicateName();
			PredicateDecl& d = prog_.decls[name];
			d.predicate = name;
			auto conflict = [&](const char* other) {
				fail(nameTok, "contradictory declarations for '" + name + "': " + kw.text + " and " + other, {});
			};
			if (kw.text == "certain" || kw.text == "uncertain") {
				Certainty c = kw.text == "certain" ? Certainty::Certain : Certainty::Uncertain;
				if (d.certainty && *d.certainty != c) conflict(std::string(toString(*d.certainty)).c_str());
				d.certainty = c;
			}
			else if (kw.text == "complete" || kw.text == "incomplete") {
				Completeness c = kw.text == "complete" ? Completeness::Complete : Completeness::Incomplete;
				if (d.completeness && *d.completeness != c) conflict(std::string(toString(*d.completeness)).c_str());
				d.completeness = c;
			}
			else {
				d.closedness = Closedness::Closed;
			}
			if (peek().kind != Tok::Comma) break;
			next();
		}
		expect(Tok::Dot, "'.'");
	}

	Atom parseAtom() {
		Token nameTok = peek();
		Atom a;
		a.predicate = predicateName();
		if (peek().kind == Tok::LParen) {
			next();
			for (;;) {
				a.args.push_back(parseTerm());
				if (peek().kind != Tok::Comma) break;
				next();
			}
			expect(Tok::RParen, "')'");
		}
		checkArity(a, nameTok);
		return a;
	}

	Term parseTerm() {
		const Token& t = peek();
		if (t.kind == Tok::Number || t.kind == Tok::Quoted) return Term::constant(next().text);
		if (t.kind == Tok::Ident && !keywords.count(t.text) &&
		    std::all_of(t.text.begin(), t.text.end(), isLetter)) {
			return Term::variable(next().text);
		}
		fail(t, "", {"variable", "number", "quoted constant"});
	}

	void checkArity(const Atom& a, const Token& at) {
		auto [it, inserted] = arity_.emplace(a.predicate, a.args.size());
		if (!inserted && it->second != a.args.size()) {
			fail(at, "predicate '" + a.predicate + "' used with " + std::to_string(a.args.size()) +
			             " arguments, previously " + std::to_string(it->second), {});
		}
	}

	HypExpr parseHyp() {
		if (atKeyword("some") || atKeyword("each")) {
			Token kw = next();
			std::vector<std::string> vars;
			for (;;) {
				Token v = peek();
				if (v.kind != Tok::Ident || keywords.count(v.text) ||
				    !std::all_of(v.text.begin(), v.text.end(), isLetter)) {
					fail(v, "", {"variable"});
				}
				if (std::find(vars.begin(), vars.end(), v.text) != vars.end()) {
					fail(v, "variable '" + v.text + "' quantified twice", {});
				}
				vars.push_back(next().text);
				if (peek().kind != Tok::Comma) break;
				next();
			}
			expect(Tok::Bar, "'|'");
			HypExpr body = parseHyp();
			return HypExpr::quant(kw.text == "some" ? HypExpr::Kind::Exists : HypExpr::Kind::Forall,
			                      std::move(vars), std::move(body));
		}
		return parseDisj();
	}

	HypExpr parseDisj() {
		std::vector<HypExpr> xs;
		xs.push_back(parseConj());
		while (atKeyword("or")) {
			next();
			xs.push_back(parseConj());
		}
		return xs.size() == 1 ? std::move(xs.front()) : HypExpr::disj(std::move(xs));
	}

	HypExpr parseConj() {
		std::vector<HypExpr> xs;
		xs.push_back(parseUnit());
		while (atKeyword("and")) {
			next();
			xs.push_back(parseUnit());
		}
		return xs.size() == 1 ? std::move(xs.front()) : HypExpr::conj(std::move(xs));
	}

	HypExpr parseUnit() {
		if (atKeyword("not")) {
			next();
			return HypExpr::neg(parseUnit());
		}
		if (atKeyword("true")) { next(); return HypExpr::constant(true); }
		if (atKeyword("false")) { next(); return HypExpr::constant(false); }
		if (peek().kind == Tok::LParen) {
			next();
			HypExpr e = parseHyp();
			expect(Tok::RParen, "')'");
			return e;
		}
		if (peek().kind != Tok::Ident || keywords.count(peek().text)) {
			fail(peek(), "", {"'not'", "'('", "'true'", "'false'", "predicate name"});
		}
		return HypExpr::lit(parseAtom());
	}

	void parseClause() {
		Token   start = peek();
		Literal head;
		if (atKeyword("not")) {
			next();
			head.negative = true;
		}
		head.atom = parseAtom();
		if (peek().kind == Tok::Arrow) {
			next();
			Rule r;
			r.conclusion = std::move(head);
			r.body       = parseHyp();
			Token dot    = expect(Tok::Dot, "'.'");
			r.span       = clauseSpan(start, dot);
			std::set<std::string> bound, free;
			freeVariables(r.body, bound, free);
			for (const auto& t : r.conclusion.atom.args) {
				if (t.isVariable() && !free.count(t.name)) {
					throw ParseError(r.span, "variable '" + t.name + "' in the conclusion does not occur free in the hypotheses");
				}
			}
			for (const auto& t : r.conclusion.atom.args) {
				if (t.isVariable()) free.insert(t.name);
			}
			std::set<std::string> shadowed;
			findShadowing(r.body, free, shadowed);
			for (const auto& v : shadowed) {
				prog_.warnings.push_back(std::to_string(r.span.line) + ":" + std::to_string(r.span.column) +
				                         ": quantified variable '" + v + "' shadows an outer variable");
			}
			prog_.rules.push_back(std::move(r));
			return;
		}
		Token dot = expect(Tok::Dot, "'.'");
		Fact f;
		f.literal = std::move(head);
		f.span    = clauseSpan(start, dot);
		for (const auto& t : f.literal.atom.args) {
			if (t.isVariable()) throw ParseError(f.span, "fact contains variable '" + t.name + "'");
		}
		prog_.facts.push_back(std::move(f));
	}

	static SourceSpan clauseSpan(const Token& start, const Token& end) {
		SourceSpan s = start.span;
		if (end.span.line == start.span.line) s.length = end.span.column + end.span.length - start.span.column;
		else s.length = start.span.length;
		return s;
	}

	std::vector<Token>                 toks_;
	std::size_t                        pos_ = 0;
	Program                            prog_;
	std::map<std::string, std::size_t> arity_;
};

enum Prec { PrecQuant = 0, PrecDisj = 1, PrecConj = 2, PrecUnit = 3 };

int precedence(const HypExpr& e) {
	switch (e.kind) {
		case HypExpr::Kind::Exists:
		case HypExpr::Kind::Forall: return PrecQuant;
		case HypExpr::Kind::Disj:   return PrecDisj;
		case HypExpr::Kind::Conj:   return PrecConj;
		default:                    return PrecUnit;
	}
}

void renderHypTo(std::ostringstream& os, const HypExpr& e, int minPrec) {
	bool parens = precedence(e) < minPrec;
	if (parens) os << '(';
	switch (e.kind) {
		case HypExpr::Kind::Literal: os << renderLiteral(e.literal); break;
		case HypExpr::Kind::True:    os << "true"; break;
		case HypExpr::Kind::False:   os << "false"; break;
		case HypExpr::Kind::Neg:
			os << "not ";
			renderHypTo(os, e.children.front(), PrecUnit);
			break;
		case HypExpr::Kind::Conj:
		case HypExpr::Kind::Disj: {
			const char* sep = e.kind == HypExpr::Kind::Conj ? " and " : " or ";
			int childPrec = e.kind == HypExpr::Kind::Conj ? PrecUnit : PrecConj;
			for (std::size_t i = 0; i != e.children.size(); ++i) {
				if (i) os << sep;
				renderHypTo(os, e.children[i], childPrec);
			}
			break;
		}
		case HypExpr::Kind::Exists:
		case HypExpr::Kind::Forall:
			os << (e.kind == HypExpr::Kind::Exists ? "some " : "each ");
			for (std::size_t i = 0; i != e.vars.size(); ++i) os << (i ? ", " : "") << e.vars[i];
			os << " | ";
			renderHypTo(os, e.children.front(), PrecQuant);
			break;
	}
	if (parens) os << ')';
}

} // namespace

Program parseProgram(std::string_view text) {
	return Parser(Lexer(text).run()).run();
}

std::string renderTerm(const Term& t) { return t.name; }

std::string renderAtom(const Atom& a) {
	std::string out = a.predicate;
	if (!a.args.empty()) {
		out += '(';
		for (std::size_t i = 0; i != a.args.size(); ++i) {
			if (i) out += ',';
			out += renderTerm(a.args[i]);
		}
		out += ')';
	}
	return out;
}

std::string renderLiteral(const Literal& l) { return (l.negative ? "not " : "") + renderAtom(l.atom); }

std::string renderHyp(const HypExpr& e) {
	std::ostringstream os;
	renderHypTo(os, e, PrecQuant);
	return os.str();
}

std::string renderRule(const Rule& r) { return renderLiteral(r.conclusion) + " <- " + renderHyp(r.body) + "."; }

std::string renderProgram(const Program& program) {
	std::string out;
	for (const auto& [name, d] : program.decls) {
		if (d.certainty) out += std::string(toString(*d.certainty)) + " " + name + ".\n";
		if (d.completeness && d.completeness != Completeness::NotApplicable) {
			out += std::string(toString(*d.completeness)) + " " + name + ".\n";
		}
		if (d.closedness == Closedness::Closed) out += "closed " + name + ".\n";
	}
	std::vector<std::string> facts, rules;
	for (const auto& f : program.facts) facts.push_back(renderLiteral(f.literal) + ".");
	for (const auto& r : program.rules) rules.push_back(renderRule(r));
	std::sort(facts.begin(), facts.end());
	std::sort(rules.begin(), rules.end());
	for (const auto& s : facts) out += s + "\n";
	for (const auto& s : rules) out += s + "\n";
	return out;
}

bool structurallyEqual(const Program& a, const Program& b) {
	auto stripped = [](const Program& p) {
		std::map<std::string, PredicateDecl> d = p.decls;
		for (auto& [name, decl] : d) {
			// Open is the only value with no surface syntax.
			if (decl.closedness == Closedness::Open) decl.closedness.reset();
			if (decl.completeness == Completeness::NotApplicable) decl.completeness.reset();
		}
		return d;
	};
	return stripped(a) == stripped(b) && renderProgram(a) == renderProgram(b);
}

} // namespace founded
