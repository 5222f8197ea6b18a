#include <founded/ground.hpp>

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace founded {

namespace {

bool isNumeral(std::string_view s) { return !s.empty() && s.front() != '\''; }

std::string_view stripZeros(std::string_view s) {
	while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
	return s;
}

} // namespace

bool constantLess(std::string_view a, std::string_view b) {
	bool na = isNumeral(a), nb = isNumeral(b);
	if (na != nb) return na;
	if (na) {
		std::string_view sa = stripZeros(a), sb = stripZeros(b);
		if (sa.size() != sb.size()) return sa.size() < sb.size();
		if (sa != sb) return sa < sb;
	}
	return a < b;
}

// ---------------------------------------------------------------------------
// AtomTable

AtomTable::AtomTable(std::vector<std::string> domain) : domain_(std::move(domain)) {
	for (std::size_t i = 0; i != domain_.size(); ++i) constIndex_.emplace(domain_[i], static_cast<ConstId>(i));
}

std::optional<ConstId> AtomTable::constant(std::string_view name) const {
	auto it = constIndex_.find(std::string(name));
	if (it == constIndex_.end()) return std::nullopt;
	return it->second;
}

PredId AtomTable::addPredicate(const std::string& name, std::size_t arity) {
	if (auto p = predicate(name)) return *p;
	PredId id = static_cast<PredId>(predNames_.size());
	predNames_.push_back(name);
	predArity_.push_back(arity);
	predAtoms_.emplace_back();
	predIndex_.emplace(name, id);
	return id;
}

std::optional<PredId> AtomTable::predicate(std::string_view name) const {
	auto it = predIndex_.find(std::string(name));
	if (it == predIndex_.end()) return std::nullopt;
	return it->second;
}

std::string AtomTable::key(PredId p, std::span<const ConstId> args) const {
	std::string k(sizeof(PredId) + args.size() * sizeof(ConstId), '\0');
	std::memcpy(k.data(), &p, sizeof(PredId));
	if (!args.empty()) std::memcpy(k.data() + sizeof(PredId), args.data(), args.size() * sizeof(ConstId));
	return k;
}

AtomId AtomTable::intern(PredId p, std::span<const ConstId> args) {
	auto [it, inserted] = atomIndex_.emplace(key(p, args), static_cast<AtomId>(atomPred_.size()));
	if (inserted) {
		atomPred_.push_back(p);
		atomArgStart_.push_back(args_.size());
		args_.insert(args_.end(), args.begin(), args.end());
		predAtoms_[p].push_back(it->second);
	}
	return it->second;
}

std::optional<AtomId> AtomTable::find(PredId p, std::span<const ConstId> args) const {
	auto it = atomIndex_.find(key(p, args));
	if (it == atomIndex_.end()) return std::nullopt;
	return it->second;
}

std::optional<AtomId> AtomTable::find(std::string_view text) const {
	auto open = text.find('(');
	std::string_view pname = text.substr(0, open);
	auto p = predicate(pname);
	if (!p) return std::nullopt;
	std::vector<ConstId> args;
	if (open != std::string_view::npos) {
		if (text.back() != ')') return std::nullopt;
		std::string_view rest = text.substr(open + 1, text.size() - open - 2);
		std::size_t start = 0;
		bool quoted = false;
		for (std::size_t i = 0; i <= rest.size(); ++i) {
			if (i < rest.size() && rest[i] == '\'') quoted = !quoted;
			if (i == rest.size() || (rest[i] == ',' && !quoted)) {
				auto c = constant(rest.substr(start, i - start));
				if (!c) return std::nullopt;
				args.push_back(*c);
				start = i + 1;
			}
		}
	}
	if (args.size() != arity(*p)) return std::nullopt;
	return find(*p, args);
}

std::span<const ConstId> AtomTable::args(AtomId a) const {
	std::size_t n = predArity_[atomPred_[a]];
	return {args_.data() + atomArgStart_[a], n};
}

std::string AtomTable::name(AtomId a) const {
	std::string out = predNames_[atomPred_[a]];
	auto as = args(a);
	if (!as.empty()) {
		out += '(';
		for (std::size_t i = 0; i != as.size(); ++i) {
			if (i) out += ',';
			out += domain_[as[i]];
		}
		out += ')';
	}
	return out;
}

bool AtomTable::less(AtomId a, AtomId b) const {
	PredId pa = atomPred_[a], pb = atomPred_[b];
	if (pa != pb) return predNames_[pa] < predNames_[pb];
	auto xa = args(a), xb = args(b);
	return std::lexicographical_compare(xa.begin(), xa.end(), xb.begin(), xb.end());
}

std::vector<AtomId> AtomTable::sorted() const {
	std::vector<AtomId> out(size());
	for (AtomId a = 0; a != out.size(); ++a) out[a] = a;
	std::sort(out.begin(), out.end(), [this](AtomId a, AtomId b) { return less(a, b); });
	return out;
}

// ---------------------------------------------------------------------------
// Grounding

std::vector<std::string> constantDomain(const Program& program) {
	std::set<std::string> consts;
	auto fromAtom = [&](const Atom& a) {
		for (const auto& t : a.args) {
			if (!t.isVariable()) consts.insert(t.name);
		}
	};
	std::function<void(const HypExpr&)> fromExpr = [&](const HypExpr& e) {
		if (e.kind == HypExpr::Kind::Literal) fromAtom(e.literal.atom);
		for (const auto& c : e.children) fromExpr(c);
	};
	for (const auto& f : program.facts) fromAtom(f.literal.atom);
	for (const auto& r : program.rules) {
		fromAtom(r.conclusion.atom);
		fromExpr(r.body);
	}
	std::vector<std::string> out(consts.begin(), consts.end());
	std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return constantLess(a, b); });
	return out;
}

std::vector<std::string> ruleVariables(const Rule& rule) {
	std::vector<std::string> out;
	auto add = [&](const std::string& v) {
		if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
	};
	for (const auto& t : rule.conclusion.atom.args) {
		if (t.isVariable()) add(t.name);
	}
	std::function<void(const HypExpr&, std::vector<std::string>&)> walk =
		[&](const HypExpr& e, std::vector<std::string>& bound) {
			if (e.kind == HypExpr::Kind::Literal) {
				for (const auto& t : e.literal.atom.args) {
					if (t.isVariable() && std::find(bound.begin(), bound.end(), t.name) == bound.end()) add(t.name);
				}
				return;
			}
			if (e.kind == HypExpr::Kind::Exists || e.kind == HypExpr::Kind::Forall) {
				std::vector<std::string> inner = bound;
				inner.insert(inner.end(), e.vars.begin(), e.vars.end());
				walk(e.children.front(), inner);
				return;
			}
			for (const auto& c : e.children) walk(c, bound);
		};
	std::vector<std::string> none;
	walk(rule.body, none);
	return out;
}

namespace {

GroundExpr fold(GroundExpr e) {
	using K = GroundExpr::Kind;
	switch (e.kind) {
		case K::Not: {
			const GroundExpr& c = e.children.front();
			if (c.kind == K::True) return GroundExpr::constant(false);
			if (c.kind == K::False) return GroundExpr::constant(true);
			return e;
		}
		case K::And:
		case K::Or: {
			K absorbing = e.kind == K::And ? K::False : K::True;
			K neutral   = e.kind == K::And ? K::True : K::False;
			std::vector<GroundExpr> kept;
			kept.reserve(e.children.size());
			for (auto& c : e.children) {
				if (c.kind == absorbing) return GroundExpr::constant(absorbing == K::True);
				if (c.kind != neutral) kept.push_back(std::move(c));
			}
			if (kept.empty()) return GroundExpr::constant(neutral == K::True);
			if (kept.size() == 1) return std::move(kept.front());
			e.children = std::move(kept);
			return e;
		}
		default: return e;
	}
}

class Grounder {
public:
	Grounder(const Program& program, GroundOptions options) : program_(program), options_(options) {}

	GroundProgram run() {
		auto table = std::make_shared<AtomTable>(constantDomain(program_));
		table_ = table.get();
		GroundProgram gp;
		auto arities     = program_.arities();
		auto conclusions = conclusionPredicates(program_);
		for (const auto& [name, arity] : arities) table_->addPredicate(name, arity);
		gp.decls.resize(table_->numPredicates());
		for (const auto& [name, arity] : arities) {
			PredId p = *table_->predicate(name);
			auto it = program_.decls.find(name);
			gp.decls[p] = it != program_.decls.end() ? it->second : PredicateDecl{name, {}, {}, {}};
			bool extensional = !conclusions.count(name) && gp.decls[p].isCertain();
			extensional_.push_back(extensional);
			// The pruned mode leaves unmentioned atoms of certain extensional predicates implicit (false).
			if (!options_.pruneExtensional || !extensional) internAll(p);
		}
		for (const auto& comp : sccOrder(program_)) {
			std::vector<PredId> ids;
			for (const auto& name : comp) {
				if (auto p = table_->predicate(name)) ids.push_back(*p);
			}
			if (!ids.empty()) gp.sccs.push_back(std::move(ids));
		}

		factArgs_.resize(table_->numPredicates());
		for (const auto& f : program_.facts) {
			GroundLiteral lit{groundAtom(f.literal.atom, {}), !f.literal.negative};
			gp.facts.push_back(lit);
			if (lit.positive) {
				auto as = table_->args(lit.atom);
				factArgs_[table_->predicateOf(lit.atom)].emplace_back(as.begin(), as.end());
			}
		}
		for (std::size_t i = 0; i != program_.rules.size(); ++i) groundRule(i, gp.rules);
		gp.atoms = std::move(table);
		gp.size  = groundSize(gp);
		return gp;
	}

private:
	using Binding = std::map<std::string, ConstId>;

	void internAll(PredId p) {
		std::size_t arity = table_->arity(p);
		std::size_t n     = table_->domain().size();
		if (arity > 0 && n == 0) return;
		std::vector<ConstId> args(arity, 0);
		for (;;) {
			table_->intern(p, args);
			std::size_t i = arity;
			while (i > 0) {
				if (++args[i - 1] < n) break;
				args[i - 1] = 0;
				--i;
			}
			if (i == 0) return;
		}
	}

	AtomId groundAtom(const Atom& a, const Binding& b) {
		std::vector<ConstId> args;
		args.reserve(a.args.size());
		for (const auto& t : a.args) args.push_back(t.isVariable() ? b.at(t.name) : *table_->constant(t.name));
		return table_->intern(*table_->predicate(a.predicate), args);
	}

	GroundExpr instantiate(const HypExpr& e, Binding& b) {
		using HK = HypExpr::Kind;
		switch (e.kind) {
			case HK::True:    return GroundExpr::constant(true);
			case HK::False:   return GroundExpr::constant(false);
			case HK::Literal: {
				GroundExpr lit = GroundExpr::atom(groundAtom(e.literal.atom, b));
				return e.literal.negative ? GroundExpr::negation(std::move(lit)) : lit;
			}
			case HK::Neg: return fold(GroundExpr::negation(instantiate(e.children.front(), b)));
			case HK::Conj:
			case HK::Disj: {
				std::vector<GroundExpr> xs;
				xs.reserve(e.children.size());
				for (const auto& c : e.children) xs.push_back(instantiate(c, b));
				return fold(e.kind == HK::Conj ? GroundExpr::conj(std::move(xs)) : GroundExpr::disj(std::move(xs)));
			}
			case HK::Exists:
			case HK::Forall: {
				std::vector<GroundExpr> xs;
				Binding saved = b;
				forEachAssignment(e.vars, b, [&] { xs.push_back(instantiate(e.children.front(), b)); });
				b = std::move(saved);
				return fold(e.kind == HK::Exists ? GroundExpr::disj(std::move(xs)) : GroundExpr::conj(std::move(xs)));
			}
		}
		return GroundExpr::constant(false);
	}

	// Calls fn once per assignment of vars over the domain (none if the domain is empty and vars non-empty).
	void forEachAssignment(const std::vector<std::string>& vars, Binding& b, const std::function<void()>& fn,
	                       std::size_t i = 0) {
		if (i == vars.size()) { fn(); return; }
		for (ConstId c = 0; c != table_->domain().size(); ++c) {
			b[vars[i]] = c;
			forEachAssignment(vars, b, fn, i + 1);
		}
	}

	// Top-level positive hypotheses over certain extensional predicates.
	std::vector<const Atom*> prunable(const HypExpr& body) const {
		std::vector<const Atom*> out;
		auto consider = [&](const HypExpr& h) {
			if (h.kind == HypExpr::Kind::Literal && !h.literal.negative) {
				PredId p = *table_->predicate(h.literal.atom.predicate);
				if (extensional_[p]) out.push_back(&h.literal.atom);
			}
		};
		if (body.kind == HypExpr::Kind::Conj) {
			for (const auto& c : body.children) consider(c);
		}
		else {
			consider(body);
		}
		return out;
	}

	void joinFacts(const std::vector<const Atom*>& lits, std::size_t i, Binding& b, const std::function<void(Binding&)>& fn) {
		if (i == lits.size()) { fn(b); return; }
		const Atom& a = *lits[i];
		PredId p = *table_->predicate(a.predicate);
		for (const auto& fact : factArgs_[p]) {
			Binding next = b;
			bool ok = true;
			for (std::size_t k = 0; k != a.args.size() && ok; ++k) {
				const Term& t = a.args[k];
				if (!t.isVariable()) {
					ok = *table_->constant(t.name) == fact[k];
				}
				else if (auto it = next.find(t.name); it != next.end()) {
					ok = it->second == fact[k];
				}
				else {
					next[t.name] = fact[k];
				}
			}
			if (ok) joinFacts(lits, i + 1, next, fn);
		}
	}

	void groundRule(std::size_t index, std::vector<GroundRule>& out) {
		const Rule& r = program_.rules[index];
		std::vector<std::string> vars = ruleVariables(r);
		auto emit = [&](Binding& b) {
			GroundRule g;
			g.head       = {groundAtom(r.conclusion.atom, b), !r.conclusion.negative};
			g.body       = instantiate(r.body, b);
			g.sourceRule = index;
			out.push_back(std::move(g));
		};
		Binding b;
		if (!options_.pruneExtensional) {
			forEachAssignment(vars, b, [&] { emit(b); });
			return;
		}
		auto lits = prunable(r.body);
		joinFacts(lits, 0, b, [&](Binding& joined) {
			std::vector<std::string> rest;
			for (const auto& v : vars) {
				if (!joined.count(v)) rest.push_back(v);
			}
			Binding inner = joined;
			forEachAssignment(rest, inner, [&] { emit(inner); });
		});
	}

	const Program&                               program_;
	GroundOptions                                options_;
	AtomTable*                                   table_ = nullptr;
	std::vector<bool>                            extensional_;
	std::vector<std::vector<std::vector<ConstId>>> factArgs_;
};

} // namespace

GroundProgram ground(const Program& resolved, GroundOptions options) { return Grounder(resolved, options).run(); }

std::size_t exprSize(const GroundExpr& e) {
	std::size_t n = 1;
	for (const auto& c : e.children) n += exprSize(c);
	return n;
}

std::size_t groundSize(const GroundProgram& gp) {
	std::size_t n = gp.facts.size();
	for (const auto& r : gp.rules) n += 1 + exprSize(r.body);
	return n;
}

std::string renderGroundLiteral(const GroundLiteral& l, const AtomTable& atoms) {
	return (l.positive ? "" : "n.") + atoms.name(l.atom);
}

namespace {

void renderExprTo(std::ostringstream& os, const GroundExpr& e, const AtomTable& atoms, int minPrec) {
	using K = GroundExpr::Kind;
	int prec = e.kind == K::Or ? 1 : e.kind == K::And ? 2 : 3;
	bool parens = prec < minPrec;
	if (parens) os << '(';
	switch (e.kind) {
		case K::True:  os << "true"; break;
		case K::False: os << "false"; break;
		case K::Atom:  os << renderGroundLiteral(e.lit, atoms); break;
		case K::Not:
			os << "not ";
			renderExprTo(os, e.children.front(), atoms, 3);
			break;
		case K::And:
		case K::Or:
			for (std::size_t i = 0; i != e.children.size(); ++i) {
				if (i) os << (e.kind == K::And ? " and " : " or ");
				renderExprTo(os, e.children[i], atoms, e.kind == K::And ? 3 : 2);
			}
			break;
	}
	if (parens) os << ')';
}

} // namespace

std::string renderGroundExpr(const GroundExpr& e, const AtomTable& atoms) {
	std::ostringstream os;
	renderExprTo(os, e, atoms, 0);
	return os.str();
}

std::string renderGroundRule(const GroundRule& r, const AtomTable& atoms) {
	return renderGroundLiteral(r.head, atoms) + " <- " + renderGroundExpr(r.body, atoms) + ".";
}

std::string renderGroundProgram(const GroundProgram& gp) {
	std::string out;
	for (const auto& f : gp.facts) out += (f.positive ? "" : "not ") + gp.atoms->name(f.atom) + ".\n";
	for (const auto& r : gp.rules) {
		std::string head = (r.head.positive ? "" : "not ") + gp.atoms->name(r.head.atom);
		out += head + " <- " + renderGroundExpr(r.body, *gp.atoms) + ".\n";
	}
	return out;
}

} // namespace founded
