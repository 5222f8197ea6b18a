#include <founded/completion.hpp>

namespace founded {

namespace {

GroundExpr nnf(const GroundExpr& e, bool negate) {
	using K = GroundExpr::Kind;
	switch (e.kind) {
		case K::True:  return GroundExpr::constant(!negate);
		case K::False: return GroundExpr::constant(negate);
		case K::Atom:  return GroundExpr::atom(e.lit.atom, e.lit.positive != negate);
		case K::Not:   return nnf(e.children.front(), !negate);
		case K::And:
		case K::Or: {
			std::vector<GroundExpr> xs;
			xs.reserve(e.children.size());
			for (const auto& c : e.children) xs.push_back(nnf(c, negate));
			bool conj = (e.kind == K::And) != negate;
			return conj ? GroundExpr::conj(std::move(xs)) : GroundExpr::disj(std::move(xs));
		}
	}
	return e;
}

} // namespace

GroundExpr dual(const GroundExpr& e) { return nnf(e, true); }
GroundExpr negationNormalForm(const GroundExpr& e) { return nnf(e, false); }

bool containsNegation(const GroundExpr& e) {
	if (e.kind == GroundExpr::Kind::Not) return true;
	for (const auto& c : e.children) {
		if (containsNegation(c)) return true;
	}
	return false;
}

std::size_t CompletedProgram::size() const {
	std::size_t n = facts.size();
	for (const auto* rules : {&combinedRules, &inverseRules, &passthroughRules}) {
		for (const auto& r : *rules) n += 1 + exprSize(r.body);
	}
	return n;
}

CompletedProgram combine(const GroundProgram& gp) {
	CompletedProgram cp;
	cp.atoms = gp.atoms;
	cp.decls = gp.decls;
	cp.sccs  = gp.sccs;
	const AtomTable& atoms = *gp.atoms;

	std::vector<std::vector<std::size_t>> rulesFor(atoms.size());
	for (std::size_t i = 0; i != gp.rules.size(); ++i) {
		const GroundRule& r = gp.rules[i];
		if (r.head.positive && gp.decl(r.head.atom).isComplete()) rulesFor[r.head.atom].push_back(i);
		else cp.passthroughRules.push_back(r);
	}
	std::vector<bool> isFact(atoms.size(), false);
	for (const auto& f : gp.facts) {
		if (f.positive && gp.decl(f.atom).isComplete()) isFact[f.atom] = true;
		else cp.facts.push_back(f);
	}
	for (PredId p = 0; p != atoms.numPredicates(); ++p) {
		if (!gp.decls[p].isComplete()) continue;
		std::vector<AtomId> heads = atoms.atomsOf(p);
		std::sort(heads.begin(), heads.end(), [&](AtomId a, AtomId b) { return atoms.less(a, b); });
		for (AtomId a : heads) {
			std::vector<GroundExpr> disjuncts;
			if (isFact[a]) disjuncts.push_back(GroundExpr::constant(true));
			for (std::size_t i : rulesFor[a]) disjuncts.push_back(gp.rules[i].body);
			GroundRule r;
			r.head = {a, true};
			if (disjuncts.empty()) r.body = GroundExpr::constant(false);
			else if (disjuncts.size() == 1) r.body = std::move(disjuncts.front());
			else r.body = GroundExpr::disj(std::move(disjuncts));
			r.sourceRule = rulesFor[a].empty() ? static_cast<std::size_t>(-1) : gp.rules[rulesFor[a].front()].sourceRule;
			cp.combinedRules.push_back(std::move(r));
		}
	}
	return cp;
}

CompletedProgram addInverseRules(CompletedProgram cp) {
	cp.inverseRules.clear();
	cp.inverseRules.reserve(cp.combinedRules.size());
	for (const auto& r : cp.combinedRules) {
		GroundRule inv;
		inv.head       = {r.head.atom, false};
		inv.body       = dual(r.body);
		inv.sourceRule = r.sourceRule;
		cp.inverseRules.push_back(std::move(inv));
	}
	return cp;
}

CompletedProgram renameNegations(CompletedProgram cp) {
	for (auto* rules : {&cp.combinedRules, &cp.inverseRules, &cp.passthroughRules}) {
		for (auto& r : *rules) r.body = negationNormalForm(r.body);
	}
	cp.renamed = true;
	return cp;
}

CompletedProgram complete(const GroundProgram& gp) { return renameNegations(addInverseRules(combine(gp))); }

std::string renderCompletedProgram(const CompletedProgram& cp) {
	std::string out;
	auto section = [&](const char* title, const std::vector<GroundRule>& rules) {
		if (rules.empty()) return;
		out += std::string("% ") + title + "\n";
		for (const auto& r : rules) out += renderGroundRule(r, *cp.atoms) + "\n";
	};
	if (!cp.facts.empty()) {
		out += "% facts\n";
		for (const auto& f : cp.facts) out += renderGroundLiteral(f, *cp.atoms) + ".\n";
	}
	section("combined rules", cp.combinedRules);
	section("completion rules", cp.inverseRules);
	section("other rules", cp.passthroughRules);
	return out;
}

} // namespace founded
