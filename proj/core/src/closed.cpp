#include <founded/closed.hpp>

namespace founded {

namespace {

std::vector<std::int64_t> combinedIndex(const CompletedProgram& cp) {
	std::vector<std::int64_t> index(cp.atoms->size(), -1);
	for (std::size_t i = 0; i != cp.combinedRules.size(); ++i) index[cp.combinedRules[i].head.atom] = static_cast<std::int64_t>(i);
	return index;
}

// Kleene evaluation where positive literals of atoms in `assumedFalse` read F.
Truth evalAssuming(const GroundExpr& e, const Interpretation& itp, const std::vector<std::uint8_t>& assumedFalse) {
	using K = GroundExpr::Kind;
	switch (e.kind) {
		case K::True:  return Truth::True;
		case K::False: return Truth::False;
		case K::Atom:
			if (e.lit.positive && assumedFalse[e.lit.atom]) return Truth::False;
			return itp.value(e.lit);
		case K::Not: return kleeneNot(evalAssuming(e.children.front(), itp, assumedFalse));
		case K::And: {
			Truth t = Truth::True;
			for (const auto& c : e.children) {
				t = kleeneAnd(t, evalAssuming(c, itp, assumedFalse));
				if (t == Truth::False) break;
			}
			return t;
		}
		case K::Or: {
			Truth t = Truth::False;
			for (const auto& c : e.children) {
				t = kleeneOr(t, evalAssuming(c, itp, assumedFalse));
				if (t == Truth::True) break;
			}
			return t;
		}
	}
	return Truth::Undefined;
}

} // namespace

std::vector<AtomId> selfFalseAmong(const Interpretation& itp, const CompletedProgram& cp,
                                   std::span<const AtomId> candidates) {
	const auto index = combinedIndex(cp);
	std::vector<std::uint8_t> inSet(cp.atoms->size(), 0);
	std::vector<AtomId>       set;
	for (AtomId a : candidates) {
		if (index[a] >= 0 && !inSet[a]) {
			inSet[a] = 1;
			set.push_back(a);
		}
	}
	bool changed = true;
	while (changed) {
		changed = false;
		std::vector<AtomId> kept;
		for (AtomId a : set) {
			const GroundExpr& body = cp.combinedRules[static_cast<std::size_t>(index[a])].body;
			if (evalAssuming(body, itp, inSet) == Truth::False) {
				kept.push_back(a);
			}
			else {
				inSet[a] = 0;
				changed = true;
			}
		}
		set = std::move(kept);
	}
	std::sort(set.begin(), set.end(), [&](AtomId a, AtomId b) { return cp.atoms->less(a, b); });
	return set;
}

std::vector<AtomId> selfFalse(const Interpretation& itp, const CompletedProgram& cp) {
	std::vector<AtomId> candidates;
	for (AtomId a = 0; a != cp.atoms->size(); ++a) {
		if (cp.decl(a).isClosed() && itp.value(a) == Truth::Undefined) candidates.push_back(a);
	}
	return selfFalseAmong(itp, cp, candidates);
}

ClosureResult wfsByClosure(const CompletedProgram& cp, EvalOptions options) {
	CompletedProgram work = cp;
	ClosureResult    out;
	for (;;) {
		FoundedResult r = linearLfp(work, options);
		auto sf = selfFalse(r.model, work);
		if (sf.empty() || !r.model.consistent()) {
			for (auto& step : r.trace.steps) {
				if (step.ruleId.starts_with('f') && std::stoul(step.ruleId.substr(1)) >= cp.facts.size()) step.ruleId = "self-false";
			}
			out.model = std::move(r.model);
			out.trace = std::move(r.trace);
			return out;
		}
		++out.iterations;
		for (AtomId a : sf) work.facts.push_back({a, false});
	}
}

} // namespace founded
