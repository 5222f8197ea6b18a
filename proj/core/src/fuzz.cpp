#include <founded/fuzz.hpp>

#include <cmath>
#include <sstream>

namespace founded {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
	return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Shape {
	std::vector<std::string> names;
	std::vector<std::size_t> arity;
	std::size_t              constants = 1;
};

Shape randomShape(std::mt19937_64& rng, const FuzzOptions& o) {
	static const char* kNames[] = {"p", "q", "r", "s", "t", "u"};
	for (;;) {
		Shape s;
		std::size_t np = pick(rng, 1, std::min<std::size_t>(o.maxPredicates, 6));
		s.constants    = pick(rng, 1, std::max<std::size_t>(o.maxConstants, 1));
		std::size_t base = 0;
		for (std::size_t i = 0; i != np; ++i) {
			s.names.emplace_back(kNames[i]);
			s.arity.push_back(pick(rng, 0, 2));
			base += static_cast<std::size_t>(std::pow(s.constants, s.arity.back()));
		}
		if (base <= o.budget.maxGroundAtoms) return s;
	}
}

std::string atomText(const std::string& pred, const std::vector<std::string>& args) {
	if (args.empty()) return pred;
	std::string out = pred + "(";
	for (std::size_t i = 0; i != args.size(); ++i) out += (i ? "," : "") + args[i];
	return out + ")";
}

ModelSet filterExtending(const ModelSet& models, const Interpretation& founded) {
	ModelSet out = models;
	out.models.clear();
	for (const auto& m : models.models) {
		if (extends(m, founded)) out.models.push_back(m);
	}
	out.count = out.models.size();
	return out;
}

std::string describe(const std::string& what, const std::string& got, const std::string& want) {
	return what + ": got " + got + ", expected " + want;
}

constexpr EvalOptions kQuiet{.shuffleSeed = std::nullopt, .recordTrace = false};

} // namespace

std::string randomProgramText(std::mt19937_64& rng, const FuzzOptions& o) {
	for (;;) {
		Shape s = randomShape(rng, o);
		auto constant = [&] { return std::to_string(pick(rng, 1, s.constants)); };
		std::ostringstream text;

		std::size_t nf = pick(rng, 0, 3);
		for (std::size_t i = 0; i != nf; ++i) {
			std::size_t p = pick(rng, 0, s.names.size() - 1);
			std::vector<std::string> args;
			for (std::size_t k = 0; k != s.arity[p]; ++k) args.push_back(constant());
			text << atomText(s.names[p], args) << ".\n";
		}

		std::size_t nr = pick(rng, 1, std::max<std::size_t>(o.maxRules, 1));
		for (std::size_t i = 0; i != nr; ++i) {
			std::vector<std::string> bodyVars;
			std::vector<std::string> lits;
			std::size_t nl = pick(rng, 1, 3);
			for (std::size_t j = 0; j != nl; ++j) {
				std::size_t p = pick(rng, 0, s.names.size() - 1);
				std::vector<std::string> args;
				for (std::size_t k = 0; k != s.arity[p]; ++k) {
					if (chance(rng, 0.75)) {
						std::string v = chance(rng, 0.5) ? "x" : "y";
						args.push_back(v);
						bodyVars.push_back(v);
					}
					else {
						args.push_back(constant());
					}
				}
				lits.push_back((chance(rng, 0.4) ? "not " : "") + atomText(s.names[p], args));
			}
			std::size_t h = pick(rng, 0, s.names.size() - 1);
			std::vector<std::string> hargs;
			for (std::size_t k = 0; k != s.arity[h]; ++k) {
				if (!bodyVars.empty() && chance(rng, 0.7)) hargs.push_back(bodyVars[pick(rng, 0, bodyVars.size() - 1)]);
				else hargs.push_back(constant());
			}
			text << atomText(s.names[h], hargs) << " <- ";
			for (std::size_t j = 0; j != lits.size(); ++j) text << (j ? " and " : "") << lits[j];
			text << ".\n";
		}

		std::string out = text.str();
		Program parsed;
		try {
			parsed = parseProgram(out);
		}
		catch (const ParseError&) {
			continue;
		}
		if (o.stratifiedOnly && !mustBeUncertain(parsed).empty()) continue;
		Program resolved = resolveDeclarations(parsed);
		GroundProgram gp = ground(resolved);
		if (gp.atoms->size() > o.budget.maxGroundAtoms) continue;
		return out;
	}
}

const std::vector<std::string>& fuzzChecks() {
	static const std::vector<std::string> checks{"stratified", "fitting",     "supported", "wfs",       "sms",      "fo",
	                                             "consistency", "linear",     "extension", "grounding-bound"};
	return checks;
}

GroundingBound groundingBound(const Program& resolved) {
	GroundProgram gp = ground(resolved);
	std::size_t   k  = 0;
	for (const auto& r : resolved.rules) k = std::max(k, ruleVariables(r).size());
	// With an empty domain, variable-free rules still ground once.
	std::size_t n = std::max<std::size_t>(gp.domain().size(), 1);
	std::size_t bound = resolved.rules.size();
	for (std::size_t i = 0; i != k; ++i) bound *= n;
	return {gp.rules.size(), bound};
}

std::optional<CheckOutcome> checkProgram(const Program& parsed, const OracleBudget& budget) {
	const bool plain = !parsed.hasNegativeFactsOrConclusions();
	{
		std::size_t atoms = ground(*applyRegime(parsed, Regime::AsDeclared)).atoms->size();
		if (atoms > budget.maxGroundAtoms) {
			throw BudgetExceeded(std::to_string(atoms) + " ground atoms exceed the budget of " + std::to_string(budget.maxGroundAtoms));
		}
	}

	// Properties of the program's own declarations and of the all-uncertain regime.
	for (Regime regime : {Regime::AsDeclared, Regime::AllUncertain}) {
		Analysis      a     = prepare(*applyRegime(parsed, regime));
		FoundedResult naive = foundedModel(a.completed, kQuiet);
		FoundedResult lin   = linearLfp(a.completed, kQuiet);
		if (!(naive.model == lin.model)) return CheckOutcome{"linear", describe(std::string(toString(regime)), lin.model.render(), naive.model.render())};
		for (std::uint64_t seed : {1u, 2u, 3u}) {
			FoundedResult shuffled = linearLfp(a.completed, {.shuffleSeed = seed, .recordTrace = false});
			if (!(shuffled.model == lin.model)) return CheckOutcome{"linear", "firing order changed the result"};
		}
		if (plain && !lin.model.consistent()) return CheckOutcome{"consistency", lin.model.render()};
		if (lin.model.consistent()) {
			ModelSet ms = constraintModels(a.ground, a.completed, lin.model, {.limit = budget.maxModelsExamined});
			for (const auto& m : ms.models) {
				if (!extends(m, lin.model) || !satisfiesRules(m, a.ground)) {
					return CheckOutcome{"extension", "model does not extend the founded model or violates a rule"};
				}
			}
		}
	}

	{
		GroundingBound b = groundingBound(*applyRegime(parsed, Regime::AsDeclared));
		if (b.rules > b.bound) {
			return CheckOutcome{"grounding-bound", std::to_string(b.rules) + " ground rules > bound " + std::to_string(b.bound)};
		}
	}

	if (!plain) return std::nullopt;

	if (mustBeUncertain(parsed).empty()) {
		Analysis      a = prepare(*applyRegime(parsed, Regime::DefaultCertain));
		FoundedResult f = linearLfp(a.completed, kQuiet);
		Interpretation want = stratifiedOracle(a.ground, budget);
		if (f.model.values() != want.values()) return CheckOutcome{"stratified", describe("founded", f.model.render(), want.render())};
		ModelSet ms = constraintModels(a.ground, a.completed, f.model);
		if (ms.models.size() != 1 || toInterpretation(ms.models.front(), f.model).values() != want.values()) {
			return CheckOutcome{"stratified", describe("constraint", ms.render(), want.render())};
		}
	}

	{
		Analysis      a = prepare(*applyRegime(parsed, Regime::Fitting));
		FoundedResult f = linearLfp(a.completed, kQuiet);
		Interpretation want = fittingOracle(a.ground, budget);
		if (f.model.values() != want.values()) return CheckOutcome{"fitting", describe("founded", f.model.render(), want.render())};
		ModelSet got = constraintModels(a.ground, a.completed, f.model);
		ModelSet sup = supportedOracle(a.ground, budget);
		if (!(got == sup)) return CheckOutcome{"supported", describe("constraint", got.render(), sup.render())};
	}

	{
		Analysis      a = prepare(*applyRegime(parsed, Regime::AllClosed));
		ClosureResult c = evaluate(a, kQuiet);
		Interpretation want = wfsOracle(a.ground, budget);
		if (c.model.values() != want.values()) return CheckOutcome{"wfs", describe("closure", c.model.render(), want.render())};
		FoundedResult f   = linearLfp(a.completed, kQuiet);
		ModelSet      got = smsFilter(constraintModels(a.ground, a.completed, f.model), a.completed);
		ModelSet      sms = smsOracle(a.ground, budget);
		if (!(got == sms)) return CheckOutcome{"sms", describe("filtered constraint", got.render(), sms.render())};
	}

	{
		Analysis      a = prepare(*applyRegime(parsed, Regime::AllIncomplete));
		FoundedResult f = linearLfp(a.completed, kQuiet);
		ModelSet got  = constraintModelsIncomplete(a.ground, a.completed, f.model);
		ModelSet want = filterExtending(foOracle(a.ground, budget), f.model);
		if (!(got == want)) return CheckOutcome{"fo", describe("incomplete constraint", got.render(), want.render())};
	}
	return std::nullopt;
}

std::string minimize(const std::string& text, const std::string& check, const OracleBudget& budget) {
	auto fails = [&](const std::string& candidate) {
		try {
			auto r = checkProgram(parseProgram(candidate), budget);
			return r && r->check == check;
		}
		catch (const std::exception&) {
			return false;
		}
	};
	Program current = parseProgram(text);
	bool    shrunk  = true;
	while (shrunk) {
		shrunk = false;
		std::vector<Program> candidates;
		for (std::size_t i = 0; i != current.facts.size(); ++i) {
			Program c = current;
			c.facts.erase(c.facts.begin() + static_cast<std::ptrdiff_t>(i));
			candidates.push_back(std::move(c));
		}
		for (std::size_t i = 0; i != current.rules.size(); ++i) {
			Program c = current;
			c.rules.erase(c.rules.begin() + static_cast<std::ptrdiff_t>(i));
			candidates.push_back(std::move(c));
			const HypExpr& body = current.rules[i].body;
			if (body.kind != HypExpr::Kind::Conj) continue;
			for (std::size_t j = 0; j != body.children.size(); ++j) {
				Program d = current;
				auto&   kids = d.rules[i].body.children;
				kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(j));
				if (kids.size() == 1) {
					HypExpr only    = kids.front();
					d.rules[i].body = std::move(only);
				}
				candidates.push_back(std::move(d));
			}
		}
		for (const auto& c : candidates) {
			std::string t = renderProgram(c);
			if (fails(t)) {
				current = parseProgram(t);
				shrunk  = true;
				break;
			}
		}
	}
	return renderProgram(current);
}

std::string FuzzReport::render() const {
	std::ostringstream os;
	os << "programs " << generated << "\n";
	for (const auto& [check, n] : applied) os << "checked " << check << " " << n << "\n";
	os << "counterexamples " << counterexamples.size() << "\n";
	for (const auto& c : counterexamples) {
		os << "-- program " << c.index << " fails " << c.check << ": " << c.detail << "\n" << c.program;
	}
	return os.str();
}

FuzzReport fuzz(const FuzzOptions& options) {
	FuzzReport      report;
	std::mt19937_64 rng(options.seed);
	for (std::size_t i = 0; i != options.count; ++i) {
		std::string text   = randomProgramText(rng, options);
		Program     parsed = parseProgram(text);
		++report.generated;
		const bool plain = !parsed.hasNegativeFactsOrConclusions();
		for (const auto& c : fuzzChecks()) {
			bool applies = plain || c == "linear" || c == "extension" || c == "grounding-bound" || c == "consistency";
			if (c == "stratified") applies = applies && mustBeUncertain(parsed).empty();
			if (applies) ++report.applied[c];
		}
		std::optional<CheckOutcome> failure;
		try {
			failure = checkProgram(parsed, options.budget);
		}
		catch (const BudgetExceeded&) {
			continue;
		}
		if (failure) {
			report.counterexamples.push_back({i, failure->check, failure->detail, minimize(text, failure->check, options.budget)});
		}
	}
	return report;
}

} // namespace founded
