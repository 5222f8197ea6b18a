#include <founded/engine.hpp>

#include <cmath>
#include <sstream>

namespace founded {

std::string_view toString(Regime r) {
	switch (r) {
		case Regime::AsDeclared:     return "as-declared";
		case Regime::AllUncertain:   return "all-uncertain";
		case Regime::DefaultCertain: return "default-certain";
		case Regime::Fitting:        return "fitting";
		case Regime::AllClosed:      return "all-closed";
		case Regime::AllIncomplete:  return "all-incomplete";
	}
	return "?";
}

std::optional<Program> applyRegime(const Program& parsed, Regime regime) {
	if (regime == Regime::AsDeclared) return resolveDeclarations(parsed);

	Program p = parsed;
	const auto names       = p.arities();
	const auto conclusions = conclusionPredicates(p);
	auto       declFor     = [&](const std::string& name) -> PredicateDecl& {
		PredicateDecl& d = p.decls[name];
		d.predicate      = name;
		return d;
	};
	for (auto& [name, d] : p.decls) {
		d.certainty.reset();
		d.closedness.reset();
	}

	switch (regime) {
		case Regime::AllUncertain:
			for (const auto& [name, arity] : names) declFor(name).certainty = Certainty::Uncertain;
			break;
		case Regime::DefaultCertain:
		case Regime::AllClosed: {
			const auto must = mustBeUncertain(p);
			if (regime == Regime::DefaultCertain && must.size() == names.size()) return std::nullopt;
			for (const auto& [name, arity] : names) {
				PredicateDecl& d = declFor(name);
				if (!must.count(name)) {
					d.completeness.reset();
				}
				else if (regime == Regime::AllClosed && conclusions.count(name)) {
					d.certainty    = Certainty::Uncertain;
					d.completeness = Completeness::Complete;
					d.closedness   = Closedness::Closed;
				}
			}
			break;
		}
		case Regime::Fitting:
			for (const auto& [name, arity] : names) {
				PredicateDecl& d = declFor(name);
				if (conclusions.count(name)) {
					d.certainty    = Certainty::Uncertain;
					d.completeness = Completeness::Complete;
				}
				else {
					d.completeness.reset();
				}
			}
			break;
		case Regime::AllIncomplete:
			for (const auto& [name, arity] : names) {
				PredicateDecl& d = declFor(name);
				d.certainty      = Certainty::Uncertain;
				if (conclusions.count(name)) d.completeness = Completeness::Incomplete;
				else d.completeness.reset();
			}
			break;
		case Regime::AsDeclared: break;
	}
	// Drop entries left empty so that unused-predicate checks stay meaningful.
	for (auto it = p.decls.begin(); it != p.decls.end();) {
		const auto& d = it->second;
		if (!d.certainty && !d.completeness && !d.closedness && names.count(it->first)) it = p.decls.erase(it);
		else ++it;
	}
	return resolveDeclarations(p);
}

Analysis prepare(const Program& resolved, GroundOptions options) {
	Analysis a;
	a.program   = resolved;
	a.ground    = ground(resolved, options);
	a.completed = complete(a.ground);
	return a;
}

ClosureResult evaluate(const Analysis& analysis, EvalOptions options) { return wfsByClosure(analysis.completed, options); }

const std::vector<std::string>& compareColumns() {
	static const std::vector<std::string> columns{"founded-uncertain", "founded-certain", "wfs",   "fitting",
	                                              "constraint-uncertain", "constraint-certain", "sms", "supported"};
	return columns;
}

const std::string* CompareReport::cell(std::string_view column) const {
	for (const auto& [c, v] : cells) {
		if (c == column) return &v;
	}
	return nullptr;
}

std::string CompareReport::render() const {
	std::string out;
	for (const auto& [c, v] : cells) out += c + ": " + v + "\n";
	return out;
}

namespace {

const std::string kNotApplicable = "N/A";

// Model cells list at most this many models; larger sets are counted.
constexpr ConstraintOptions kCellOptions{.limit = 8, .exactCountLimit = 20, .completion = true};
constexpr std::size_t       kCellModels = 8;

struct RegimeRun {
	Analysis      analysis;
	ClosureResult result;
};

std::optional<RegimeRun> run(const Program& parsed, Regime regime) {
	auto resolved = applyRegime(parsed, regime);
	if (!resolved) return std::nullopt;
	RegimeRun r{prepare(*resolved), {}};
	r.result = evaluate(r.analysis, {.shuffleSeed = std::nullopt, .recordTrace = false});
	return r;
}

ModelSet constraintOf(const RegimeRun& r) {
	if (!r.result.model.consistent()) return ModelSet{r.analysis.ground.atoms, {}, 0, true};
	return constraintModels(r.analysis.ground, r.analysis.completed, r.result.model, kCellOptions);
}

} // namespace

CompareReport compare(const Program& parsed) {
	const bool priorApplies = !parsed.hasNegativeFactsOrConclusions();

	auto uncertain = run(parsed, Regime::AllUncertain);
	auto certain   = run(parsed, Regime::DefaultCertain);
	std::optional<RegimeRun> closed, fitting;
	if (priorApplies) {
		closed  = run(parsed, Regime::AllClosed);
		fitting = run(parsed, Regime::Fitting);
	}

	auto model = [](const std::optional<RegimeRun>& r) { return r ? r->result.model.render() : kNotApplicable; };
	auto models = [](const std::optional<RegimeRun>& r) { return r ? constraintOf(*r).summary(kCellModels) : kNotApplicable; };

	CompareReport report;
	report.cells.emplace_back("founded-uncertain", model(uncertain));
	report.cells.emplace_back("founded-certain", model(certain));
	report.cells.emplace_back("wfs", model(closed));
	report.cells.emplace_back("fitting", model(fitting));
	report.cells.emplace_back("constraint-uncertain", models(uncertain));
	report.cells.emplace_back("constraint-certain", models(certain));
	if (closed) {
		// Stable models are filtered from the constraint models of the founded
		// model, not of the closure.
		FoundedResult f = linearLfp(closed->analysis.completed, {.shuffleSeed = std::nullopt, .recordTrace = false});
		ModelSet      m = f.model.consistent()
		                      ? constraintModels(closed->analysis.ground, closed->analysis.completed, f.model)
		                      : ModelSet{closed->analysis.ground.atoms, {}, 0, true};
		report.cells.emplace_back("sms", smsFilter(m, closed->analysis.completed).summary(kCellModels));
	}
	else {
		report.cells.emplace_back("sms", kNotApplicable);
	}
	report.cells.emplace_back("supported", models(fitting));
	return report;
}

std::vector<std::pair<std::string, std::string>> parseReport(std::string_view text) {
	std::vector<std::pair<std::string, std::string>> out;
	std::istringstream in{std::string(text)};
	std::string line;
	while (std::getline(in, line)) {
		if (!line.empty() && line.back() == '\r') line.pop_back();
		if (line.empty() || line.front() == '%') continue;
		auto colon = line.find(": ");
		if (colon == std::string::npos) {
			out.emplace_back(line, "");
			continue;
		}
		out.emplace_back(line.substr(0, colon), line.substr(colon + 2));
	}
	return out;
}

std::optional<BenchFamily> benchFamily(std::string_view name) {
	if (name == "winchain") return BenchFamily::WinChain;
	if (name == "wincycle") return BenchFamily::WinCycle;
	if (name == "reachgrid") return BenchFamily::ReachGrid;
	return std::nullopt;
}

std::string_view toString(BenchFamily f) {
	switch (f) {
		case BenchFamily::WinChain:  return "winchain";
		case BenchFamily::WinCycle:  return "wincycle";
		case BenchFamily::ReachGrid: return "reachgrid";
	}
	return "?";
}

Program benchProgram(BenchFamily family, std::size_t n) {
	std::string text;
	auto edge = [&](const char* pred, std::size_t a, std::size_t b) {
		text += pred;
		text += "(" + std::to_string(a) + "," + std::to_string(b) + ").\n";
	};
	switch (family) {
		case BenchFamily::WinChain:
		case BenchFamily::WinCycle:
			for (std::size_t i = 0; i + 1 < n; ++i) edge("move", i, i + 1);
			if (family == BenchFamily::WinCycle && n > 0) edge("move", n - 1, 0);
			text += "win(x) <- move(x,y) and not win(y).\n";
			break;
		case BenchFamily::ReachGrid: {
			auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
			for (std::size_t r = 0; r != k; ++r) {
				for (std::size_t c = 0; c != k; ++c) {
					std::size_t v = r * k + c;
					if (c + 1 < k) edge("edge", v, v + 1);
					if (r + 1 < k) edge("edge", v, v + k);
				}
			}
			text += "source(0).\n";
			text += "reach(x) <- source(x).\n";
			text += "reach(y) <- edge(x,y) and reach(x).\n";
			break;
		}
	}
	return parseProgram(text);
}

BenchRow benchOne(BenchFamily family, std::size_t n) {
	Program program = resolveDeclarations(benchProgram(family, n));
	auto    start   = std::chrono::steady_clock::now();
	Analysis a      = prepare(program, {.pruneExtensional = true});
	FoundedResult r = linearLfp(a.completed, {.shuffleSeed = std::nullopt, .recordTrace = false});
	BenchRow row;
	row.wall        = std::chrono::steady_clock::now() - start;
	row.n           = n;
	row.groundAtoms = a.ground.atoms->size();
	row.groundSize  = a.ground.size;
	row.steps       = r.trace.counter;
	return row;
}

BenchReport bench(BenchFamily family, const std::vector<std::size_t>& sizes) {
	BenchReport report;
	report.family = family;
	for (std::size_t n : sizes) report.rows.push_back(benchOne(family, n));
	return report;
}

std::optional<double> BenchReport::spread() const {
	if (rows.size() < 2) return std::nullopt;
	double lo = rows.front().ratio(), hi = lo;
	for (const auto& r : rows) {
		lo = std::min(lo, r.ratio());
		hi = std::max(hi, r.ratio());
	}
	return lo > 0 ? hi / lo : 0.0;
}

std::optional<bool> BenchReport::linear(double band) const {
	auto s = spread();
	if (!s) return std::nullopt;
	return *s <= band;
}

std::string BenchReport::render() const {
	std::ostringstream os;
	os << "family " << toString(family) << "\n";
	os << "n\tatoms\tsize\tsteps\tsteps/size\tseconds\n";
	for (const auto& r : rows) {
		os << r.n << '\t' << r.groundAtoms << '\t' << r.groundSize << '\t' << r.steps << '\t' << r.ratio() << '\t'
		   << r.wall.count() << '\n';
	}
	if (auto s = spread()) os << "spread " << *s << (*s <= 2.0 ? " linear" : " NOT linear") << '\n';
	return os.str();
}

} // namespace founded
