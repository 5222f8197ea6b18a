#include <founded/fuzz.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace founded;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failure = 1, BadDeclaration = 2, Inconsistent = 3, OverBudget = 4 };

struct Config {
	std::string                path;
	std::string                semantics;
	std::string                format = "text";
	std::optional<std::size_t> limit;
	std::size_t                maxAtoms = OracleBudget{}.maxGroundAtoms;
	bool                       trace = false;
	bool                       dumpGround = false;
	bool                       dumpCompleted = false;
	std::string                golden;
	std::string                family;
	std::vector<std::size_t>   sizes;
	std::uint64_t              seed = 1;
	std::size_t                count = 100;
	bool                       stratified = false;
};

std::string readFile(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::runtime_error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Program load(const Config& c) { return parseProgram(readFile(c.path)); }

json atomsJson(const Interpretation& itp) {
	json atoms = json::object();
	for (AtomId a = 0; a != itp.values().size(); ++a) atoms[itp.atoms().name(a)] = std::string(toString(itp.value(a)));
	return atoms;
}

void printInterpretation(const Interpretation& itp) {
	for (AtomId a : itp.atoms().sorted()) std::cout << itp.atoms().name(a) << ": " << toString(itp.value(a)) << "\n";
	if (!itp.consistent()) {
		std::cout << "% conflicts:";
		for (AtomId a : itp.conflicts()) std::cout << " " << itp.atoms().name(a);
		std::cout << "\n";
	}
}

void warnIfDeclared(const Program& parsed, std::string_view semantics) {
	if (!parsed.decls.empty()) {
		std::cerr << "warning: --semantics=" << semantics << " overrides the program's declarations\n";
	}
}

int cmdEval(const Config& c) {
	Program parsed = load(c);
	const bool wfs = c.semantics == "wfs";
	if (wfs) warnIfDeclared(parsed, c.semantics);
	Analysis      a = prepare(*applyRegime(parsed, wfs ? Regime::AllClosed : Regime::AsDeclared));
	ClosureResult r = evaluate(a, {.shuffleSeed = std::nullopt, .recordTrace = c.trace});
	for (const auto& w : a.program.warnings) std::cerr << "warning: " << w << "\n";

	if (c.format == "json") {
		json out;
		out["atoms"]      = atomsJson(r.model);
		out["consistent"] = r.model.consistent();
		if (!r.model.consistent()) {
			json conflicts = json::array();
			for (AtomId x : r.model.conflicts()) conflicts.push_back(r.model.atoms().name(x));
			out["conflicts"] = conflicts;
		}
		if (wfs) out["self_false_rounds"] = r.iterations;
		if (c.dumpGround) out["ground"] = renderGroundProgram(a.ground);
		if (c.dumpCompleted) out["completed"] = renderCompletedProgram(a.completed);
		if (c.trace) out["trace"] = renderTrace(r.trace, *a.completed.atoms);
		std::cout << out.dump(2) << "\n";
	}
	else {
		if (c.dumpGround) std::cout << "% ground program\n" << renderGroundProgram(a.ground);
		if (c.dumpCompleted) std::cout << "% completed program\n" << renderCompletedProgram(a.completed);
		if (c.trace) std::cout << "% trace\n" << renderTrace(r.trace, *a.completed.atoms);
		if (c.dumpGround || c.dumpCompleted || c.trace) std::cout << "% model\n";
		printInterpretation(r.model);
		if (wfs) std::cout << "% self-false rounds: " << r.iterations << "\n";
	}
	if (!r.model.consistent()) {
		std::cerr << c.path << ": founded model is inconsistent\n";
		return Inconsistent;
	}
	return Ok;
}

int cmdModels(const Config& c) {
	Program parsed = load(c);
	OracleBudget budget;
	budget.maxGroundAtoms = c.maxAtoms;

	if (c.semantics == "fitting") {
		Analysis a = prepare(*applyRegime(parsed, Regime::AsDeclared));
		Interpretation itp = fittingOracle(a.ground, budget);
		if (c.format == "json") {
			std::cout << json{{"atoms", atomsJson(itp)}, {"consistent", true}}.dump(2) << "\n";
		}
		else {
			printInterpretation(itp);
		}
		return Ok;
	}

	ModelSet models;
	if (c.semantics == "constraint" || c.semantics == "sms") {
		if (c.semantics == "sms") warnIfDeclared(parsed, c.semantics);
		Analysis a = prepare(*applyRegime(parsed, c.semantics == "sms" ? Regime::AllClosed : Regime::AsDeclared));
		FoundedResult f = linearLfp(a.completed, {.shuffleSeed = std::nullopt, .recordTrace = false});
		if (!f.model.consistent()) {
			std::cerr << c.path << ": founded model is inconsistent\n";
			return Inconsistent;
		}
		ConstraintOptions opts;
		if (c.semantics == "constraint") opts.limit = c.limit;
		models = constraintModels(a.ground, a.completed, f.model, opts);
		if (c.semantics == "sms") models = smsFilter(models, a.completed);
	}
	else {
		Analysis a = prepare(*applyRegime(parsed, Regime::AsDeclared));
		models = c.semantics == "supported" ? supportedOracle(a.ground, budget) : foOracle(a.ground, budget);
	}
	if (c.limit && models.models.size() > *c.limit) models.models.resize(*c.limit);

	if (c.format == "json") {
		json list = json::array();
		for (std::size_t i = 0; i != models.models.size(); ++i) list.push_back(models.trueAtomNames(i));
		json out{{"count", models.count}, {"models", list}};
		if (!models.exact) out["count_is_lower_bound"] = true;
		std::cout << out.dump(2) << "\n";
	}
	else {
		std::cout << "count " << models.count << (models.exact ? "" : " (lower bound)") << "\n";
		for (std::size_t i = 0; i != models.models.size(); ++i) {
			ModelSet one{models.atoms, {models.models[i]}, 1, true};
			std::cout << one.render() << "\n";
		}
	}
	return Ok;
}

int cmdCompare(const Config& c) {
	Program       parsed = load(c);
	CompareReport report = compare(parsed);
	std::cout << report.render();
	if (c.golden.empty()) return Ok;

	auto expected = parseReport(readFile(c.golden));
	int  mismatches = 0;
	for (const auto& [column, want] : expected) {
		const std::string* got = report.cell(column);
		if (!got) {
			std::cerr << "unknown column '" << column << "' in " << c.golden << "\n";
			++mismatches;
		}
		else if (*got != want) {
			std::cerr << column << ": expected " << want << ", got " << *got << "\n";
			++mismatches;
		}
	}
	if (mismatches) return Failure;
	std::cerr << "golden: " << expected.size() << " cells match\n";
	return Ok;
}

int cmdBench(const Config& c) {
	auto family = benchFamily(c.family);
	if (!family) {
		std::cerr << "unknown family '" << c.family << "' (winchain, wincycle, reachgrid)\n";
		return Failure;
	}
	BenchReport report = bench(*family, c.sizes);
	if (c.format == "json") {
		json rows = json::array();
		for (const auto& r : report.rows) {
			rows.push_back({{"n", r.n},
			                {"ground_atoms", r.groundAtoms},
			                {"ground_size", r.groundSize},
			                {"steps", r.steps},
			                {"ratio", r.ratio()},
			                {"seconds", r.wall.count()}});
		}
		json out{{"family", std::string(toString(*family))}, {"rows", rows}};
		if (auto s = report.spread()) {
			out["spread"] = *s;
			out["linear"] = *report.linear();
		}
		std::cout << out.dump(2) << "\n";
	}
	else {
		std::cout << report.render();
	}
	auto verdict = report.linear();
	return verdict && !*verdict ? Failure : Ok;
}

int cmdFuzz(const Config& c) {
	FuzzOptions o;
	o.seed           = c.seed;
	o.count          = c.count;
	o.stratifiedOnly = c.stratified;
	o.budget.maxGroundAtoms = c.maxAtoms;
	FuzzReport report = fuzz(o);
	std::cout << report.render();
	return report.counterexamples.empty() ? Ok : Failure;
}

std::vector<std::size_t> parseSizes(const std::string& text) {
	std::vector<std::size_t> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (!item.empty()) out.push_back(std::stoul(item));
	}
	return out;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Founded and constraint semantics for Datalog with unrestricted negation"};
	app.require_subcommand(1);
	Config c;
	std::string sizes;
	std::size_t limit = 0;

	auto* eval = app.add_subcommand("eval", "Print the 3-valued model");
	eval->add_option("file", c.path, "Program file")->required()->check(CLI::ExistingFile);
	eval->add_option("--semantics", c.semantics, "founded or wfs")->default_val("founded")->check(CLI::IsMember({"founded", "wfs"}));
	eval->add_option("--format", c.format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));
	eval->add_flag("--trace", c.trace, "Print the derivation trace");
	eval->add_flag("--dump-ground", c.dumpGround, "Print the ground program");
	eval->add_flag("--dump-completed", c.dumpCompleted, "Print the completed program");

	auto* models = app.add_subcommand("models", "Enumerate 2-valued models");
	models->add_option("file", c.path, "Program file")->required()->check(CLI::ExistingFile);
	models->add_option("--semantics", c.semantics, "constraint, sms, supported, fitting or fo")
		->required()
		->check(CLI::IsMember({"constraint", "sms", "supported", "fitting", "fo"}));
	auto* limitOpt = models->add_option("--limit", limit, "Print at most N models");
	models->add_option("--format", c.format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));
	models->add_option("--max-atoms", c.maxAtoms, "Ground-atom budget for brute-force semantics");

	auto* cmp = app.add_subcommand("compare", "Evaluate under every declaration regime");
	cmp->add_option("file", c.path, "Program file")->required()->check(CLI::ExistingFile);
	cmp->add_option("--golden", c.golden, "Expected table to diff against")->check(CLI::ExistingFile);

	auto* bn = app.add_subcommand("bench", "Measure evaluation steps against ground size");
	bn->add_option("--family", c.family, "winchain, wincycle or reachgrid")->required();
	bn->add_option("--sizes", sizes, "Comma-separated sizes")->default_val("1024,2048,4096,8192");
	bn->add_option("--format", c.format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

	auto* fz = app.add_subcommand("fuzz", "Differential testing against brute-force semantics");
	fz->add_option("--seed", c.seed, "Random seed")->default_val(1);
	fz->add_option("--count", c.count, "Number of programs")->default_val(100);
	fz->add_flag("--stratified", c.stratified, "Only programs whose predicates can all be certain");
	fz->add_option("--max-atoms", c.maxAtoms, "Ground-atom budget");

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e) {
		return app.exit(e) == 0 ? Ok : Failure;
	}
	catch (const CLI::ParseError& e) {
		app.exit(e);
		return Failure;
	}
	if (limitOpt->count()) c.limit = limit;

	try {
		if (*eval) return cmdEval(c);
		if (*models) return cmdModels(c);
		if (*cmp) return cmdCompare(c);
		if (*bn) {
			c.sizes = parseSizes(sizes);
			return cmdBench(c);
		}
		if (*fz) return cmdFuzz(c);
	}
	catch (const ParseError& e) {
		std::cerr << c.path << ":" << e.what() << "\n";
		return Failure;
	}
	catch (const DeclarationError& e) {
		std::cerr << c.path << ": " << e.what() << "\n";
		return BadDeclaration;
	}
	catch (const BudgetExceeded& e) {
		std::cerr << c.path << ": " << e.what() << "\n";
		return OverBudget;
	}
	catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return Failure;
	}
	return Failure;
}
