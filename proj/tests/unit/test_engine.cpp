#include <doctest.h>
#include <support.hpp>

using namespace founded;

TEST_SUITE("engine") {

TEST_CASE("compare reproduces every golden") {
	for (const auto& path : testing::corpusPrograms()) {
		CAPTURE(path);
		std::string golden = path.substr(0, path.size() - 3) + ".expected";
		auto expected = parseReport(testing::corpus(golden));
		CompareReport report = compare(parseProgram(testing::corpus(path)));
		CHECK(report.cells == expected);
		CHECK(parseReport(report.render()) == report.cells);
	}
}

TEST_CASE("compare columns") {
	CHECK(compareColumns() == std::vector<std::string>{"founded-uncertain", "founded-certain", "wfs", "fitting",
	                                                     "constraint-uncertain", "constraint-certain", "sms", "supported"});
	CompareReport r = compare(parseProgram(testing::corpus("table/prog5.fl")));
	REQUIRE(r.cell("founded-certain"));
	CHECK(*r.cell("founded-certain") == "{¬p, q}");
	CHECK(r.cell("nonsense") == nullptr);
}

TEST_CASE("prior semantics are not applicable with negative facts") {
	CompareReport r = compare(parseProgram(testing::corpus("examples/yale.fl")));
	for (const char* col : {"wfs", "fitting", "sms", "supported"}) CHECK(*r.cell(col) == "N/A");
	CHECK(*r.cell("founded-uncertain") != "N/A");
}

TEST_CASE("parseReport skips comments and blank lines") {
	auto cells = parseReport("% header\n\nwfs: {U q}\nsms: no model\n");
	REQUIRE(cells.size() == 2);
	CHECK(cells[0] == std::pair<std::string, std::string>{"wfs", "{U q}"});
	CHECK(cells[1].second == "no model");
}

TEST_CASE("regimes") {
	Program prog1 = parseProgram(testing::corpus("table/prog1.fl"));
	CHECK_FALSE(applyRegime(prog1, Regime::DefaultCertain).has_value());

	Program fitting = *applyRegime(parseProgram(testing::corpus("table/prog5.fl")), Regime::Fitting);
	CHECK_FALSE(fitting.decls.at("q").isCertain());
	CHECK(fitting.decls.at("q").isComplete());
	CHECK(fitting.decls.at("p").isCertain());

	Program closed = *applyRegime(prog1, Regime::AllClosed);
	CHECK(closed.decls.at("q").isClosed());

	Program open = *applyRegime(parseProgram(testing::corpus("table/prog3.fl")), Regime::AllClosed);
	CHECK(open.decls.at("q").isCertain());

	Program incomplete = *applyRegime(parseProgram(testing::corpus("table/prog2.fl")), Regime::AllIncomplete);
	CHECK((incomplete.decls.at("p").completeness == Completeness::Incomplete));

	Program uncertain = *applyRegime(parseProgram(testing::corpus("examples/reach.fl")), Regime::AllUncertain);
	for (const auto& [name, d] : uncertain.decls) {
		CHECK_FALSE(d.isCertain());
		CHECK_FALSE(d.isClosed());
	}
	CHECK(std::string(toString(Regime::AllClosed)) == "all-closed");
}

TEST_CASE("evaluate uses the closure only for closed predicates") {
	Analysis a = prepare(*applyRegime(parseProgram(testing::corpus("table/prog3.fl")), Regime::AllClosed));
	CHECK(evaluate(a).model.render() == "{¬q}");
	Analysis b = testing::analyze("uncertain q.\nq <- q.\n");
	CHECK(evaluate(b).model.render() == "{U q}");
}

TEST_CASE("bench programs") {
	CHECK((benchFamily("winchain") == BenchFamily::WinChain));
	CHECK((benchFamily("reachgrid") == BenchFamily::ReachGrid));
	CHECK_FALSE(benchFamily("nope").has_value());
	CHECK(benchProgram(BenchFamily::WinChain, 4).facts.size() == 3);
	CHECK(benchProgram(BenchFamily::WinCycle, 4).facts.size() == 4);
	CHECK(benchProgram(BenchFamily::ReachGrid, 9).facts.size() == 13);
}

TEST_CASE("bench rows are linear") {
	for (auto family : {BenchFamily::WinChain, BenchFamily::WinCycle, BenchFamily::ReachGrid}) {
		BenchReport r = bench(family, {256, 1024, 4096});
		REQUIRE(r.rows.size() == 3);
		REQUIRE(r.linear().has_value());
		CHECK(*r.linear());
		CHECK(*r.spread() <= 2.0);
		CHECK(r.render().find("spread") != std::string::npos);
	}
	BenchReport one = bench(BenchFamily::WinChain, {64});
	CHECK_FALSE(one.spread().has_value());
	CHECK_FALSE(one.linear().has_value());
	CHECK(one.render().find("spread") == std::string::npos);
}

TEST_CASE("win chain bench row") {
	BenchRow row = benchOne(BenchFamily::WinChain, 512);
	CHECK(row.groundSize == 3066);
	CHECK(row.groundAtoms >= 512);
	CHECK(row.steps > 0);
}

TEST_CASE("fuzz finds no counterexamples") {
	FuzzReport r = fuzz({.seed = 1, .count = 300});
	CHECK(r.generated == 300);
	CHECK(r.counterexamples.empty());
	for (const auto& c : fuzzChecks()) CHECK(r.applied.count(c) == 1);
	CHECK(r.render().find("counterexamples 0") != std::string::npos);

	FuzzReport s = fuzz({.seed = 2, .count = 100, .stratifiedOnly = true});
	CHECK(s.counterexamples.empty());
	CHECK(s.applied.at("stratified") > 0);
}

TEST_CASE("random programs are deterministic per seed") {
	CHECK(testing::fuzzedPrograms(20, 5) == testing::fuzzedPrograms(20, 5));
	CHECK(testing::fuzzedPrograms(20, 5) != testing::fuzzedPrograms(20, 6));
}

TEST_CASE("checkProgram passes on the corpus within budget") {
	std::size_t checked = 0;
	for (const auto& text : testing::declaredCorpusTexts()) {
		CAPTURE(text);
		try {
			auto failure = checkProgram(parseProgram(text), {});
			++checked;
			CHECK_FALSE(failure.has_value());
		}
		catch (const BudgetExceeded&) {
		}
	}
	CHECK(checked >= 8);
}

} // TEST_SUITE
