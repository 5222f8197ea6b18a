#include <doctest.h>
#include <support.hpp>

using namespace founded;

namespace {

const char* kWin = "move(1,2). move(2,3).\nwin(x) <- move(x,y) and not win(y).\n";
const char* kReach = "reach(x) <- source(x).\nreach(y) <- edge(x,y) and reach(x).\nsource(1). edge(1,2).\n";

const DefinedUsing* findUse(const std::vector<DefinedUsing>& rel, const std::string& p, const std::string& q) {
	for (const auto& d : rel) {
		if (d.predicate == p && d.uses == q) return &d;
	}
	return nullptr;
}

std::size_t sccIndex(const std::vector<std::vector<std::string>>& order, const std::string& p) {
	for (std::size_t i = 0; i != order.size(); ++i) {
		if (std::find(order[i].begin(), order[i].end(), p) != order[i].end()) return i;
	}
	return order.size();
}

} // namespace

TEST_SUITE("language") {

TEST_CASE("win program defaults") {
	Program p = resolveDeclarations(parseProgram(kWin));
	const auto& move = p.decls.at("move");
	CHECK((move.certainty == Certainty::Certain));
	CHECK((move.completeness == Completeness::NotApplicable));
	const auto& win = p.decls.at("win");
	CHECK((win.certainty == Certainty::Uncertain));
	CHECK((win.completeness == Completeness::Complete));
	CHECK(win.closedness == Closedness::Open);
}

TEST_CASE("reachability defaults to certain") {
	Program p = resolveDeclarations(parseProgram(kReach));
	for (const char* name : {"reach", "source", "edge"}) CHECK(p.decls.at(name).isCertain());
}

TEST_CASE("certain on a self-negating predicate is rejected") {
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("certain q.\nq <- not q.\n")), DeclarationError);
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("certain q.\nq <- not p.\np <- not q.\n")), DeclarationError);
}

TEST_CASE("certain on a predicate using an uncertain one is rejected") {
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("uncertain p.\ncertain q.\nq <- p.\np <- r.\n")), DeclarationError);
}

TEST_CASE("explicit uncertain propagates to dependents") {
	Program p = resolveDeclarations(parseProgram("uncertain p.\nq <- p.\np <- r.\n"));
	CHECK_FALSE(p.decls.at("q").isCertain());
	CHECK(p.decls.at("r").isCertain());
}

TEST_CASE("completeness and closedness constraints") {
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("complete p.\nq <- p.\n")), DeclarationError);
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("complete q.\nq <- p.\n")), DeclarationError);
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("incomplete q.\nclosed q.\nq <- not q.\n")), DeclarationError);
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("closed q.\nq <- q.\n")), DeclarationError);
	Program ok = resolveDeclarations(parseProgram("uncertain q.\nclosed q.\nq <- q.\n"));
	CHECK(ok.decls.at("q").isClosed());
	CHECK(ok.decls.at("q").isComplete());
}

TEST_CASE("declaration for an unused predicate is rejected") {
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("uncertain r.\nq <- p.\n")), DeclarationError);
}

TEST_CASE("negative facts and conclusions make a predicate uncertain") {
	Program p = resolveDeclarations(parseProgram(testing::corpus("examples/yale.fl")));
	CHECK_FALSE(p.decls.at("loaded").isCertain());
	CHECK_FALSE(p.decls.at("alive").isCertain());
	CHECK((p.decls.at("loaded").completeness == Completeness::Incomplete));
	CHECK_THROWS_AS(resolveDeclarations(parseProgram("certain p.\nnot p.\n")), DeclarationError);
}

TEST_CASE("defined_using") {
	auto win = definedUsing(parseProgram(kWin));
	REQUIRE(findUse(win, "win", "win"));
	CHECK(findUse(win, "win", "win")->throughNegation);
	REQUIRE(findUse(win, "win", "move"));
	CHECK(findUse(win, "win", "move")->throughNegation);
	CHECK(findUse(win, "move", "win") == nullptr);

	auto two = definedUsing(parseProgram("q <- not p.\np <- not q.\n"));
	REQUIRE(findUse(two, "q", "q"));
	CHECK(findUse(two, "q", "q")->throughNegation);

	auto reach = definedUsing(parseProgram(kReach));
	REQUIRE(findUse(reach, "reach", "reach"));
	CHECK_FALSE(findUse(reach, "reach", "reach")->throughNegation);
	CHECK_FALSE(findUse(reach, "reach", "edge")->throughNegation);
}

TEST_CASE("scc_order") {
	auto reach = sccOrder(parseProgram(kReach));
	CHECK(reach.size() == 3);
	CHECK(sccIndex(reach, "reach") == 2);

	auto yale = sccOrder(parseProgram(testing::corpus("examples/yale.fl")));
	CHECK(sccIndex(yale, "loaded") < sccIndex(yale, "alive"));

	auto self = sccOrder(parseProgram("p <- p.\n"));
	REQUIRE(self.size() == 1);
	CHECK(self.front() == std::vector<std::string>{"p"});

	auto two = sccOrder(parseProgram("q <- not p.\np <- not q.\n"));
	REQUIRE(two.size() == 1);
	CHECK(two.front() == std::vector<std::string>{"p", "q"});
}

TEST_CASE("scc_order ties go to the least name") {
	auto order = sccOrder(parseProgram("c <- b.\nb.\na.\n"));
	REQUIRE(order.size() == 3);
	CHECK(order[0] == std::vector<std::string>{"a"});
	CHECK(order[1] == std::vector<std::string>{"b"});
	CHECK(order[2] == std::vector<std::string>{"c"});
}

TEST_CASE("resolution is idempotent on the corpus and fuzzed programs") {
	std::vector<std::string> texts = testing::fuzzedPrograms(150);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	for (const auto& text : texts) {
		Program once  = resolveDeclarations(parseProgram(text));
		Program twice = resolveDeclarations(once);
		CHECK(once.decls == twice.decls);
	}
}

TEST_CASE("certainty restriction, homogeneity and topological order hold") {
	std::vector<std::string> texts = testing::fuzzedPrograms(300, 5);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	for (const auto& text : texts) {
		CAPTURE(text);
		Program p = resolveDeclarations(parseProgram(text));
		for (const auto& d : definedUsing(p)) {
			if (!p.decls.at(d.predicate).isCertain()) continue;
			CHECK_FALSE((d.predicate == d.uses && d.throughNegation));
			CHECK(p.decls.at(d.uses).isCertain());
		}
		auto order = sccOrder(p);
		std::map<std::string, std::size_t> at;
		for (std::size_t i = 0; i != order.size(); ++i) {
			bool certain = p.decls.at(order[i].front()).isCertain();
			for (const auto& name : order[i]) {
				at[name] = i;
				CHECK(p.decls.at(name).isCertain() == certain);
			}
		}
		CHECK(at.size() == p.arities().size());
		for (const auto& e : dependencyGraph(p).edges) {
			CHECK(at.at(e.from) <= at.at(e.to));
			if (at.at(e.from) == at.at(e.to) && p.decls.at(e.to).isCertain()) CHECK(e.polarity == Polarity::Positive);
		}
	}
}

} // TEST_SUITE
