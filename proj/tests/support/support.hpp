#pragma once

#include <founded/fuzz.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline std::filesystem::path corpusDir() { return FOUNDED_CORPUS_DIR; }

inline std::string readFile(const std::filesystem::path& path) {
	std::ifstream in(path, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline std::string corpus(const std::string& relative) { return readFile(corpusDir() / relative); }

/// Every corpus program, as paths relative to the corpus directory.
inline std::vector<std::string> corpusPrograms() {
	std::vector<std::string> out;
	for (const char* sub : {"table", "examples"}) {
		for (const auto& e : std::filesystem::directory_iterator(corpusDir() / sub)) {
			if (e.path().extension() == ".fl") out.push_back(std::string(sub) + "/" + e.path().filename().string());
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

/// Texts of the corpus programs whose own declarations are legal.
inline std::vector<std::string> declaredCorpusTexts() {
	std::vector<std::string> out;
	for (const auto& path : corpusPrograms()) {
		std::string text = corpus(path);
		try {
			founded::resolveDeclarations(founded::parseProgram(text));
			out.push_back(std::move(text));
		}
		catch (const founded::DeclarationError&) {
		}
	}
	return out;
}

inline founded::Analysis analyze(const std::string& text, founded::Regime regime = founded::Regime::AsDeclared) {
	return founded::prepare(*founded::applyRegime(founded::parseProgram(text), regime));
}

inline founded::Interpretation foundedOf(const founded::Analysis& a) {
	return founded::linearLfp(a.completed, {.shuffleSeed = std::nullopt, .recordTrace = false}).model;
}

inline std::string valueOf(const founded::Interpretation& itp, std::string_view atom) {
	auto v = itp.value(atom);
	return v ? std::string(founded::toString(*v)) : "missing";
}

/// Random programs from the fuzz generator.
inline std::vector<std::string> fuzzedPrograms(std::size_t count, std::uint64_t seed = 11, bool stratifiedOnly = false) {
	founded::FuzzOptions o;
	o.seed           = seed;
	o.stratifiedOnly = stratifiedOnly;
	std::mt19937_64 rng(seed);
	std::vector<std::string> out;
	for (std::size_t i = 0; i != count; ++i) out.push_back(founded::randomProgramText(rng, o));
	return out;
}

} // namespace testing
