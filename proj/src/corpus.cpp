#include "glotto/corpus.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "glotto/errors.hpp"
#include "glotto/unicode.hpp"

namespace glotto {

namespace {

bool is_ascii_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' || c == U'\f' || c == U'\v';
}

std::string describe_char(char32_t c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
    std::string s = buf;
    if (c >= 0x20 && c != 0x7F) s += " '" + unicode::encode_utf8(std::u32string(1, c)) + "'";
    return s;
}

}  // namespace

NormalizationPolicy NormalizationPolicy::standard() {
    return {"standard", [](char32_t c) { return unicode::is_letter(c) || c == U'\'' || c == U'-'; }};
}

NormalizationPolicy NormalizationPolicy::letters_only() {
    return {"letters-only", [](char32_t c) { return unicode::is_letter(c); }};
}

NormalizationPolicy NormalizationPolicy::permissive() {
    return {"permissive", [](char32_t c) {
                return !is_ascii_space(c) && c >= 0x21 && c != 0x7F && c != U'#';
            }};
}

NormalizationPolicy NormalizationPolicy::by_name(std::string_view name) {
    if (name == "standard") return standard();
    if (name == "letters-only") return letters_only();
    if (name == "permissive") return permissive();
    throw input_error("unknown normalization policy '" + std::string(name) + "'");
}

int Corpus::find(std::string_view tag) const {
    for (std::size_t i = 0; i < lexicons.size(); ++i)
        if (lexicons[i].language_tag == tag) return static_cast<int>(i);
    return -1;
}

Word normalize_word(std::string_view raw, const NormalizationPolicy& policy) {
    std::u32string cps = unicode::decode_utf8(raw);

    std::size_t b = 0, e = cps.size();
    while (b < e && is_ascii_space(cps[b])) ++b;
    while (e > b && is_ascii_space(cps[e - 1])) --e;
    if (b == e) throw input_error("empty word");

    std::u32string norm;
    norm.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
        const char32_t c = unicode::simple_lower(cps[i]);
        if (!policy.allowed(c))
            throw input_error("disallowed character " + describe_char(c) + " in word");
        norm.push_back(c);
    }
    std::string utf8 = unicode::encode_utf8(norm);
    return Word{std::move(norm), std::move(utf8)};
}

Corpus parse_corpus(std::istream& in, int m_catalog, const NormalizationPolicy& policy) {
    if (m_catalog < 1) throw input_error("meaning catalog size must be >= 1");

    Corpus corpus;
    corpus.m_catalog = m_catalog;
    std::unordered_map<std::string, std::size_t> index;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos ||
            line.find('\t', t2 + 1) != std::string::npos)
            throw parse_error("expected 3 TAB-separated columns", lineno);

        const std::string tag = line.substr(0, t1);
        const std::string id_text = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string word_text = line.substr(t2 + 1);

        if (tag.empty()) throw parse_error("empty language tag", lineno);
        for (char c : tag)
            if (static_cast<unsigned char>(c) < 0x21)
                throw parse_error("language tag contains whitespace or control character", lineno);

        int meaning = 0;
        const auto [ptr, ec] =
            std::from_chars(id_text.data(), id_text.data() + id_text.size(), meaning);
        if (ec != std::errc{} || ptr != id_text.data() + id_text.size())
            throw parse_error("meaning id '" + id_text + "' is not a decimal integer", lineno);
        if (meaning < 1 || meaning > m_catalog)
            throw parse_error("meaning id " + std::to_string(meaning) + " outside [1, " +
                                  std::to_string(m_catalog) + "]",
                              lineno);

        Word word;
        try {
            word = normalize_word(word_text, policy);
        } catch (const input_error& e) {
            throw parse_error(std::string(e.what()) + " (language '" + tag + "', meaning " +
                                  std::to_string(meaning) + ")",
                              lineno);
        }

        auto [it, inserted] = index.try_emplace(tag, corpus.lexicons.size());
        if (inserted) corpus.lexicons.push_back(Lexicon{tag, {}});
        Lexicon& lex = corpus.lexicons[it->second];
        if (!lex.entries.emplace(meaning, std::move(word)).second)
            throw parse_error("duplicate entry for language '" + tag + "', meaning " +
                                  std::to_string(meaning),
                              lineno);
    }
    return corpus;
}

Corpus parse_corpus_file(const std::string& path, int m_catalog,
                         const NormalizationPolicy& policy) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open word-list file '" + path + "'");
    return parse_corpus(in, m_catalog, policy);
}

void serialize_corpus(std::ostream& out, const Corpus& corpus) {
    for (const Lexicon& lex : corpus.lexicons)
        for (const auto& [meaning, word] : lex.entries)
            out << lex.language_tag << '\t' << meaning << '\t' << word.utf8 << '\n';
}

}  // namespace glotto
