#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace glotto {

/// A normalized word. `cps` is the canonical form (Unicode scalar values,
/// the character unit for all distance computation); `utf8` is its encoding.
struct Word {
    std::u32string cps;
    std::string utf8;

    std::size_t length() const { return cps.size(); }
    friend bool operator==(const Word& a, const Word& b) { return a.cps == b.cps; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.cps <=> b.cps; }
};

/// Which characters a word may contain after normalization.
struct NormalizationPolicy {
    std::string name;
    std::function<bool(char32_t)> allowed;

    /// Unicode letters plus apostrophe and hyphen.
    static NormalizationPolicy standard();
    /// Unicode letters only.
    static NormalizationPolicy letters_only();
    /// Any non-whitespace, non-control character except TAB and '#'.
    static NormalizationPolicy permissive();
    /// Lookup by name; throws input_error for unknown names.
    static NormalizationPolicy by_name(std::string_view name);
};

/// One language's word list, keyed by meaning id (1-based, dense or sparse).
struct Lexicon {
    std::string language_tag;
    std::map<int, Word> entries;  // at most one word per meaning

    bool has(int meaning) const { return entries.count(meaning) != 0; }
    const Word& at(int meaning) const { return entries.at(meaning); }
    std::size_t size() const { return entries.size(); }
};

struct Corpus {
    std::vector<Lexicon> lexicons;
    int m_catalog = 0;

    std::size_t size() const { return lexicons.size(); }
    /// Index of the lexicon with the given tag; -1 when absent.
    int find(std::string_view tag) const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Trim, lowercase (simple 1:1 folding) and validate one raw word.
/// Throws input_error for empty-after-trim or disallowed characters.
Word normalize_word(std::string_view raw, const NormalizationPolicy& policy);

/// Parse the TAB-separated word-list format:
///   language_tag <TAB> meaning_id <TAB> word
/// '#' starts a comment line; CRLF accepted, blank lines skipped.
/// Throws parse_error (with line number) or input_error on bad rows.
Corpus parse_corpus(std::istream& in, int m_catalog,
                    const NormalizationPolicy& policy = NormalizationPolicy::standard());

Corpus parse_corpus_file(const std::string& path, int m_catalog,
                         const NormalizationPolicy& policy = NormalizationPolicy::standard());

/// Inverse of parse_corpus: languages in corpus order, meanings ascending,
/// LF line endings.
void serialize_corpus(std::ostream& out, const Corpus& corpus);

}  // namespace glotto
