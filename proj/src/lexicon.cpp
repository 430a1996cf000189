#include "moodflow/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "moodflow/error.hpp"
#include "moodflow/porter.hpp"
#include "moodflow/textnorm.hpp"

namespace moodflow {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t lineno,
                             const std::string& what) {
    throw_data(source + ":" + std::to_string(lineno) + ": " + what);
}

bool is_lower_alnum(std::string_view s) {
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return !s.empty();
}

} // namespace

std::size_t Lexicon::stem_count() const {
    std::size_t n = 0;
    for (const auto& dim : entries) n += dim.size();
    return n;
}

void Lexicon::rebuild_stem_sets() {
    for (int i = 0; i < kNumDimensions; ++i) {
        stem_sets_[i].clear();
        for (const auto& [stem, raws] : entries[i]) stem_sets_[i].insert(stem);
    }
}

Lexicon parse_lexicon(std::istream& in, const std::string& source_name) {
    Lexicon lex;
    bool stemmed_mode = false;
    int current_dim = -1;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string body = trim(line);
        if (body.empty()) continue;

        if (body[0] == '@') {
            auto space = body.find_first_of(" \t");
            std::string directive = body.substr(0, space);
            std::string value =
                space == std::string::npos ? "" : trim(body.substr(space));
            if (directive == "@stemmed") {
                stemmed_mode = true;
            } else if (directive == "@name") {
                lex.name = value;
            } else if (directive == "@version") {
                lex.version = value;
            } else {
                parse_fail(source_name, lineno,
                           "unknown directive \"" + directive + "\"");
            }
            continue;
        }

        if (body.front() == '[') {
            if (body.back() != ']')
                parse_fail(source_name, lineno, "unterminated section header");
            std::string label = trim(body.substr(1, body.size() - 2));
            MoodDimension d;
            if (!parse_dimension(label, d))
                parse_fail(source_name, lineno,
                           "unknown dimension label \"" + label + "\"");
            current_dim = static_cast<int>(d);
            continue;
        }

        if (current_dim < 0)
            parse_fail(source_name, lineno,
                       "term before any [dimension] section");

        if (stemmed_mode) {
            std::string stem;
            std::vector<std::string> raws;
            auto colon = body.find(':');
            if (colon == std::string::npos) {
                stem = trim(body);
            } else {
                stem = trim(body.substr(0, colon));
                std::stringstream raw_list(body.substr(colon + 1));
                std::string raw;
                while (std::getline(raw_list, raw, ',')) {
                    raw = trim(raw);
                    if (raw.empty())
                        parse_fail(source_name, lineno, "empty raw form");
                    raws.push_back(raw);
                }
            }
            if (!is_lower_alnum(stem))
                parse_fail(source_name, lineno,
                           "stem must be lowercase alphanumeric, got \"" +
                               stem + "\"");
            auto& slot = lex.entries[current_dim][stem];
            slot.insert(slot.end(), raws.begin(), raws.end());
            lex.raw_term_count += raws.empty() ? 1 : raws.size();
        } else {
            if (body.find_first_of(" \t") != std::string::npos)
                parse_fail(source_name, lineno,
                           "one term per line (no whitespace), got \"" + body +
                               "\"");
            std::string cleaned = clean_token(body);
            if (cleaned.empty())
                parse_fail(source_name, lineno,
                           "term has no alphanumeric characters: \"" + body +
                               "\"");
            std::string stem = porter_stem(cleaned);
            lex.entries[current_dim][stem].push_back(body);
            ++lex.raw_term_count;
        }
    }

    for (int i = 0; i < kNumDimensions; ++i) {
        if (lex.entries[i].empty())
            throw_data(source_name + ": empty dimension: " +
                       std::string(kDimensionNames[i]));
    }
    lex.rebuild_stem_sets();
    return lex;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("cannot open lexicon file: " + path);
    return parse_lexicon(in, path);
}

void save_lexicon(const Lexicon& lex, std::ostream& out) {
    out << "# canonical (pre-stemmed) lexicon\n";
    if (!lex.name.empty()) out << "@name " << lex.name << "\n";
    if (!lex.version.empty()) out << "@version " << lex.version << "\n";
    out << "@stemmed\n";
    for (int i = 0; i < kNumDimensions; ++i) {
        out << "[" << kDimensionNames[i] << "]\n";
        for (const auto& [stem, raws] : lex.entries[i]) {
            out << stem;
            for (std::size_t r = 0; r < raws.size(); ++r)
                out << (r == 0 ? ": " : ", ") << raws[r];
            out << "\n";
        }
    }
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write lexicon file: " + path);
    save_lexicon(lex, out);
    if (!out) throw_data("write failed: " + path);
}

std::vector<OverlapEntry> overlap_report(const Lexicon& lex) {
    std::map<std::string, std::vector<MoodDimension>> by_stem;
    for (int i = 0; i < kNumDimensions; ++i)
        for (const auto& [stem, raws] : lex.entries[i])
            by_stem[stem].push_back(static_cast<MoodDimension>(i));
    std::vector<OverlapEntry> report;
    for (auto& [stem, dims] : by_stem)
        if (dims.size() >= 2) report.push_back({stem, std::move(dims)});
    return report;
}

} // namespace moodflow
