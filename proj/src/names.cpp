#include "pwi/names.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "pwi/errors.hpp"
#include "text_util.hpp"

namespace pwi {

namespace {

// ASCII replacements for Latin-1 Supplement letters (U+00C0..U+00FF).
// nullptr marks code points that are not letters (multiplication/division signs).
const char* const kLatin1Fold[0x40] = {
    "A", "A", "A", "A", "A",  "A",  "AE", "C",     "E", "E", "E", "E", "I", "I", "I",  "I",
    "D", "N", "O", "O", "O",  "O",  "O",  nullptr, "O", "U", "U", "U", "U", "Y", "TH", "ss",
    "a", "a", "a", "a", "a",  "a",  "ae", "c",     "e", "e", "e", "e", "i", "i", "i",  "i",
    "d", "n", "o", "o", "o",  "o",  "o",  nullptr, "o", "u", "u", "u", "u", "y", "th", "y",
};

// ASCII replacements for Latin Extended-A (U+0100..U+017F).
const char* const kLatinExtAFold[0x80] = {
    "A", "a", "A",  "a",  "A", "a", "C", "c", "C", "c", "C", "c", "C", "c", "D", "d",
    "D", "d", "E",  "e",  "E", "e", "E", "e", "E", "e", "E", "e", "G", "g", "G", "g",
    "G", "g", "G",  "g",  "H", "h", "H", "h", "I", "i", "I", "i", "I", "i", "I", "i",
    "I", "i", "IJ", "ij", "J", "j", "K", "k", "k", "L", "l", "L", "l", "L", "l", "L",
    "l", "L", "l",  "N",  "n", "N", "n", "N", "n", "n", "N", "n", "O", "o", "O", "o",
    "O", "o", "OE", "oe", "R", "r", "R", "r", "R", "r", "S", "s", "S", "s", "S", "s",
    "S", "s", "T",  "t",  "T", "t", "T", "t", "U", "u", "U", "u", "U", "u", "U", "u",
    "U", "u", "U",  "u",  "W", "w", "Y", "y", "Y", "Z", "z", "Z", "z", "Z", "z", "s",
};

const char* ascii_fold(char32_t cp) {
    if (cp >= 0xC0 && cp <= 0xFF)
        return kLatin1Fold[cp - 0xC0];
    if (cp >= 0x100 && cp <= 0x17F)
        return kLatinExtAFold[cp - 0x100];
    return nullptr;
}

bool is_combining_mark(char32_t cp) {
    return cp >= 0x300 && cp <= 0x36F;
}

// Decodes one UTF-8 code point at s[i]; on malformed input consumes a single
// byte and reports it verbatim (robustness over strictness for dirty exports).
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) { return k < s.size() && (byte(k) & 0xC0) == 0x80; };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) |
                      (static_cast<char32_t>(byte(i + 1) & 0x3F) << 6) | (byte(i + 2) & 0x3F);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) |
                      (static_cast<char32_t>(byte(i + 1) & 0x3F) << 12) |
                      (static_cast<char32_t>(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
        i += 4;
        return cp;
    }
    ++i;
    return b0; // malformed byte, passed through
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Folds accented Latin letters to ASCII and drops combining marks; anything
// without a standard decomposition passes through unchanged.
std::string fold_to_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp = decode_utf8(s, i);
        if (is_combining_mark(cp))
            continue;
        if (const char* rep = ascii_fold(cp))
            out += rep;
        else
            encode_utf8(cp, out);
    }
    return out;
}

bool is_separator(char c, std::string_view seps) {
    return seps.find(c) != std::string_view::npos;
}

std::vector<std::string_view> tokenize(std::string_view s, std::string_view seps) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || is_separator(s[i], seps)) {
            if (i > start)
                tokens.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return tokens;
}

bool is_suffix_token(std::string_view token) {
    std::string bare;
    for (char c : token)
        if (c != '.')
            bare.push_back(c);
    bare = detail::to_upper_ascii(bare);
    return bare == "JR" || bare == "SR" || bare == "II" || bare == "III";
}

bool is_all_upper_letters(std::string_view s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::string build_last_name(std::string_view part) {
    auto tokens = tokenize(part, " \t.");
    std::vector<std::string_view> kept;
    for (auto token : tokens)
        if (!is_suffix_token(token))
            kept.push_back(token);
    if (kept.empty())
        kept = tokens; // a name that is nothing but suffix tokens stays as-is
    std::string out;
    for (auto token : kept) {
        if (!out.empty())
            out.push_back(' ');
        out += detail::to_upper_ascii(token);
    }
    return out;
}

std::string build_initials(std::string_view part) {
    std::string out;
    for (auto token : tokenize(part, " \t-.,")) {
        // An all-capitals token is an already-formed initials block, the way
        // WoS abbreviated author fields spell them ("van Raan, AFJ"); keep it
        // whole so those names and already-normalized keys survive unchanged.
        if (is_all_upper_letters(token)) {
            out += token;
            continue;
        }
        // skip leading punctuation such as parentheses around nicknames
        std::size_t i = 0;
        while (i < token.size() && !(std::isalnum(static_cast<unsigned char>(token[i])) ||
                                     static_cast<unsigned char>(token[i]) >= 0x80))
            ++i;
        if (i == token.size())
            continue;
        std::size_t start = i;
        decode_utf8(token, i); // step over one full code point
        out += detail::to_upper_ascii(token.substr(start, i - start));
    }
    return out;
}

} // namespace

std::string normalize_name(std::string_view raw) {
    const std::string folded = fold_to_ascii(raw);
    std::string_view input = detail::trim(folded);
    if (input.empty())
        throw std::invalid_argument("unusable author name: \"" + std::string(raw) + "\"");

    std::string last_name;
    std::string initials;

    const std::size_t comma = input.find(',');
    if (comma != std::string_view::npos) {
        last_name = build_last_name(detail::trim(input.substr(0, comma)));
        initials = build_initials(detail::trim(input.substr(comma + 1)));
    } else {
        auto tokens = tokenize(input, " \t");
        if (tokens.size() >= 2) {
            std::string_view given = tokens.back();
            std::string_view rest =
                detail::trim(input.substr(0, given.data() - input.data()));
            last_name = build_last_name(rest);
            initials = build_initials(given);
        } else {
            last_name = build_last_name(input);
        }
    }

    if (last_name.empty() && initials.empty())
        throw std::invalid_argument("unusable author name: \"" + std::string(raw) + "\"");
    if (last_name.empty())
        return initials;
    if (initials.empty())
        return last_name;
    return last_name + " " + initials;
}

MergeMap MergeMap::from_pairs(std::span<const std::pair<std::string, std::string>> entries) {
    std::unordered_map<std::string, std::string> direct;
    for (const auto& [variant, canonical] : entries) {
        if (variant == canonical)
            continue; // self-mapping is a no-op
        auto [it, inserted] = direct.emplace(variant, canonical);
        if (!inserted && it->second != canonical)
            throw ConfigError("merge map sends \"" + variant + "\" to both \"" + it->second +
                              "\" and \"" + canonical + "\"");
    }

    std::vector<std::string> variants;
    variants.reserve(direct.size());
    for (const auto& [variant, _] : direct)
        variants.push_back(variant);
    std::sort(variants.begin(), variants.end()); // deterministic cycle reporting

    MergeMap map;
    for (const std::string& variant : variants) {
        std::vector<std::string> path{variant};
        std::unordered_set<std::string> seen{variant};
        std::string current = variant;
        while (true) {
            auto it = direct.find(current);
            if (it == direct.end())
                break;
            current = it->second;
            if (!seen.insert(current).second) {
                std::string cycle;
                for (const auto& step : path)
                    cycle += step + " -> ";
                throw ConfigError("merge map contains a cycle: " + cycle + current);
            }
            path.push_back(current);
        }
        map.canonical_[variant] = current;
    }
    return map;
}

const std::string& MergeMap::canonical(const std::string& key) const {
    auto it = canonical_.find(key);
    return it == canonical_.end() ? key : it->second;
}

std::vector<std::string> apply_merge_map(std::vector<std::string> keys, const MergeMap& merges) {
    std::vector<std::string> out;
    out.reserve(keys.size());
    std::unordered_set<std::string> seen;
    for (std::string& key : keys) {
        std::string canonical = merges.canonical(key);
        if (seen.insert(canonical).second)
            out.push_back(std::move(canonical));
    }
    return out;
}

void fill_author_keys(std::vector<PaperRecord>& records, const MergeMap& merges) {
    for (PaperRecord& record : records) {
        std::vector<std::string> keys;
        keys.reserve(record.raw_authors.size());
        for (const std::string& raw : record.raw_authors) {
            try {
                keys.push_back(normalize_name(raw));
            } catch (const std::invalid_argument&) {
                // a name of pure punctuation yields no key; skip it
            }
        }
        record.author_keys = apply_merge_map(std::move(keys), merges);
    }
}

std::map<std::string, AuthorProfile> build_profiles(std::span<const PaperRecord> records) {
    std::map<std::string, AuthorProfile> profiles;
    for (const PaperRecord& record : records) {
        for (const std::string& key : record.author_keys) {
            AuthorProfile& profile = profiles[key];
            if (profile.key.empty())
                profile.key = key;
            profile.paper_ids.insert(record.record_id);
            for (const std::string& other : record.author_keys)
                if (other != key)
                    profile.coauthors.insert(other);
        }
    }
    return profiles;
}

std::vector<AuthorRow> list_authors(std::span<const PaperRecord> records) {
    std::vector<AuthorRow> rows;
    for (const auto& [key, profile] : build_profiles(records))
        rows.push_back({key, profile.paper_ids.size(), profile.coauthors.size()});
    return rows;
}

} // namespace pwi
