#include "cylroman/words.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cylroman {

char to_char(Letter l) { return static_cast<char>('a' + static_cast<int>(l)); }

std::string_view to_string(Variant v) { return v == Variant::Standard ? "standard" : "border"; }

Variant parse_variant(std::string_view s) {
    if (s == "standard") return Variant::Standard;
    if (s == "border") return Variant::Border;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

ColumnWord::ColumnWord(std::uint32_t packed, int length) : packed_(packed), length_(length) {
    if (length < 1 || length > kMaxWordLength) throw std::invalid_argument("word length out of range");
    if (length < kMaxWordLength && (packed >> (2 * length)) != 0) throw std::invalid_argument("packed word too wide");
}

ColumnWord ColumnWord::from_string(std::string_view s) {
    if (s.empty() || s.size() > kMaxWordLength) throw std::invalid_argument("word length out of range");
    std::uint32_t packed = 0;
    for (char ch : s) {
        if (ch < 'a' || ch > 'd') throw std::invalid_argument("letter '" + std::string(1, ch) + "' not in {a,b,c,d}");
        packed = (packed << 2) | static_cast<std::uint32_t>(ch - 'a');
    }
    return ColumnWord(packed, static_cast<int>(s.size()));
}

std::string ColumnWord::to_string() const {
    std::string s(static_cast<std::size_t>(length_), ' ');
    for (int i = 0; i < length_; ++i) s[static_cast<std::size_t>(i)] = to_char((*this)[i]);
    return s;
}

ColumnWord ColumnWord::reversed() const {
    std::uint32_t packed = 0;
    for (int i = length_ - 1; i >= 0; --i) packed = (packed << 2) | static_cast<std::uint32_t>((*this)[i]);
    return ColumnWord(packed, length_);
}

bool is_forbidden_pair(Letter upper, Letter lower) {
    using enum Letter;
    return (upper == a && lower == d) || (upper == d && lower == a) || (upper == a && lower == b) ||
           (upper == b && lower == a) || (upper == b && lower == b);
}

bool is_correct(const ColumnWord& w) {
    for (int i = 0; i + 1 < w.size(); ++i)
        if (is_forbidden_pair(w[i], w[i + 1])) return false;
    return true;
}

LetterCounts letter_counts(const ColumnWord& w) {
    LetterCounts c;
    for (int i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::a) ++c.a;
        if (w[i] == Letter::b) ++c.b;
    }
    return c;
}

WordTable::WordTable(int m, Variant variant, std::vector<ColumnWord> words)
    : m_(m), variant_(variant), words_(std::move(words)) {
    if (!std::is_sorted(words_.begin(), words_.end()) ||
        std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw std::invalid_argument("WordTable words must be strictly increasing");
}

std::optional<std::size_t> WordTable::index_of(const ColumnWord& w) const {
    const auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
}

namespace {

// Depth-first extension; letters are tried in a..d order so output is sorted.
void extend(std::uint32_t prefix, int len, int target, std::vector<ColumnWord>& out) {
    if (len == target) {
        out.emplace_back(prefix, target);
        return;
    }
    for (std::uint32_t next = 0; next < 4; ++next) {
        if (len > 0 && is_forbidden_pair(static_cast<Letter>(prefix & 3u), static_cast<Letter>(next))) continue;
        extend((prefix << 2) | next, len + 1, target, out);
    }
}

}  // namespace

WordTable generate_words(int m, Variant variant) {
    if (variant == Variant::Border && m != kBorderWordLength)
        throw std::invalid_argument("border variant words have length 4, got m=" + std::to_string(m));
    if (m < 2) throw std::invalid_argument("word length m must be >= 2, got " + std::to_string(m));
    if (m > kMaxWordLength) throw std::invalid_argument("word length m must be <= 16");
    std::vector<ColumnWord> words;
    extend(0, 0, m, words);
    return WordTable(m, variant, std::move(words));
}

void write_word_list(const WordTable& table, std::ostream& os) {
    for (const auto& w : table.words()) os << w.to_string() << '\n';
}

}  // namespace cylroman
