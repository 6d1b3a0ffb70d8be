#pragma once

// Column words. Each column of a Roman dominating function on P_m x C_n is
// written top to bottom over {a,b,c,d}:
//   a  value 2
//   b  value 1
//   c  value 0, dominated by a 2 in its own column or the previous one
//   d  value 0, not (yet) dominated
// A word is "correct" when it avoids the adjacent pairs ad, da, ab, ba, bb.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cylroman {

enum class Letter : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

char to_char(Letter l);

/// Standard: the cylinder itself. Border: the 4-row top block used to bound
/// the loss, where row 4 need not be dominated.
enum class Variant { Standard, Border };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

inline constexpr int kMaxWordLength = 16;
inline constexpr int kBorderWordLength = 4;

/// Fixed-length word packed 2 bits per letter, first letter most
/// significant, so that numeric order of equal-length words is lexicographic.
class ColumnWord {
public:
    ColumnWord() = default;
    ColumnWord(std::uint32_t packed, int length);

    static ColumnWord from_string(std::string_view s);
    std::string to_string() const;

    int size() const { return length_; }
    Letter operator[](int i) const {
        return static_cast<Letter>((packed_ >> (2 * (length_ - 1 - i))) & 3u);
    }
    std::uint32_t packed() const { return packed_; }

    ColumnWord reversed() const;

    bool operator==(const ColumnWord&) const = default;
    std::strong_ordering operator<=>(const ColumnWord& o) const {
        if (auto c = length_ <=> o.length_; c != 0) return c;
        return packed_ <=> o.packed_;
    }

private:
    std::uint32_t packed_ = 0;
    int length_ = 0;
};

bool is_forbidden_pair(Letter upper, Letter lower);
bool is_correct(const ColumnWord& w);

struct LetterCounts {
    int a = 0;
    int b = 0;
    bool operator==(const LetterCounts&) const = default;
};

LetterCounts letter_counts(const ColumnWord& w);

class WordTable {
public:
    WordTable(int m, Variant variant, std::vector<ColumnWord> words);

    int m() const { return m_; }
    Variant variant() const { return variant_; }
    std::size_t size() const { return words_.size(); }
    const ColumnWord& operator[](std::size_t i) const { return words_[i]; }
    const std::vector<ColumnWord>& words() const { return words_; }
    std::optional<std::size_t> index_of(const ColumnWord& w) const;

private:
    int m_;
    Variant variant_;
    std::vector<ColumnWord> words_;
};

/// All correct words of length m (4 for the border variant) in
/// lexicographic order a < b < c < d.
WordTable generate_words(int m, Variant variant = Variant::Standard);

/// One word per line.
void write_word_list(const WordTable& table, std::ostream& os);

}  // namespace cylroman
