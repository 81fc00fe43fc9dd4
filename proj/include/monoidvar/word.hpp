#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monoidvar {

/// Letters 0..25 print as a..z. Letters 26..51 form the t-letter band used by
/// generated identities and print as A..Z.
inline constexpr std::size_t kMaxLetters = 52;
inline constexpr std::size_t kBandStart = 26;
inline constexpr std::size_t kMaxExponent = 1u << 16;

class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(std::uint8_t id) : id_(id) {}

  constexpr std::uint8_t id() const { return id_; }
  char display() const;

  static Letter from_char(char c);
  static bool is_letter_char(char c);

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t id_ = 0;
};

/// Ordinary letter by its display character, e.g. named('x').
Letter named(char c);

/// i-th letter of the reserved t-letter band (displayed 'A' + i).
Letter band(std::size_t i);

/// Set of letters as a 64-bit mask; iteration is in id order.
class LetterSet {
 public:
  LetterSet() = default;
  LetterSet(std::initializer_list<Letter> letters);

  void insert(Letter a) { bits_ |= bit(a); }
  void erase(Letter a) { bits_ &= ~bit(a); }
  bool contains(Letter a) const { return (bits_ & bit(a)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<Letter> letters() const;
  std::uint64_t mask() const { return bits_; }

  LetterSet operator|(LetterSet o) const { return from_mask(bits_ | o.bits_); }
  LetterSet operator&(LetterSet o) const { return from_mask(bits_ & o.bits_); }
  LetterSet operator-(LetterSet o) const { return from_mask(bits_ & ~o.bits_); }
  friend bool operator==(LetterSet, LetterSet) = default;

  static LetterSet from_mask(std::uint64_t m) {
    LetterSet s;
    s.bits_ = m;
    return s;
  }
  std::string str() const;

 private:
  static std::uint64_t bit(Letter a) { return std::uint64_t{1} << a.id(); }
  std::uint64_t bits_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of an operation was violated by its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of the free monoid. Storage is one byte per letter id so words hash
/// and compare as strings. Ordering is shortlex: length first, then
/// lexicographic by letter id.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(const std::vector<Letter>& letters);

  static Word parse(std::string_view text);
  static Word from_raw(std::string raw) {
    Word w;
    w.raw_ = std::move(raw);
    return w;
  }

  std::size_t size() const { return raw_.size(); }
  std::size_t length() const { return raw_.size(); }
  bool empty() const { return raw_.empty(); }
  Letter operator[](std::size_t i) const {
    return Letter(static_cast<std::uint8_t>(raw_[i]));
  }
  Letter back() const { return (*this)[size() - 1]; }

  void push_back(Letter a) { raw_.push_back(static_cast<char>(a.id())); }
  void append(const Word& w) { raw_ += w.raw_; }
  void append(Letter a, std::size_t times) {
    raw_.append(times, static_cast<char>(a.id()));
  }
  Word slice(std::size_t pos, std::size_t len) const {
    return from_raw(raw_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix_from(std::size_t pos) const { return from_raw(raw_.substr(pos)); }

  std::vector<Letter> letters() const;
  const std::string& raw() const { return raw_; }

  /// Text form using the `x^k` run compression of the word grammar.
  std::string str() const;
  /// Uncompressed text form, one character per letter.
  std::string plain() const;

  friend Word operator+(const Word& a, const Word& b) {
    return from_raw(a.raw_ + b.raw_);
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::string raw_;
};

/// x^k
Word power(Letter x, std::size_t k);

struct Identity {
  Word lhs;
  Word rhs;
  std::string name;

  Identity() = default;
  Identity(Word l, Word r, std::string n = {})
      : lhs(std::move(l)), rhs(std::move(r)), name(std::move(n)) {}

  /// Parses `<word> = <word>`.
  static Identity parse(std::string_view text, std::string name = {});

  bool trivial() const { return lhs == rhs; }
  std::string str() const;
  /// Name if present, text otherwise.
  std::string label() const { return name.empty() ? str() : name; }

  bool same_sides(const Identity& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
};

/// Endomorphism of the free monoid given on finitely many letters; all other
/// letters are fixed.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Letter, Word>> images);

  void set(Letter a, Word image) { images_[a] = std::move(image); }
  bool maps(Letter a) const { return images_.contains(a); }
  const Word* image_of(Letter a) const;
  Word image(Letter a) const;
  const std::map<Letter, Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  std::string str() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Letter, Word> images_;
};

inline Word substitute(const Word& w, const Substitution& xi) {
  return xi.apply(w);
}

// --- statistics -----------------------------------------------------------

LetterSet content(const Word& w);
std::size_t occurrences(const Word& w, Letter x);

struct LetterClasses {
  LetterSet simple;
  LetterSet multiple;
};
LetterClasses letter_classes(const Word& w);

/// Subsequence of w on the letters in keep.
Word restrict_to(const Word& w, LetterSet keep);
/// w with every letter of drop deleted.
Word remove_letters(const Word& w, LetterSet drop);

// --- decompositions -------------------------------------------------------

/// w = t0 w0 t1 w1 ... tm wm where t0 is the empty sentinel (divider index 0)
/// and t1..tm are the simple letters of w in occurrence order.
struct Decomposition {
  std::vector<Letter> simple;  // t1..tm; divider index i maps to simple[i-1]
  std::vector<Word> blocks;    // w0..wm

  std::size_t divider_count() const { return simple.size() + 1; }
  std::optional<Letter> divider(std::size_t index) const {
    if (index == 0) return std::nullopt;
    return simple.at(index - 1);
  }
  Word interleave() const;
  std::string str() const;
};

Decomposition decompose(const Word& w);

/// Index of the right-most divider strictly preceding the i-th (1-based)
/// occurrence of x; 0 is the sentinel.
std::size_t h_divider(const Word& w, Letter x, std::size_t i);

/// Multiple letters whose first two occurrences lie in different blocks.
LetterSet one_dividers(const Word& w);

bool is_n_limited(const Word& w, std::size_t n);
bool is_i_free(const Word& w, std::size_t i);

/// Aligned block pairs of an identity whose sides share the divider sequence.
struct BlockAlignment {
  std::vector<Letter> dividers;
  std::vector<Word> lhs_blocks;
  std::vector<Word> rhs_blocks;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ShapeError when the two sides have different divider sequences.
BlockAlignment align_blocks(const Identity& id);
std::optional<BlockAlignment> try_align_blocks(const Identity& id);

/// Efficient: same dividers, same multiple letters, and no aligned block pair
/// is (empty, empty). Identities not of that shape are not efficient.
bool is_efficient(const Identity& id);

// --- duality and misc -----------------------------------------------------

Word reverse(const Word& w);
Identity dual_identity(const Identity& id);

/// Every factor ab (a != b) occurs at most once, and ab, ba never both occur.
bool unique_2gram_check(const Word& w);

/// Renames letters to 0,1,2,... in order of first occurrence over lhs then rhs.
Identity canonical_renaming(const Identity& id);

}  // namespace monoidvar

template <>
struct std::hash<monoidvar::Word> {
  std::size_t operator()(const monoidvar::Word& w) const noexcept {
    return std::hash<std::string>{}(w.raw());
  }
};
