#include "monoidvar/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <bit>
#include <sstream>

namespace monoidvar {

char Letter::display() const {
  if (id_ < kBandStart) return static_cast<char>('a' + id_);
  return static_cast<char>('A' + (id_ - kBandStart));
}

bool Letter::is_letter_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter(static_cast<std::uint8_t>(c - 'a'));
  if (c >= 'A' && c <= 'Z')
    return Letter(static_cast<std::uint8_t>(kBandStart + (c - 'A')));
  throw PreconditionError(std::string("not a letter: '") + c + "'");
}

Letter named(char c) { return Letter::from_char(c); }

Letter band(std::size_t i) {
  if (i >= kMaxLetters - kBandStart)
    throw PreconditionError("t-letter band exhausted at index " +
                            std::to_string(i));
  return Letter(static_cast<std::uint8_t>(kBandStart + i));
}

LetterSet::LetterSet(std::initializer_list<Letter> letters) {
  for (Letter a : letters) insert(a);
}

std::size_t LetterSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  std::uint64_t m = bits_;
  while (m) {
    int b = std::countr_zero(m);
    out.emplace_back(static_cast<std::uint8_t>(b));
    m &= m - 1;
  }
  return out;
}

std::string LetterSet::str() const {
  std::string s = "{";
  bool first = true;
  for (Letter a : letters()) {
    if (!first) s += ",";
    s += a.display();
    first = false;
  }
  return s + "}";
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter a : letters) push_back(a);
}

Word::Word(const std::vector<Letter>& letters) {
  for (Letter a : letters) push_back(a);
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word Word::parse(std::string_view text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  Word w;
  // "1" names the empty word, as in identities like x = 1.
  if (hi - lo == 1 && text[lo] == '1') return w;
  std::size_t i = lo;
  while (i < hi) {
    char c = text[i];
    if (!Letter::is_letter_char(c))
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    Letter a = Letter::from_char(c);
    ++i;
    std::size_t k = 1;
    if (i < hi && text[i] == '^') {
      std::size_t start = ++i;
      if (i >= hi || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("exponent expected", i);
      if (text[i] == '0') throw ParseError("exponent must be positive", i);
      k = 0;
      while (i < hi && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = k * 10 + static_cast<std::size_t>(text[i] - '0');
        if (k > kMaxExponent) throw ParseError("exponent exceeds cap", start);
        ++i;
      }
    }
    w.append(a, k);
  }
  return w;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < size()) {
    std::size_t j = i;
    while (j < size() && raw_[j] == raw_[i]) ++j;
    out += (*this)[i].display();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Word::plain() const {
  std::string out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out += (*this)[i].display();
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  int r = a.raw_.compare(b.raw_);
  // raw bytes are letter ids below 128, so char comparison matches id order
  if (r < 0) return std::strong_ordering::less;
  if (r > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Word power(Letter x, std::size_t k) {
  Word w;
  w.append(x, k);
  return w;
}

Identity Identity::parse(std::string_view text, std::string name) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("missing '='", text.size());
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '='", text.find('=', eq + 1));
  Word lhs, rhs;
  try {
    lhs = Word::parse(text.substr(0, eq));
  } catch (const ParseError& e) {
    throw ParseError("left side: malformed word", e.position());
  }
  try {
    rhs = Word::parse(text.substr(eq + 1));
  } catch (const ParseError& e) {
    throw ParseError("right side: malformed word", eq + 1 + e.position());
  }
  return Identity(std::move(lhs), std::move(rhs), std::move(name));
}

std::string Identity::str() const { return lhs.str() + " = " + rhs.str(); }

Substitution::Substitution(
    std::initializer_list<std::pair<Letter, Word>> images) {
  for (const auto& [a, w] : images) images_[a] = w;
}

const Word* Substitution::image_of(Letter a) const {
  auto it = images_.find(a);
  return it == images_.end() ? nullptr : &it->second;
}

Word Substitution::image(Letter a) const {
  if (const Word* w = image_of(a)) return *w;
  return Word{a};
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (const Word* img = image_of(w[i]))
      out.append(*img);
    else
      out.push_back(w[i]);
  }
  return out;
}

std::string Substitution::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, w] : images_) {
    if (!first) s += ",";
    s += a.display();
    s += ":";
    s += w.empty() ? "1" : w.plain();
    first = false;
  }
  return s + "}";
}

LetterSet content(const Word& w) {
  LetterSet s;
  for (std::size_t i = 0; i < w.size(); ++i) s.insert(w[i]);
  return s;
}

std::size_t occurrences(const Word& w, Letter x) {
  return static_cast<std::size_t>(
      std::count(w.raw().begin(), w.raw().end(), static_cast<char>(x.id())));
}

LetterClasses letter_classes(const Word& w) {
  std::array<std::uint32_t, kMaxLetters> occ{};
  for (std::size_t i = 0; i < w.size(); ++i) ++occ[w[i].id()];
  LetterClasses c;
  for (std::size_t id = 0; id < kMaxLetters; ++id) {
    if (occ[id] == 1) c.simple.insert(Letter(static_cast<std::uint8_t>(id)));
    if (occ[id] >= 2) c.multiple.insert(Letter(static_cast<std::uint8_t>(id)));
  }
  return c;
}

Word restrict_to(const Word& w, LetterSet keep) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (keep.contains(w[i])) out.push_back(w[i]);
  return out;
}

Word remove_letters(const Word& w, LetterSet drop) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!drop.contains(w[i])) out.push_back(w[i]);
  return out;
}

Word Decomposition::interleave() const {
  Word w = blocks.at(0);
  for (std::size_t i = 0; i < simple.size(); ++i) {
    w.push_back(simple[i]);
    w.append(blocks.at(i + 1));
  }
  return w;
}

std::string Decomposition::str() const {
  std::ostringstream os;
  os << "1 [" << (blocks[0].empty() ? "" : blocks[0].str()) << "]";
  for (std::size_t i = 0; i < simple.size(); ++i)
    os << " " << simple[i].display() << " ["
       << (blocks[i + 1].empty() ? "" : blocks[i + 1].str()) << "]";
  return os.str();
}

Decomposition decompose(const Word& w) {
  LetterSet simple = letter_classes(w).simple;
  Decomposition d;
  d.blocks.emplace_back();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (simple.contains(w[i])) {
      d.simple.push_back(w[i]);
      d.blocks.emplace_back();
    } else {
      d.blocks.back().push_back(w[i]);
    }
  }
  return d;
}

std::size_t h_divider(const Word& w, Letter x, std::size_t i) {
  if (i == 0) throw PreconditionError("occurrence number must be positive");
  LetterSet simple = letter_classes(w).simple;
  std::size_t divider = 0, seen = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == x && ++seen == i) return divider;
    if (simple.contains(w[p])) ++divider;
  }
  throw PreconditionError(std::string("letter ") + x.display() + " has only " +
                          std::to_string(seen) + " occurrence(s), asked for " +
                          std::to_string(i));
}

LetterSet one_dividers(const Word& w) {
  LetterSet out;
  for (Letter x : letter_classes(w).multiple.letters())
    if (h_divider(w, x, 1) != h_divider(w, x, 2)) out.insert(x);
  return out;
}

bool is_n_limited(const Word& w, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  std::array<std::size_t, kMaxLetters> occ{};
  for (std::size_t i = 0; i < w.size(); ++i)
    if (++occ[w[i].id()] > n) return false;
  return true;
}

bool is_i_free(const Word& w, std::size_t i) {
  if (i < 2) throw PreconditionError("i must be at least 2");
  const std::string& s = w.raw();
  const std::size_t len = s.size();
  for (std::size_t p = 1; p * i <= len; ++p) {
    // run[q] counts consecutive positions q' <= q with s[q'] == s[q'+p]
    std::size_t run = 0;
    for (std::size_t q = 0; q + p < len; ++q) {
      run = (s[q] == s[q + p]) ? run + 1 : 0;
      if (run >= p * (i - 1)) return false;
    }
  }
  return true;
}

std::optional<BlockAlignment> try_align_blocks(const Identity& id) {
  Decomposition du = decompose(id.lhs), dv = decompose(id.rhs);
  if (du.simple != dv.simple) return std::nullopt;
  return BlockAlignment{du.simple, du.blocks, dv.blocks};
}

BlockAlignment align_blocks(const Identity& id) {
  auto a = try_align_blocks(id);
  if (!a)
    throw ShapeError("divider sequences differ: " + decompose(id.lhs).str() +
                     " vs " + decompose(id.rhs).str());
  return *a;
}

bool is_efficient(const Identity& id) {
  auto a = try_align_blocks(id);
  if (!a) return false;
  if (letter_classes(id.lhs).multiple != letter_classes(id.rhs).multiple)
    return false;
  for (std::size_t i = 0; i < a->lhs_blocks.size(); ++i)
    if (a->lhs_blocks[i].empty() && a->rhs_blocks[i].empty()) return false;
  return true;
}

Word reverse(const Word& w) {
  std::string r = w.raw();
  std::reverse(r.begin(), r.end());
  return Word::from_raw(std::move(r));
}

Identity dual_identity(const Identity& id) {
  return Identity(reverse(id.lhs), reverse(id.rhs),
                  id.name.empty() ? std::string{} : "dual " + id.name);
}

bool unique_2gram_check(const Word& w) {
  std::array<std::array<std::uint8_t, kMaxLetters>, kMaxLetters> seen{};
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto a = w[i].id(), b = w[i + 1].id();
    if (a == b) continue;
    if (seen[a][b] || seen[b][a]) return false;
    seen[a][b] = 1;
  }
  return true;
}

Identity canonical_renaming(const Identity& id) {
  std::array<int, kMaxLetters> map;
  map.fill(-1);
  int next = 0;
  auto rename = [&](const Word& w) {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto a = w[i].id();
      if (map[a] < 0) map[a] = next++;
      out.push_back(Letter(static_cast<std::uint8_t>(map[a])));
    }
    return out;
  };
  Word l = rename(id.lhs);
  Word r = rename(id.rhs);
  return Identity(std::move(l), std::move(r), id.name);
}

}  // namespace monoidvar
