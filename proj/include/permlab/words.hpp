// Free-group words over an indexed alphabet: parsing, printing, free
// reduction, exponent sums, and the usual group-word constructors.

#ifndef PERMLAB_WORDS_HPP_
#define PERMLAB_WORDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permlab {

// One signed, optionally indexed generator occurrence.  Letters with the
// same base name but different indices (or one indexed, one not) are
// distinct generators.
struct Letter {
  std::string base;
  std::optional<int64_t> index;
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(std::string b, std::optional<int64_t> idx, int s)
      : base(std::move(b)), index(idx), sign(s) {}

  [[nodiscard]] Letter inverse() const { return Letter(base, index, -sign); }

  // Same generator, opposite signs.
  [[nodiscard]] bool cancels(Letter const& other) const {
    return base == other.base && index == other.index && sign == -other.sign;
  }

  friend bool operator==(Letter const& a, Letter const& b) {
    return a.base == b.base && a.index == b.index && a.sign == b.sign;
  }
  friend auto operator<=>(Letter const& a, Letter const& b) = default;
};

// A finite sequence of letters.  Words produced by parse_word are stored
// exactly as written; the algebraic operations below always return freely
// reduced words, so reduced words can be compared with operator==.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  [[nodiscard]] bool empty() const { return letters.empty(); }
  [[nodiscard]] size_t size() const { return letters.size(); }

  friend bool operator==(Word const& a, Word const& b) {
    return a.letters == b.letters;
  }
};

// Thrown by parse_word; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, std::string const& message)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        position_(position) {}
  [[nodiscard]] size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnboundGenerator : public std::runtime_error {
 public:
  explicit UnboundGenerator(std::string const& name)
      : std::runtime_error("unbound generator: " + name) {}
};

// Grammar (whitespace separates factors):
//   word   := factor*
//   factor := atom ("^" integer)? | "(" word ")" ("^" integer)? | "1"
//   atom   := name ("[" integer "]")?
//   name   := [A-Za-z][A-Za-z0-9_]*
// Negative exponents invert, exponent 0 yields the empty word, and "1"
// denotes the empty word.  Exponents expand eagerly into repeated letters.
Word parse_word(std::string const& text);

// Canonical form: one factor per run of equal letters, exponents collapsed,
// indices in brackets.  The empty word prints as "1".
std::string format_word(Word const& w);

// The unique reduced word freely equal to w.  Idempotent.
Word free_reduce(Word const& w);

bool is_reduced(Word const& w);

// free_reduce(w1 . w2)
Word multiply(Word const& w1, Word const& w2);

// Reverse the letters and flip all signs.
Word invert(Word const& w);

// free_reduce(t^-1 u t)
Word conjugate(Word const& u, Word const& t);

// free_reduce(u^-1 v^-1 u v)
Word commutator(Word const& u, Word const& v);

// Sum of signs over occurrences of the named generator; a homomorphism
// onto the integers.
int64_t exponent_sum(Word const& w, std::string const& base,
                     std::optional<int64_t> index = std::nullopt);

// Membership in S = { w : exponent sum of the named generator is 0 },
// a recursive subgroup separating the identity class from the class of
// the generator itself.
bool separator_membership(Word const& w, std::string const& base,
                          std::optional<int64_t> index = std::nullopt);

// Key for homomorphism assignments: (base, index) identifies a generator.
using GenKey = std::pair<std::string, std::optional<int64_t>>;

inline GenKey gen_key(Letter const& l) { return {l.base, l.index}; }

// "name" or "name[index]", without the sign.
std::string format_letter_name(Letter const& l);

// Image of w under the homomorphism determined by `assign`, folded with
// the target's composition convention: multiply(a, b) is "a then b", so
// the leftmost letter of w acts first.  Target must provide
//   Element identity() const;
//   Element multiply(Element, Element) const;
//   Element invert(Element) const;
template <typename Target>
typename Target::Element evaluate_hom(
    Word const& w, Target const& target,
    std::map<GenKey, typename Target::Element> const& assign) {
  auto acc = target.identity();
  for (Letter const& l : w.letters) {
    auto it = assign.find(gen_key(l));
    if (it == assign.end()) {
      throw UnboundGenerator(format_letter_name(l));
    }
    auto img = l.sign > 0 ? it->second : target.invert(it->second);
    acc = target.multiply(acc, img);
  }
  return acc;
}

}  // namespace permlab

#endif  // PERMLAB_WORDS_HPP_
