#include "permlab/words.hpp"

#include <cctype>
#include <sstream>

namespace permlab {

namespace {

// Hand-rolled recursive descent over the factor grammar.  The cursor is a
// byte offset so errors can point at the offending character.
class Parser {
 public:
  explicit Parser(std::string const& text) : text_(text) {}

  Word parse() {
    Word w = parse_factors(/*closing_paren=*/false);
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "unexpected character '" +
                                 std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  Word parse_factors(bool closing_paren) {
    Word w;
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == ')') {
        if (!closing_paren) throw ParseError(pos_, "unmatched ')'");
        break;
      }
      append_factor(w);
    }
    return w;
  }

  void append_factor(Word& w) {
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;  // identity factor
      return;
    }
    if (c == '(') {
      size_t open = pos_;
      ++pos_;
      Word inner = parse_factors(/*closing_paren=*/true);
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != ')') {
        throw ParseError(open, "unmatched '('");
      }
      ++pos_;
      int64_t e = parse_optional_exponent();
      append_power(w, inner, e);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Letter atom = parse_atom();
      int64_t e = parse_optional_exponent();
      Word one(std::vector<Letter>{atom});
      append_power(w, one, e);
      return;
    }
    throw ParseError(pos_, "expected a generator name, '(' or '1'");
  }

  Letter parse_atom() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    std::optional<int64_t> index;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      index = parse_integer();
      if (pos_ == text_.size() || text_[pos_] != ']') {
        throw ParseError(pos_, "expected ']'");
      }
      ++pos_;
    }
    return Letter(name, index, +1);
  }

  int64_t parse_optional_exponent() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return parse_integer();
    }
    return 1;
  }

  int64_t parse_integer() {
    size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ == text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(start, "expected an integer");
    }
    int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (int64_t{1} << 40)) {
        throw ParseError(start, "integer literal too large");
      }
      ++pos_;
    }
    return neg ? -value : value;
  }

  static void append_power(Word& w, Word const& base, int64_t e) {
    Word unit = base;
    if (e < 0) {
      unit = invert_raw(base);
      e = -e;
    }
    for (int64_t i = 0; i < e; ++i) {
      w.letters.insert(w.letters.end(), unit.letters.begin(),
                       unit.letters.end());
    }
  }

  // Formal inverse without free reduction; parse is not allowed to reduce.
  static Word invert_raw(Word const& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back(it->inverse());
    }
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string const& text_;
  size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string const& text) { return Parser(text).parse(); }

std::string format_letter_name(Letter const& l) {
  std::string out = l.base;
  if (l.index) {
    out += "[" + std::to_string(*l.index) + "]";
  }
  return out;
}

std::string format_word(Word const& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    int64_t run = static_cast<int64_t>(j - i) * w.letters[i].sign;
    if (!first) out << ' ';
    first = false;
    out << format_letter_name(w.letters[i]);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

Word free_reduce(Word const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter const& l : w.letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(Word const& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.letters[i].cancels(w.letters[i + 1])) return false;
  }
  return true;
}

Word multiply(Word const& w1, Word const& w2) {
  Word cat = w1;
  cat.letters.insert(cat.letters.end(), w2.letters.begin(), w2.letters.end());
  return free_reduce(cat);
}

Word invert(Word const& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return free_reduce(out);
}

Word conjugate(Word const& u, Word const& t) {
  return multiply(multiply(invert(t), u), t);
}

Word commutator(Word const& u, Word const& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

int64_t exponent_sum(Word const& w, std::string const& base,
                     std::optional<int64_t> index) {
  int64_t sum = 0;
  for (Letter const& l : w.letters) {
    if (l.base == base && l.index == index) sum += l.sign;
  }
  return sum;
}

bool separator_membership(Word const& w, std::string const& base,
                          std::optional<int64_t> index) {
  return exponent_sum(w, base, index) == 0;
}

}  // namespace permlab
