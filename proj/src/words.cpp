#include "bicyclic/words.hpp"

#include <algorithm>
#include <cctype>

namespace bicyclic {

  namespace {

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }

    [[noreturn]] void fail(std::string_view text,
                           std::size_t      pos,
                           std::string const& why) {
      throw ParseError("word \"" + std::string(text) + "\", position "
                       + std::to_string(pos) + ": " + why);
    }

    void append_power(std::string& out, char letter, Int n) {
      if (n == 0) {
        return;
      }
      out += letter;
      if (n > 1) {
        out += '^';
        out += std::to_string(n);
      }
    }

    Element letter_element(Letter l) {
      return l == Letter::p ? Element(0, 1) : Element(1, 0);
    }

  }  // namespace

  Word parse_word(std::string_view text) {
    Word        w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      char const c = text[pos];
      if (is_space(c)) {
        ++pos;
        continue;
      }
      Letter letter;
      if (c == 'p') {
        letter = Letter::p;
      } else if (c == 'q') {
        letter = Letter::q;
      } else {
        fail(text, pos, std::string("unexpected character '") + c + "'");
      }
      ++pos;
      std::size_t count = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t const start = pos;
        std::size_t       value = 0;
        while (pos < text.size() && is_digit(text[pos])) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > max_word_length) {
            fail(text, start, "exponent too large");
          }
          ++pos;
        }
        if (pos == start) {
          fail(text, start, "expected a decimal exponent after '^'");
        }
        if (value == 0) {
          fail(text, start, "exponent must be positive");
        }
        count = value;
      }
      if (w.size() + count > max_word_length) {
        fail(text, pos, "word too long");
      }
      w.insert(w.end(), count, letter);
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) {
      out += (l == Letter::p ? 'p' : 'q');
    }
    return out;
  }

  std::string to_string(NormalForm const& nf) {
    if (nf.i == 0 && nf.j == 0) {
      return "1";
    }
    std::string out;
    append_power(out, 'q', nf.i);
    append_power(out, 'p', nf.j);
    return out;
  }

  Word to_word(NormalForm const& nf) {
    Word w(static_cast<std::size_t>(nf.i), Letter::q);
    w.insert(w.end(), static_cast<std::size_t>(nf.j), Letter::p);
    return w;
  }

  NormalForm normalize(Word const& w) {
    Word stack;
    stack.reserve(w.size());
    for (Letter l : w) {
      if (l == Letter::q && !stack.empty() && stack.back() == Letter::p) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    // The stack now has no factor pq, so it is q^i p^j.
    auto const first_p = std::find(stack.begin(), stack.end(), Letter::p);
    return NormalForm{static_cast<Int>(first_p - stack.begin()),
                      static_cast<Int>(stack.end() - first_p)};
  }

  NormalForm reduce_by_deletion(Word w, DeletionOrder order) {
    while (w.size() >= 2) {
      std::size_t const pairs = w.size() - 1;
      std::size_t       found = pairs;
      for (std::size_t n = 0; n < pairs; ++n) {
        std::size_t const at = order == DeletionOrder::leftmost ? n
                                                                : pairs - 1 - n;
        if (w[at] == Letter::p && w[at + 1] == Letter::q) {
          found = at;
          break;
        }
      }
      if (found == pairs) {
        break;
      }
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(found),
              w.begin() + static_cast<std::ptrdiff_t>(found) + 2);
    }
    NormalForm nf;
    std::size_t n = 0;
    while (n < w.size() && w[n] == Letter::q) {
      ++nf.i;
      ++n;
    }
    while (n < w.size() && w[n] == Letter::p) {
      ++nf.j;
      ++n;
    }
    if (n != w.size()) {
      throw Error("reduce_by_deletion: irreducible word " + to_string(w)
                  + " is not of the form q^i p^j");
    }
    return nf;
  }

  Element word_to_element(Word const& w, MultiplyFn mul) {
    Element x(0, 0);
    for (Letter l : w) {
      x = mul(x, letter_element(l));
    }
    return x;
  }

  Word element_to_word(Element const& x) {
    if (x.domain() != Domain::omega) {
      throw DomainError("element_to_word: " + to_string(x)
                        + " is in B_Z, which has no word presentation");
    }
    return to_word(NormalForm{x.i(), x.j()});
  }

  Element to_element(NormalForm const& nf) {
    return Element(nf.i, nf.j);
  }

}  // namespace bicyclic
