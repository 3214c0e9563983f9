// Words over {p, q} in the presentation <p, q | pq = 1> of B_omega.
//
// Every word reduces, by deleting factors pq, to a unique word q^i p^j, and
// q^i p^j corresponds to the element (i, j).

#ifndef BICYCLIC_WORDS_HPP_
#define BICYCLIC_WORDS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/core.hpp"

namespace bicyclic {

  enum class Letter { p, q };

  using Word = std::vector<Letter>;

  // The reduced word q^i p^j.
  struct NormalForm {
    Int i = 0;
    Int j = 0;

    bool operator==(NormalForm const&) const = default;
  };

  // Words longer than this are rejected by parse.
  constexpr std::size_t max_word_length = std::size_t(1) << 24;

  // Grammar: word := item* ; item := ('p'|'q') ('^' positive-decimal)?
  // with optional whitespace between items. Throws ParseError.
  Word parse_word(std::string_view text);

  // "pqqp"; the empty word renders as "".
  std::string to_string(Word const& w);

  // "q^2p^3", "qp", "p"; the identity renders as "1".
  std::string to_string(NormalForm const& nf);

  Word to_word(NormalForm const& nf);

  // Single left-to-right pass with a stack: a q arriving on top of a p
  // cancels it. Linear time.
  NormalForm normalize(Word const& w);

  enum class DeletionOrder { leftmost, rightmost };

  // Naive rewriting: repeatedly delete the leftmost (or rightmost) factor pq
  // until none remains. Quadratic; used to check that the result of
  // `normalize` does not depend on the order of deletions.
  NormalForm reduce_by_deletion(Word w, DeletionOrder order);

  // Folds `mul` over the letters with p -> (0,1), q -> (1,0), starting at
  // the identity (0,0). Result is in B_omega.
  Element word_to_element(Word const& w, MultiplyFn mul = multiply);

  // q^i p^j for x = (i, j). Throws DomainError for B_Z elements.
  Word element_to_word(Element const& x);

  Element to_element(NormalForm const& nf);

}  // namespace bicyclic

#endif  // BICYCLIC_WORDS_HPP_
