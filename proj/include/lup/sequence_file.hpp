// Plain-text request sequences.
//
//   #family: alpha k=1        (optional, written by the generator)
//   #list: x y                (optional, fixes the initial order)
//   x y x x x y x x x
//
// Without a #list header the initial order is the order in which tokens
// first appear. Other lines starting with '#' are comments.

#ifndef LUP_SEQUENCE_FILE_HPP
#define LUP_SEQUENCE_FILE_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lup/core.hpp"

namespace lup {

struct SequenceFile {
  std::vector<std::string> names;  // item id -> token
  RequestSequence sequence;
  std::string family;  // empty when the file carries no #family line
  std::string params;

  // Throws MalformedSequence for unknown tokens or a bad header.
  static SequenceFile parse(std::istream& in);
  static SequenceFile parse_string(const std::string& text);
  void write(std::ostream& out) const;
  std::string to_string() const;

  // Id of `token`; throws MalformedSequence if absent.
  Item id_of(const std::string& token) const;
};

// x, y for two items; a1..al otherwise.
std::vector<std::string> default_names(std::size_t items);

}  // namespace lup

#endif  // LUP_SEQUENCE_FILE_HPP
