#include "lup/sequence_file.hpp"

#include <map>
#include <sstream>

namespace lup {

namespace {

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::vector<std::string> default_names(std::size_t items) {
  if (items == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= items; ++i)
    names.push_back("a" + std::to_string(i));
  return names;
}

SequenceFile SequenceFile::parse(std::istream& in) {
  SequenceFile file;
  std::map<std::string, Item> ids;
  bool have_list = false;
  std::vector<std::string> body;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (starts_with(line, "#list:")) {
      if (have_list || !body.empty())
        throw MalformedSequence("line " + std::to_string(line_no) +
                                ": #list must come once, before the body");
      have_list = true;
      for (const auto& tok : split(line.substr(6))) {
        if (!ids.emplace(tok, static_cast<Item>(file.names.size())).second)
          throw MalformedSequence("#list repeats token '" + tok + "'");
        file.names.push_back(tok);
      }
      continue;
    }
    if (starts_with(line, "#family:")) {
      const auto parts = split(line.substr(8));
      if (!parts.empty()) file.family = parts[0];
      if (parts.size() > 1) file.params = parts[1];
      continue;
    }
    if (starts_with(line, "#")) continue;
    for (auto& tok : split(line)) body.push_back(std::move(tok));
  }

  std::vector<Item> requests;
  requests.reserve(body.size());
  for (const auto& tok : body) {
    auto it = ids.find(tok);
    if (it == ids.end()) {
      if (have_list)
        throw MalformedSequence("token '" + tok + "' is not in the #list header");
      it = ids.emplace(tok, static_cast<Item>(file.names.size())).first;
      file.names.push_back(tok);
    }
    requests.push_back(it->second);
  }
  file.sequence = RequestSequence(ListState::identity(file.names.size()),
                                  std::move(requests));
  return file;
}

SequenceFile SequenceFile::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void SequenceFile::write(std::ostream& out) const {
  if (!family.empty()) {
    out << "#family: " << family;
    if (!params.empty()) out << ' ' << params;
    out << '\n';
  }
  out << "#list:";
  for (Item item : sequence.initial.order()) out << ' ' << names.at(item);
  out << '\n';
  constexpr std::size_t kPerLine = 32;
  for (std::size_t i = 0; i < sequence.requests.size(); ++i) {
    out << names.at(sequence.requests[i]);
    out << ((i + 1) % kPerLine == 0 || i + 1 == sequence.requests.size() ? '\n'
                                                                          : ' ');
  }
}

std::string SequenceFile::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

Item SequenceFile::id_of(const std::string& token) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return static_cast<Item>(i);
  throw MalformedSequence("unknown item token '" + token + "'");
}

}  // namespace lup
