#include "lup/compressor.hpp"

#include <algorithm>
#include <array>
#include <memory>

#include "lup/algorithms.hpp"

namespace lup {

namespace {

constexpr std::string_view kMagic = "LUP1";
constexpr std::array<const char*, 5> kContainerIds = {"mtf", "ts", "mtfo",
                                                      "mtfe", "best3"};

std::unique_ptr<OnlineAlgorithm> make_coder_algorithm(
    const std::string& algorithm) {
  if (algorithm == "best3")
    throw UnsupportedAlgorithm("best3 needs its selector bits");
  return make_algorithm(algorithm);
}

}  // namespace

Codebook Codebook::from_text(std::string_view text) {
  Codebook book;
  std::array<bool, 256> seen{};
  for (char c : text) {
    const auto s = static_cast<Symbol>(c);
    if (!seen[s]) {
      seen[s] = true;
      book.alphabet.push_back(s);
    }
  }
  return book;
}

void append_unary(std::vector<bool>& bits, std::size_t position) {
  bits.insert(bits.end(), position - 1, true);
  bits.push_back(false);
}

RequestSequence text_to_sequence(std::string_view text,
                                 const Codebook& codebook) {
  std::array<int, 256> id;
  id.fill(-1);
  for (std::size_t i = 0; i < codebook.alphabet.size(); ++i) {
    if (id[codebook.alphabet[i]] != -1)
      throw MalformedSequence("alphabet lists a symbol twice");
    id[codebook.alphabet[i]] = static_cast<int>(i);
  }
  std::vector<Item> requests;
  requests.reserve(text.size());
  for (char c : text) {
    const int item = id[static_cast<Symbol>(c)];
    if (item < 0)
      throw MalformedSequence("symbol " +
                              std::to_string(static_cast<Symbol>(c)) +
                              " is not in the alphabet");
    requests.push_back(static_cast<Item>(item));
  }
  return RequestSequence(ListState::identity(codebook.alphabet.size()),
                         std::move(requests));
}

Encoded compress(std::string_view text, const std::string& algorithm) {
  return compress(text, algorithm, Codebook::from_text(text));
}

Encoded compress(std::string_view text, const std::string& algorithm,
                 const Codebook& codebook) {
  const RequestSequence seq = text_to_sequence(text, codebook);
  Encoded out{algorithm, codebook, {}};
  std::string coder_id = algorithm;
  if (algorithm == "best3") {
    const Selector selector = best3_oracle(seq, CostModel::Full);
    AdviceTape tape;
    write_selector(tape, selector);
    out.bits = tape.bits();
    coder_id = algorithm_id(selector);
  }
  auto coder = make_coder_algorithm(coder_id);
  coder->reset(seq.initial);
  for (Item r : seq.requests) {
    append_unary(out.bits, coder->list().position(r));
    coder->serve(r, CostModel::Full);
  }
  return out;
}

std::string decompress(const std::vector<bool>& bits,
                       const std::string& algorithm, const Codebook& codebook) {
  std::size_t cursor = 0;
  std::string coder_id = algorithm;
  if (algorithm == "best3") {
    AdviceTape tape(std::vector<bool>(bits.begin(),
                                      bits.begin() + std::min<std::size_t>(
                                                         2, bits.size())));
    try {
      coder_id = algorithm_id(read_selector(tape));
    } catch (const InvalidAdvice& e) {
      throw MalformedSequence(std::string("bad selector: ") + e.what());
    }
    cursor = 2;
  }
  auto coder = make_coder_algorithm(coder_id);
  coder->reset(ListState::identity(codebook.alphabet.size()));
  const std::size_t size = codebook.alphabet.size();
  std::string text;
  while (cursor < bits.size()) {
    std::size_t position = 1;
    while (cursor < bits.size() && bits[cursor]) {
      ++position;
      ++cursor;
    }
    if (cursor == bits.size())
      throw MalformedSequence("truncated unary code at end of stream");
    ++cursor;  // terminating zero
    if (position > size)
      throw MalformedSequence("unary code " + std::to_string(position) +
                              " exceeds alphabet size " + std::to_string(size));
    const Item item = coder->list().at(position);
    text += static_cast<char>(codebook.alphabet[item]);
    coder->serve(item, CostModel::Full);
  }
  return text;
}

std::string decompress(const Encoded& encoded) {
  return decompress(encoded.bits, encoded.algorithm, encoded.codebook);
}

std::uint8_t container_algorithm_code(const std::string& algorithm) {
  for (std::size_t i = 0; i < kContainerIds.size(); ++i)
    if (algorithm == kContainerIds[i]) return static_cast<std::uint8_t>(i);
  throw UnsupportedAlgorithm("algorithm '" + algorithm +
                             "' has no container code");
}

std::string container_algorithm_id(std::uint8_t code) {
  if (code >= kContainerIds.size())
    throw MalformedSequence("unknown container algorithm code " +
                            std::to_string(code));
  return kContainerIds[code];
}

std::string write_container(const Encoded& encoded) {
  std::string out(kMagic);
  out += static_cast<char>(container_algorithm_code(encoded.algorithm));
  out += static_cast<char>(encoded.codebook.coder);
  for (std::size_t v = encoded.codebook.alphabet.size();;) {
    const auto low = static_cast<std::uint8_t>(v & 0x7f);
    v >>= 7;
    out += static_cast<char>(v ? low | 0x80 : low);
    if (!v) break;
  }
  for (Symbol s : encoded.codebook.alphabet) out += static_cast<char>(s);
  std::size_t first_code_bit = 0;
  if (encoded.algorithm == "best3") {
    if (encoded.bits.size() < 2)
      throw InvalidAdvice("best3 stream lacks its selector");
    out += static_cast<char>(encoded.bits[0] << 1 | encoded.bits[1]);
    first_code_bit = 2;
  }
  std::uint8_t byte = 0;
  int filled = 0;
  for (std::size_t i = first_code_bit; i < encoded.bits.size(); ++i) {
    byte = static_cast<std::uint8_t>(byte << 1 | encoded.bits[i]);
    if (++filled == 8) {
      out += static_cast<char>(byte);
      byte = 0;
      filled = 0;
    }
  }
  if (filled) {
    // Pad with ones: a run of ones with no terminating zero is not a code.
    byte = static_cast<std::uint8_t>(byte << (8 - filled) |
                                     ((1u << (8 - filled)) - 1));
    out += static_cast<char>(byte);
  }
  return out;
}

Encoded read_container(std::string_view bytes) {
  auto fail = [](const std::string& why) -> MalformedSequence {
    return MalformedSequence("bad LUP1 container: " + why);
  };
  if (bytes.substr(0, kMagic.size()) != kMagic) throw fail("missing magic");
  std::size_t at = kMagic.size();
  if (bytes.size() < at + 2) throw fail("truncated header");
  Encoded out;
  out.algorithm = container_algorithm_id(static_cast<std::uint8_t>(bytes[at++]));
  const auto coder = static_cast<std::uint8_t>(bytes[at++]);
  if (coder != static_cast<std::uint8_t>(Coder::Unary))
    throw fail("unknown coder " + std::to_string(coder));
  std::size_t size = 0;
  for (int shift = 0;; shift += 7) {
    if (at >= bytes.size() || shift > 28) throw fail("bad alphabet size");
    const auto b = static_cast<std::uint8_t>(bytes[at++]);
    size |= std::size_t{b & 0x7fu} << shift;
    if (!(b & 0x80)) break;
  }
  if (size > 256 || bytes.size() < at + size) throw fail("truncated alphabet");
  out.codebook.alphabet.assign(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                               bytes.begin() +
                                   static_cast<std::ptrdiff_t>(at + size));
  at += size;
  if (out.algorithm == "best3") {
    if (at >= bytes.size()) throw fail("missing advice byte");
    const auto advice = static_cast<std::uint8_t>(bytes[at++]);
    if (advice > 0b10) throw fail("invalid selector " + std::to_string(advice));
    out.bits.push_back(advice >> 1 & 1);
    out.bits.push_back(advice & 1);
  }
  const std::size_t header_bits = out.bits.size();
  for (; at < bytes.size(); ++at) {
    const auto b = static_cast<std::uint8_t>(bytes[at]);
    for (int i = 7; i >= 0; --i) out.bits.push_back(b >> i & 1);
  }
  // Every code ends in a zero, so anything after the last zero is padding.
  std::size_t end = out.bits.size();
  while (end > header_bits && out.bits[end - 1]) --end;
  if (out.bits.size() - end >= 8) throw fail("truncated code stream");
  out.bits.resize(end);
  return out;
}

}  // namespace lup
