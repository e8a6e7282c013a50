// List-update text compression: each symbol is written as the unary code of
// its position in the algorithm's list just before the access, so the
// payload is exactly the algorithm's full-model access cost in bits.

#ifndef LUP_COMPRESSOR_HPP
#define LUP_COMPRESSOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lup/advice.hpp"
#include "lup/core.hpp"

namespace lup {

using Symbol = unsigned char;

enum class Coder : std::uint8_t { Unary = 0 };

struct Codebook {
  std::vector<Symbol> alphabet;  // initial list order
  Coder coder = Coder::Unary;

  // First-appearance order of the symbols in `text`.
  static Codebook from_text(std::string_view text);
};

struct Encoded {
  std::string algorithm;
  Codebook codebook;
  // For best3 the stream starts with the two selector bits.
  std::vector<bool> bits;
};

// Position i is written as i-1 ones followed by a zero.
void append_unary(std::vector<bool>& bits, std::size_t position);

RequestSequence text_to_sequence(std::string_view text,
                                 const Codebook& codebook);

// `algorithm` is any deterministic id make_algorithm accepts, or best3.
// Throws MalformedSequence for symbols outside the codebook.
Encoded compress(std::string_view text, const std::string& algorithm,
                 const Codebook& codebook);
Encoded compress(std::string_view text, const std::string& algorithm);

// Throws MalformedSequence on truncated or out-of-range codes.
std::string decompress(const std::vector<bool>& bits,
                       const std::string& algorithm, const Codebook& codebook);
std::string decompress(const Encoded& encoded);

// Container: "LUP1", algorithm byte, coder byte, varint alphabet size,
// alphabet bytes, advice byte (best3 only), code bits packed MSB-first with
// the last byte padded by ones. Only mtf, ts, mtfo, mtfe and best3 have an
// algorithm byte; others throw UnsupportedAlgorithm.
std::string write_container(const Encoded& encoded);
Encoded read_container(std::string_view bytes);

std::uint8_t container_algorithm_code(const std::string& algorithm);
std::string container_algorithm_id(std::uint8_t code);

}  // namespace lup

#endif  // LUP_COMPRESSOR_HPP
