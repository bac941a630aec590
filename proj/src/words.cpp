#include "qtm/words.hpp"

#include <cctype>

#include "qtm/errors.hpp"

namespace qtm {

Word invert_word(const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Move m = w[w.size() - 1 - i];
    if (m < 1 || m > 12)
      throw InputError("move index out of range 1..12: " + std::to_string(m));
    out[i] = move_inverse(m);
  }
  return out;
}

Word parse_moves(std::string_view text) {
  static constexpr std::string_view kFaces = "ULFBRD";
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t tok = i;
    auto face = kFaces.find(text[i]);
    if (face == std::string_view::npos)
      throw InputError("unknown move token at offset " + std::to_string(tok));
    Move base = static_cast<Move>(face + 1);
    ++i;
    if (i < text.size() && text[i] == '\'') {
      out.push_back(static_cast<Move>(base + 6));
      ++i;
    } else if (i < text.size() && text[i] == '2') {
      // half turn = two quarter turns
      out.push_back(base);
      out.push_back(base);
      ++i;
    } else {
      out.push_back(base);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw InputError("unknown move token at offset " + std::to_string(tok));
  }
  return out;
}

std::string format_moves(const Word& w) {
  static constexpr std::string_view kFaces = "ULFBRD";
  std::string out;
  for (Move m : w) {
    if (!out.empty()) out += ' ';
    out += kFaces[(m - 1) % 6];
    if (m > 6) out += '\'';
  }
  return out;
}

PackedWord PackedWord::pack(const Word& w) {
  if (w.size() > 22)
    throw InputError("word longer than 22 moves cannot be packed");
  PackedWord p;
  p.len = static_cast<std::uint8_t>(w.size());
  for (int i = 0; i < p.len; ++i) p.set_move(i, w[i]);
  return p;
}

PackedWord PackedWord::concat(const PackedWord& a, const PackedWord& b) {
  if (a.len + b.len > 22)
    throw InputError("concatenated word longer than 22 moves");
  PackedWord p = a;
  p.len = static_cast<std::uint8_t>(a.len + b.len);
  for (int i = 0; i < b.len; ++i) p.set_move(a.len + i, b.move_at(i));
  return p;
}

Word PackedWord::unpack() const {
  Word w(len);
  for (int i = 0; i < len; ++i) w[i] = move_at(i);
  return w;
}

}  // namespace qtm
