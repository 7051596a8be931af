#include "ury/encoding.hpp"

#include <cctype>
#include <limits>

#include "ury/errors.hpp"

namespace ury {

namespace {

void encode_into(const Store& store, NodeId id, Encoding& out) {
  const TupleNode& n = store.node(id);
  out.emplace_back(n.age);
  for (const Entry& e : n.entries) {
    out.emplace_back(e.alpha);
    encode_into(store, e.pred, out);
    out.emplace_back(n.age);
  }
}

// Parses one encoding starting at `pos`; returns the node and leaves `pos`
// one past its final item. `max_age` bounds the admissible opening age.
NodeId decode_at(Store& store, const Encoding& items, std::size_t& pos,
                 std::uint64_t max_age) {
  if (pos >= items.size())
    throw MalformedEncoding(pos, "expected an age, found end of sequence");
  const auto* age_ptr = std::get_if<std::uint32_t>(&items[pos]);
  if (age_ptr == nullptr)
    throw MalformedEncoding(pos, "expected an age, found a distance");
  std::uint32_t age = *age_ptr;
  if (age >= max_age)
    throw MalformedEncoding(pos, "inner age " + std::to_string(age) +
                                     " is not below the enclosing age");
  ++pos;

  std::vector<Entry> entries;
  while (pos < items.size() && std::holds_alternative<Dyadic>(items[pos])) {
    Dyadic alpha = std::get<Dyadic>(items[pos]);
    ++pos;
    NodeId pred = decode_at(store, items, pos, age);
    if (pos >= items.size())
      throw MalformedEncoding(pos, "expected closing age " + std::to_string(age) +
                                       ", found end of sequence");
    const auto* close = std::get_if<std::uint32_t>(&items[pos]);
    if (close == nullptr || *close != age)
      throw MalformedEncoding(pos, "expected closing age " + std::to_string(age));
    ++pos;
    entries.push_back({pred, std::move(alpha)});
  }
  return store.intern(age, std::move(entries));
}

}  // namespace

Encoding encode(const Store& store, NodeId id) {
  Encoding out;
  encode_into(store, id, out);
  return out;
}

NodeId decode(Store& store, const Encoding& items) {
  std::size_t pos = 0;
  NodeId id = decode_at(store, items, pos,
                        std::uint64_t{std::numeric_limits<std::uint32_t>::max()} + 1);
  if (pos != items.size())
    throw MalformedEncoding(pos, "trailing items after a complete encoding");
  return id;
}

std::string encoding_to_text(const Encoding& items) {
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    if (const auto* age = std::get_if<std::uint32_t>(&items[i]))
      out += std::to_string(*age);
    else
      out += std::get<Dyadic>(items[i]).str();
  }
  out += ")";
  return out;
}

Encoding parse_encoding_text(std::string_view text) {
  auto fail = [&](std::size_t col, const std::string& msg) -> ParseError {
    return ParseError(0, col, msg);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw fail(i, "expected '('");
  ++i;
  Encoding items;
  skip_ws();
  if (i < text.size() && text[i] == ')') {
    throw fail(i, "an encoding has at least one item");
  }
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ')') ++i;
    if (i >= text.size()) throw fail(i, "expected ')'");
    std::size_t end = i;
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view tok = text.substr(start, end - start);
    if (tok.empty()) throw fail(start, "empty item");
    if (tok.find('/') != std::string_view::npos) {
      try {
        items.emplace_back(Dyadic::parse(tok));
      } catch (const ParseError& e) {
        throw fail(start + e.column, e.what());
      }
    } else {
      for (char c : tok)
        if (c < '0' || c > '9') throw fail(start, "expected an age or a dyadic literal");
      if (tok.size() > 9) throw fail(start, "age out of range");
      unsigned long v = std::stoul(std::string(tok));
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw fail(start, "age out of range");
      items.emplace_back(static_cast<std::uint32_t>(v));
    }
    if (text[i] == ')') {
      ++i;
      break;
    }
    ++i;  // consume ','
  }
  skip_ws();
  if (i != text.size()) throw fail(i, "trailing characters after ')'");
  return items;
}

}  // namespace ury
