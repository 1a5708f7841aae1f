#include "authorfield/pattern.hpp"

#include <utility>

#include "authorfield/encoder.hpp"

namespace authorfield {

namespace {

constexpr std::uint16_t kAllSymbols = (1u << kAlphabet.size()) - 1;
constexpr int kUnbounded = -1;
constexpr int kMaxRepeat = 256;

std::uint16_t symbol_bit(char c) {
  const auto index = kAlphabet.find(c);
  return index == std::string_view::npos
             ? 0
             : static_cast<std::uint16_t>(1u << index);
}

struct Node {
  enum class Kind { kEmpty, kSymbol, kConcat, kAlternation, kRepeat };
  Kind kind = Kind::kEmpty;
  std::uint16_t mask = 0;
  int min = 0;
  int max = 0;
  std::vector<Node> children;

  static Node of(Kind kind, std::uint16_t mask = 0) {
    Node node;
    node.kind = kind;
    node.mask = mask;
    return node;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view pattern) : pattern_(pattern) {}

  Node parse() {
    Node node = parse_alternation();
    if (pos_ != pattern_.size()) fail("unexpected ')'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw PatternError(pattern_, pos_, message);
  }

  bool at_end() const { return pos_ >= pattern_.size(); }
  char peek() const { return pattern_[pos_]; }

  Node parse_alternation() {
    Node first = parse_sequence();
    if (at_end() || peek() != '|') return first;
    Node alt = Node::of(Node::Kind::kAlternation);
    alt.children.push_back(std::move(first));
    while (!at_end() && peek() == '|') {
      ++pos_;
      alt.children.push_back(parse_sequence());
    }
    return alt;
  }

  Node parse_sequence() {
    Node seq = Node::of(Node::Kind::kConcat);
    while (!at_end() && peek() != '|' && peek() != ')') {
      seq.children.push_back(parse_quantified());
    }
    if (seq.children.empty()) return Node::of(Node::Kind::kEmpty);
    if (seq.children.size() == 1) return std::move(seq.children.front());
    return seq;
  }

  Node parse_quantified() {
    Node atom = parse_atom();
    if (at_end()) return atom;
    int min = 0;
    int max = 0;
    switch (peek()) {
      case '?':
        ++pos_;
        min = 0, max = 1;
        break;
      case '*':
        ++pos_;
        min = 0, max = kUnbounded;
        break;
      case '+':
        ++pos_;
        min = 1, max = kUnbounded;
        break;
      case '{':
        ++pos_;
        parse_bounds(min, max);
        break;
      default:
        return atom;
    }
    if (!at_end() && (peek() == '?' || peek() == '*' || peek() == '+' ||
                      peek() == '{')) {
      fail("stacked quantifiers are not supported");
    }
    Node repeat = Node::of(Node::Kind::kRepeat);
    repeat.min = min;
    repeat.max = max;
    repeat.children.push_back(std::move(atom));
    return repeat;
  }

  int parse_number() {
    const std::size_t begin = pos_;
    int value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > kMaxRepeat) fail("repetition bound too large");
      ++pos_;
    }
    if (pos_ == begin) fail("expected a number");
    return value;
  }

  void parse_bounds(int& min, int& max) {
    min = parse_number();
    max = min;
    if (!at_end() && peek() == ',') {
      ++pos_;
      max = (!at_end() && peek() == '}') ? kUnbounded : parse_number();
    }
    if (at_end() || peek() != '}') fail("expected '}'");
    ++pos_;
    if (max != kUnbounded && max < min) fail("bad repetition bounds");
  }

  Node parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      if (pattern_.substr(pos_).starts_with("?:")) pos_ += 2;
      Node inner = parse_alternation();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') return parse_class();
    if (c == '.') {
      ++pos_;
      return Node::of(Node::Kind::kSymbol, kAllSymbols);
    }
    const std::uint16_t bit = symbol_bit(c);
    if (bit == 0) fail(std::string("unexpected character '") + c + "'");
    ++pos_;
    return Node::of(Node::Kind::kSymbol, bit);
  }

  Node parse_class() {
    ++pos_;  // '['
    bool negate = false;
    if (!at_end() && peek() == '^') {
      negate = true;
      ++pos_;
    }
    std::uint16_t mask = 0;
    while (!at_end() && peek() != ']') {
      const std::uint16_t bit = symbol_bit(peek());
      if (bit == 0) fail(std::string("unexpected character '") + peek() + "'");
      mask |= bit;
      ++pos_;
    }
    if (at_end()) fail("expected ']'");
    ++pos_;
    if (negate) mask = static_cast<std::uint16_t>(~mask & kAllSymbols);
    if (mask == 0) fail("empty class");
    return Node::of(Node::Kind::kSymbol, mask);
  }

  std::string_view pattern_;
  std::size_t pos_ = 0;
};

}  // namespace

PatternError::PatternError(std::string_view pattern, std::size_t position,
                           const std::string& message)
    : std::invalid_argument("pattern '" + std::string(pattern) +
                            "' at offset " + std::to_string(position) + ": " +
                            message) {}

// Thompson construction. A fragment has an entry state and a list of dangling
// exits (state index, second-branch flag) to be patched.
struct Pattern::Builder {
  struct Fragment {
    int start = -1;
    std::vector<std::pair<int, bool>> exits;
  };

  std::vector<State> states;

  int add(State state) {
    states.push_back(state);
    return static_cast<int>(states.size()) - 1;
  }

  void patch(const Fragment& f, int target) {
    for (const auto& [index, second] : f.exits) {
      (second ? states[index].out1 : states[index].out) = target;
    }
  }

  Fragment build(const Node& node) {
    switch (node.kind) {
      case Node::Kind::kEmpty: {
        const int s = add(State{State::Type::kEpsilon});
        return {s, {{s, false}}};
      }
      case Node::Kind::kSymbol: {
        const int s = add(State{State::Type::kSymbol, node.mask});
        return {s, {{s, false}}};
      }
      case Node::Kind::kConcat: {
        Fragment result = build(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          Fragment next = build(node.children[i]);
          patch(result, next.start);
          result.exits = std::move(next.exits);
        }
        return result;
      }
      case Node::Kind::kAlternation: {
        Fragment result = build(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          Fragment next = build(node.children[i]);
          const int split = add(State{State::Type::kSplit, 0, result.start,
                                      next.start});
          result.start = split;
          result.exits.insert(result.exits.end(), next.exits.begin(),
                              next.exits.end());
        }
        return result;
      }
      case Node::Kind::kRepeat:
        return build_repeat(node);
    }
    return {};
  }

  Fragment optional(const Node& child) {
    Fragment body = build(child);
    const int split = add(State{State::Type::kSplit, 0, body.start, -1});
    body.exits.emplace_back(split, true);
    body.start = split;
    return body;
  }

  Fragment star(const Node& child) {
    Fragment body = build(child);
    const int split = add(State{State::Type::kSplit, 0, body.start, -1});
    patch(body, split);
    return {split, {{split, true}}};
  }

  Fragment build_repeat(const Node& node) {
    const Node& child = node.children.front();
    std::vector<Fragment> parts;
    for (int i = 0; i < node.min; ++i) parts.push_back(build(child));
    if (node.max == kUnbounded) {
      parts.push_back(star(child));
    } else {
      for (int i = node.min; i < node.max; ++i) parts.push_back(optional(child));
    }
    if (parts.empty()) {
      const int s = add(State{State::Type::kEpsilon});
      return {s, {{s, false}}};
    }
    Fragment result = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      patch(result, parts[i].start);
      result.exits = std::move(parts[i].exits);
    }
    return result;
  }
};

Pattern Pattern::compile(std::string_view source) {
  const Node root = Parser(source).parse();
  Builder builder;
  Builder::Fragment fragment = builder.build(root);
  const int accept = builder.add(State{State::Type::kAccept});
  builder.patch(fragment, accept);

  Pattern pattern;
  pattern.source_ = std::string(source);
  pattern.states_ = std::move(builder.states);
  pattern.start_ = fragment.start;
  return pattern;
}

template <typename Fn>
void Pattern::run(std::string_view codes, std::size_t start,
                  Fn&& on_accept) const {
  std::vector<int> current;
  std::vector<int> next;
  std::vector<std::size_t> mark(states_.size(), 0);
  std::size_t generation = 0;
  bool accepting = false;

  auto add_state = [&](auto&& self, std::vector<int>& set, int s) -> void {
    if (s < 0 || mark[s] == generation) return;
    mark[s] = generation;
    const State& state = states_[s];
    switch (state.type) {
      case State::Type::kSplit:
        self(self, set, state.out);
        self(self, set, state.out1);
        break;
      case State::Type::kEpsilon:
        self(self, set, state.out);
        break;
      case State::Type::kAccept:
        accepting = true;
        break;
      case State::Type::kSymbol:
        set.push_back(s);
        break;
    }
  };

  ++generation;
  add_state(add_state, current, start_);
  for (std::size_t pos = start;; ++pos) {
    if (accepting) on_accept(pos);
    if (current.empty() || pos >= codes.size()) break;
    const std::uint16_t bit = symbol_bit(codes[pos]);
    next.clear();
    accepting = false;
    ++generation;
    for (const int s : current) {
      if (states_[s].mask & bit) add_state(add_state, next, states_[s].out);
    }
    std::swap(current, next);
  }
}

std::vector<std::size_t> Pattern::match_ends(std::string_view codes,
                                             std::size_t start) const {
  std::vector<std::size_t> ends;
  if (start > codes.size()) return ends;
  run(codes, start, [&](std::size_t end) { ends.push_back(end); });
  return ends;
}

std::optional<std::size_t> Pattern::longest_match(std::string_view codes,
                                                  std::size_t start) const {
  std::optional<std::size_t> longest;
  if (start > codes.size()) return longest;
  run(codes, start, [&](std::size_t end) { longest = end; });
  return longest;
}

bool Pattern::full_match(std::string_view codes) const {
  const auto end = longest_match(codes, 0);
  return end && *end == codes.size();
}

bool Pattern::nullable() const {
  const auto ends = match_ends({}, 0);
  return !ends.empty();
}

std::string expand_symbol(std::string_view pattern, char symbol,
                          std::string_view expansion) {
  std::string out;
  bool in_class = false;
  for (const char c : pattern) {
    if (c == '[') in_class = true;
    if (c == ']') in_class = false;
    if (c == symbol && !in_class) {
      out += "(?:";
      out += expansion;
      out += ')';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace authorfield
