#include "groups/dsl.hpp"

#include <array>
#include <cctype>

namespace schurkit::groups {

namespace {

bool is_label_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  GroupPtr parse_all() {
    GroupPtr g = spec();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

  Elem word_all(const FiniteGroup& g) {
    Elem e = word(g);
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' in word");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000000L) {
        pos_ = start;
        fail("integer too large");
      }
    }
    return neg ? -v : v;
  }

  // spec := product ('/' word (',' word)*)?
  GroupPtr spec() {
    std::size_t start = pos_;
    GroupPtr g = product();
    if (peek() != '/') return g;
    ++pos_;
    std::vector<Elem> gens;
    std::string words;
    while (true) {
      std::size_t ws = pos_;
      gens.push_back(word(*g));
      words += (words.empty() ? "" : ",") + s_.substr(ws, pos_ - ws);
      if (peek() != ',') break;
      ++pos_;
    }
    (void)start;
    return quotient(*g, gens, "(" + g->spec() + "/" + words + ")").group;
  }

  bool at_product_sep() const {
    return peek() == 'x' && (std::isupper(static_cast<unsigned char>(peek(1))) || peek(1) == '(');
  }

  GroupPtr product() {
    std::vector<GroupPtr> factors{atom()};
    while (at_product_sep()) {
      ++pos_;
      factors.push_back(atom());
    }
    return factors.size() == 1 ? factors.front() : direct_product(factors);
  }

  GroupPtr atom() {
    if (peek() == '(') {
      ++pos_;
      GroupPtr g = spec();
      expect(')');
      return g;
    }
    return family();
  }

  GroupPtr family() {
    static const std::array<std::pair<const char*, Family>, 18> names{{
        {"Dminus", Family::Dminus}, {"Dplus", Family::Dplus}, {"W1", Family::W1},
        {"W2", Family::W2},         {"V1", Family::V1},       {"V2", Family::V2},
        {"U1", Family::U1},         {"U2", Family::U2},       {"T1", Family::T1},
        {"T2", Family::T2},         {"T3", Family::T3},       {"C", Family::C},
        {"D", Family::D},           {"Q", Family::Q},         {"W", Family::W},
        {"V", Family::V},           {"T", Family::T},         {"S", Family::S},
    }};
    for (const auto& [name, fam] : names) {
      std::string n(name);
      if (s_.compare(pos_, n.size(), n) != 0) continue;
      pos_ += n.size();
      GroupSpec spec;
      spec.family = fam;
      switch (fam) {
        case Family::W:
        case Family::V:
        case Family::U1:
        case Family::U2:
        case Family::T:
          return build_group(spec);
        case Family::S:
          return s_group();
        default:
          break;
      }
      expect('[');
      spec.n = integer();
      expect(']');
      if (fam == Family::D && peek() == '^' && (peek(1) == '+' || peek(1) == '-')) {
        spec.family = peek(1) == '+' ? Family::Dplus : Family::Dminus;
        pos_ += 2;
      }
      return build_group(spec);
    }
    fail("unknown group family");
  }

  // S[n,P,q1,q2,...]; Q given by words over P, "1", or C[m] for cyclic P
  GroupPtr s_group() {
    expect('[');
    GroupSpec spec;
    spec.family = Family::S;
    spec.n = integer();
    expect(',');
    spec.p = product();
    expect(',');
    std::size_t qs = pos_;
    if (peek() == 'C' && peek(1) == '[') {
      pos_ += 2;
      long m = integer();
      expect(']');
      auto a = spec.p->label("a");
      if (!a || spec.p->element_order(*a) != static_cast<int>(spec.p->order()) || m <= 0 ||
          spec.p->order() % m != 0)
        throw Error(ErrorCode::InvalidSpec, "C[m] as Q needs P cyclic and m dividing |P|");
      spec.q_gens.push_back(spec.p->pow(*a, static_cast<long>(spec.p->order()) / m));
    } else {
      while (true) {
        spec.q_gens.push_back(word(*spec.p));
        if (peek() != ',') break;
        ++pos_;
      }
    }
    spec.q_text = s_.substr(qs, pos_ - qs);
    expect(']');
    return build_group(spec);
  }

  // word := factor ('*' factor)*
  Elem word(const FiniteGroup& g) {
    Elem e = factor(g);
    while (peek() == '*') {
      ++pos_;
      e = g.mul(e, factor(g));
    }
    return e;
  }

  Elem factor(const FiniteGroup& g) {
    Elem base;
    if (peek() == '(') {
      ++pos_;
      base = word(g);
      expect(')');
    } else if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      base = g.identity();
    } else if (is_label_start(peek())) {
      std::size_t start = pos_;
      while (is_label_char(peek())) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto e = g.label(name);
      if (!e) {
        pos_ = start;
        fail("unknown generator label '" + name + "' in " + g.spec());
      }
      base = *e;
    } else {
      fail("expected a generator label");
    }
    if (peek() == '^') {
      ++pos_;
      base = g.pow(base, integer());
    }
    return base;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string strip(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

GroupPtr parse_group(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError(0, "empty group spec");
  return Parser(s).parse_all();
}

Elem parse_word(const FiniteGroup& g, const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError(0, "empty word");
  return Parser(s).word_all(g);
}

}  // namespace schurkit::groups
