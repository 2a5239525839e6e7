#include "moran/system.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "moran/errors.hpp"

namespace moran {

Level::Level(std::int64_t p_, DigitSet digits_)
    : p(p_), digits(std::move(digits_)), info(classify_level(p, digits)) {}

MoranSystem::MoranSystem(std::vector<Level> preamble, std::vector<Level> cycle, std::string name)
    : preamble_(std::move(preamble)), cycle_(std::move(cycle)), name_(std::move(name)) {
  if (preamble_.empty() && cycle_.empty()) throw StructureError("system has no levels");
  for (const auto* list : {&preamble_, &cycle_}) {
    for (const auto& lv : *list) {
      if (lv.p < 2) throw StructureError("p must be > 1, got " + std::to_string(lv.p));
    }
  }
}

std::optional<std::size_t> MoranSystem::max_level() const {
  if (cycle_.empty()) return preamble_.size();
  return std::nullopt;
}

bool MoranSystem::has_level(std::size_t n) const {
  if (n == 0) return false;
  return !cycle_.empty() || n <= preamble_.size();
}

const Level& MoranSystem::level(std::size_t n) const {
  if (n == 0) throw std::out_of_range("levels are 1-based");
  if (n <= preamble_.size()) return preamble_[n - 1];
  if (cycle_.empty()) {
    throw std::out_of_range("level " + std::to_string(n) + " beyond finite system of " +
                            std::to_string(preamble_.size()) + " levels");
  }
  return cycle_[(n - 1 - preamble_.size()) % cycle_.size()];
}

Integer MoranSystem::P(std::size_t n) const {
  Integer out = 1;
  for (std::size_t i = 1; i <= n; ++i) out *= level(i).p;
  return out;
}

std::vector<Integer> MoranSystem::partial_products(std::size_t n) const {
  std::vector<Integer> out;
  out.reserve(n + 1);
  out.emplace_back(1);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(out.back() * level(i).p);
  return out;
}

Integer MoranSystem::atom_count(std::size_t n) const {
  Integer out = 1;
  for (std::size_t i = 1; i <= n; ++i) out *= static_cast<unsigned long>(level(i).phi());
  return out;
}

bool MoranSystem::all_admissible() const {
  for (const auto* list : {&preamble_, &cycle_}) {
    for (const auto& lv : *list) {
      if (!lv.info.admissible()) return false;
    }
  }
  return true;
}

bool MoranSystem::cycle_has_large_digit_set() const {
  for (const auto& lv : cycle_) {
    if (lv.phi() >= 3) return true;
  }
  return false;
}

Rational MoranSystem::tail_radius(std::size_t n) const {
  const std::size_t pre = preamble_.size();
  Rational head = 0;
  Integer P_i = P(n);
  std::size_t i = n;
  const std::size_t head_end = cycle_.empty() ? pre : std::max(n, pre);
  while (i < head_end) {
    ++i;
    P_i *= level(i).p;
    head += Rational(level(i).digits.max()) / Rational(P_i);
  }
  if (cycle_.empty()) return head;

  Rational one_cycle = 0;
  Integer cycle_product = 1;
  for (std::size_t j = 1; j <= cycle_.size(); ++j) {
    const Level& lv = level(i + j);
    P_i *= lv.p;
    cycle_product *= lv.p;
    one_cycle += Rational(lv.digits.max()) / Rational(P_i);
  }
  const Rational C(cycle_product);
  return head + one_cycle * C / (C - 1);
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    if (pos_ >= src_.size()) {
      t.line = last_line_;  // report end of input where the last token was
      return t;
    }
    last_line_ = line_;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      const std::size_t start = pos_;
      ++pos_;
      skip_blanks_only();
      const std::size_t digits_start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == digits_start && (c == '-' || c == '+')) {
        throw SyntaxError("sign without digits", t.line);
      }
      t.kind = Tok::Int;
      for (std::size_t k = start; k < pos_; ++k) {
        if (!std::isspace(static_cast<unsigned char>(src_[k])) && src_[k] != '+') t.text += src_[k];
      }
      return t;
    }
    if (c == '(' || c == ')' || c == '{' || c == '}' || c == ',' || c == ':') {
      ++pos_;
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", t.line);
  }

 private:
  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_blanks_only() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int last_line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  MoranSystem parse() {
    std::vector<Level> preamble;
    std::vector<Level> cycle;
    std::vector<Level>* target = nullptr;
    bool seen_preamble = false;
    bool seen_cycle = false;
    while (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::Ident) {
        const Token head = cur_;
        advance();
        expect(":");
        if (head.text == "preamble") {
          if (seen_preamble) throw SyntaxError("duplicate 'preamble:' section", head.line);
          seen_preamble = true;
          target = &preamble;
        } else if (head.text == "cycle") {
          if (seen_cycle) throw SyntaxError("duplicate 'cycle:' section", head.line);
          seen_cycle = true;
          target = &cycle;
        } else {
          throw SyntaxError("unknown section '" + head.text + "'", head.line);
        }
        continue;
      }
      if (target == nullptr) {
        throw SyntaxError("entry before 'preamble:' or 'cycle:'", cur_.line);
      }
      target->push_back(entry());
    }
    if (preamble.empty() && cycle.empty()) throw StructureError("system has no levels");
    return MoranSystem(std::move(preamble), std::move(cycle));
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(std::string_view punct) {
    if (cur_.kind != Tok::Punct || cur_.text != punct) {
      throw SyntaxError("expected '" + std::string(punct) + "', found '" +
                            (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) + "'",
                        cur_.line);
    }
    advance();
  }

  bool at(std::string_view punct) const { return cur_.kind == Tok::Punct && cur_.text == punct; }

  std::int64_t integer() {
    if (cur_.kind != Tok::Int) {
      throw SyntaxError("expected integer, found '" +
                            (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) + "'",
                        cur_.line);
    }
    std::int64_t v = 0;
    const auto& s = cur_.text;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw SyntaxError("integer out of range: " + s, cur_.line);
    }
    advance();
    return v;
  }

  Level entry() {
    const int line = cur_.line;
    expect("(");
    const std::int64_t p = integer();
    expect(",");
    expect("{");
    std::vector<std::int64_t> digits;
    if (!at("}")) {
      digits.push_back(integer());
      while (at(",")) {
        advance();
        digits.push_back(integer());
      }
    }
    expect("}");
    expect(")");

    auto where = [line](const std::string& msg) {
      return StructureError("line " + std::to_string(line) + ": " + msg);
    };
    if (digits.empty()) throw where("empty digit set");
    DigitSet checked;
    try {
      checked = DigitSet(digits);
    } catch (const StructureError& e) {
      throw where(e.what());
    }
    NormalizedLevel norm;
    try {
      norm = normalize_level(p, digits);
    } catch (const StructureError& e) {
      throw where(e.what());
    }
    if (norm.p <= 1) throw where("p must satisfy |p| > 1, got " + std::to_string(p));
    Level lv(norm.p, DigitSet(norm.digits));
    if (norm.theta != 1 || norm.gamma != 0) {
      lv.info.warnings.push_back("normalized from (" + std::to_string(p) + "," +
                                 checked.to_string() + ")");
    }
    return lv;
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

MoranSystem parse_system(std::string_view text) { return Parser(text).parse(); }

MoranSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path.string());
  MoranSystem s = parse_system(buf.str());
  s.set_name(path.stem().string());
  return s;
}

std::string to_config(const MoranSystem& system) {
  std::ostringstream out;
  auto emit = [&out](const char* head, const std::vector<Level>& levels) {
    out << head << ':';
    for (const auto& lv : levels) out << " (" << lv.p << ',' << lv.digits.to_string() << ')';
    out << '\n';
  };
  if (!system.name().empty()) out << "# " << system.name() << '\n';
  emit("preamble", system.preamble());
  emit("cycle", system.cycle());
  return out.str();
}

}  // namespace moran
