#include "ncposet/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "ncposet/errors.hpp"

namespace ncposet {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_uint(std::string_view digits, std::size_t token,
                         std::string_view what) {
  std::uint64_t value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("token " + std::to_string(token) + ": bad " +
                         std::string(what) + " '" + std::string(digits) + "'",
                     token);
  }
  return value;
}

Letter parse_letter(std::string_view tok, std::size_t token) {
  if (tok.size() < 2 || tok.front() != 'x') {
    throw ParseError("token " + std::to_string(token) +
                         ": expected x<index>, got '" + std::string(tok) + "'",
                     token);
  }
  const auto index = parse_uint(tok.substr(1), token, "letter index");
  if (index == 0) {
    throw ParseError("token " + std::to_string(token) + ": letter index must be >= 1", token);
  }
  if (index > UINT32_MAX) {
    throw ParseError("token " + std::to_string(token) + ": letter index too large", token);
  }
  return static_cast<Letter>(index);
}

void check_nonempty(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (std::ranges::find(letters_, Letter{0}) != letters_.end()) {
    throw DomainError("letter index 0 is not allowed");
  }
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : std::ranges::max(letters_);
}

void Word::check_bound(Bound n) const {
  if (n && max_letter() > *n) {
    throw DomainError("word " + format_word(*this) + " uses a letter above x" +
                      std::to_string(*n));
  }
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  Word w;
  w.letters_ = std::move(out);
  return w;
}

CommMonomial::CommMonomial(std::map<Letter, std::uint32_t> exponents) {
  for (auto [letter, e] : exponents) {
    if (letter == 0) throw DomainError("letter index 0 is not allowed");
    if (e != 0) exponents_.emplace(letter, e);
  }
}

CommMonomial CommMonomial::variable(Letter i) {
  return CommMonomial(std::map<Letter, std::uint32_t>{{i, 1}});
}

std::uint32_t CommMonomial::exponent(Letter i) const {
  const auto it = exponents_.find(i);
  return it == exponents_.end() ? 0 : it->second;
}

Letter CommMonomial::max_letter() const noexcept {
  return exponents_.empty() ? 0 : exponents_.rbegin()->first;
}

std::size_t CommMonomial::total_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [letter, e] : exponents_) d += e;
  return d;
}

void CommMonomial::check_bound(Bound n) const {
  if (n && max_letter() > *n) {
    throw DomainError("monomial " + format_monomial(*this) +
                      " uses a letter above x" + std::to_string(*n));
  }
}

CommMonomial CommMonomial::operator*(const CommMonomial& other) const {
  auto out = exponents_;
  for (auto [letter, e] : other.exponents_) out[letter] += e;
  return CommMonomial(std::move(out));
}

Partition::Partition(std::initializer_list<std::uint64_t> parts)
    : Partition(std::vector<std::uint64_t>(parts)) {}

Partition::Partition(std::vector<std::uint64_t> parts)
    : parts_(std::move(parts)) {
  if (!std::ranges::is_sorted(parts_, std::greater<>{})) {
    throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::uint64_t Partition::part(std::size_t i) const noexcept {
  return i < parts_.size() ? parts_[i] : 0;
}

std::uint64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (parts_.size() > other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

Word parse_word(std::string_view text) {
  check_nonempty(text);
  if (text == "1") return {};
  const auto tokens = split(text, '*');
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    letters.push_back(parse_letter(tokens[i], i + 1));
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(m[i]);
  }
  return out;
}

CommMonomial parse_monomial(std::string_view text) {
  check_nonempty(text);
  if (text == "1") return {};
  const auto tokens = split(text, '*');
  std::map<Letter, std::uint32_t> exps;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    const auto caret = tok.find('^');
    const auto letter = parse_letter(tok.substr(0, caret), i + 1);
    std::uint64_t e = 1;
    if (caret != std::string_view::npos) {
      e = parse_uint(tok.substr(caret + 1), i + 1, "exponent");
    }
    if (e > UINT32_MAX || exps[letter] + e > UINT32_MAX) {
      throw ParseError("token " + std::to_string(i + 1) + ": exponent too large",
                       i + 1);
    }
    exps[letter] += static_cast<std::uint32_t>(e);
  }
  return CommMonomial(std::move(exps));
}

std::string format_monomial(const CommMonomial& t) {
  if (t.is_one()) return "1";
  std::string out;
  for (const auto& [letter, e] : t.exponents()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(letter);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("partition must look like [5,3]", 0);
  }
  const auto body = text.substr(1, text.size() - 2);
  if (body.empty()) return {};
  const auto tokens = split(body, ',');
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    parts.push_back(parse_uint(tokens[i], i + 1, "part"));
  }
  if (!std::ranges::is_sorted(parts, std::greater<>{})) {
    throw ParseError("partition parts must be weakly decreasing", 0);
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.part(i));
  }
  return out + "]";
}

CommMonomial abelianize(const Word& m) {
  std::map<Letter, std::uint32_t> exps;
  for (auto letter : m.letters()) ++exps[letter];
  return CommMonomial(std::move(exps));
}

Word sort_word(const CommMonomial& t) {
  std::vector<Letter> letters;
  letters.reserve(t.total_degree());
  for (const auto& [letter, e] : t.exponents()) letters.insert(letters.end(), e, letter);
  return Word(std::move(letters));
}

Word raise(const Word& m, std::size_t position, Bound n) {
  if (position == 0 || position > m.size()) {
    throw DomainError("raise: position " + std::to_string(position) +
                      " out of range for a word of degree " +
                      std::to_string(m.size()));
  }
  std::vector<Letter> letters(m.letters().begin(), m.letters().end());
  auto& letter = letters[position - 1];
  if (n && letter >= *n) {
    throw DomainError("raise: letter x" + std::to_string(letter) +
                      " cannot be raised within x1..x" + std::to_string(*n));
  }
  ++letter;
  return Word(std::move(letters));
}

std::size_t degree(const Word& m) noexcept { return m.size(); }

MultiRank multirank(const Word& m) {
  // Component j (1-based) is the number of letters >= j.
  std::vector<std::uint64_t> parts(m.max_letter(), 0);
  for (auto letter : m.letters()) {
    for (Letter j = 0; j < letter; ++j) ++parts[j];
  }
  return Partition(std::move(parts));
}

std::uint64_t rank(const Word& m) noexcept {
  return std::accumulate(m.letters().begin(), m.letters().end(),
                         std::uint64_t{0});
}

std::uint64_t rank(const CommMonomial& t) noexcept {
  std::uint64_t r = 0;
  for (const auto& [letter, e] : t.exponents()) r += std::uint64_t{letter} * e;
  return r;
}

bool is_factor(const Word& u, const Word& m) noexcept {
  const auto hay = m.letters();
  const auto needle = u.letters();
  return std::ranges::search(hay, needle).begin() != hay.end() || needle.empty();
}

bool canonical_less(const Word& a, const Word& b) {
  const auto ra = rank(a);
  const auto rb = rank(b);
  if (ra != rb) return ra < rb;
  return format_word(a) < format_word(b);
}

bool canonical_less(const CommMonomial& a, const CommMonomial& b) {
  const auto ra = rank(a);
  const auto rb = rank(b);
  if (ra != rb) return ra < rb;
  return format_monomial(a) < format_monomial(b);
}

namespace {

template <class T, class Format>
void sort_by_rank_and_text(std::vector<T>& items, Format format) {
  std::vector<std::pair<std::pair<std::uint64_t, std::string>, T>> keyed;
  keyed.reserve(items.size());
  for (auto& item : items) {
    auto key = std::make_pair(rank(item), format(item));
    keyed.emplace_back(std::move(key), std::move(item));
  }
  std::ranges::sort(keyed, {}, [](const auto& k) -> const auto& { return k.first; });
  items.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i && keyed[i].first == keyed[i - 1].first) continue;
    items.push_back(std::move(keyed[i].second));
  }
}

}  // namespace

void sort_canonical(std::vector<Word>& words) {
  sort_by_rank_and_text(words, format_word);
}

void sort_canonical(std::vector<CommMonomial>& monomials) {
  sort_by_rank_and_text(monomials, format_monomial);
}

}  // namespace ncposet
