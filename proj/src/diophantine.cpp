#include "uncomp/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "uncomp/error.hpp"
#include "uncomp/parallel.hpp"

namespace uncomp {

struct Poly::Node {
  Kind kind;
  BigNat value;
  std::size_t index = 0;
  Poly a;
  Poly b;
};

Poly Poly::num(BigNat v) {
  if (v < 0) throw DomainError("Diophantine constants are naturals");
  return Poly(std::make_shared<const Node>(Node{Kind::Num, std::move(v), 0, {}, {}}));
}
Poly Poly::var(std::size_t index) {
  return Poly(std::make_shared<const Node>(Node{Kind::Var, 0, index, {}, {}}));
}
Poly Poly::add(Poly a, Poly b) {
  return Poly(std::make_shared<const Node>(Node{Kind::Add, 0, 0, std::move(a), std::move(b)}));
}
Poly Poly::mul(Poly a, Poly b) {
  return Poly(std::make_shared<const Node>(Node{Kind::Mul, 0, 0, std::move(a), std::move(b)}));
}
Poly Poly::pow(Poly base, Poly exponent) {
  return Poly(
      std::make_shared<const Node>(Node{Kind::Pow, 0, 0, std::move(base), std::move(exponent)}));
}

Poly::Kind Poly::kind() const { return node_->kind; }
const BigNat& Poly::value() const { return node_->value; }
std::size_t Poly::index() const { return node_->index; }
const Poly& Poly::lhs() const { return node_->a; }
const Poly& Poly::rhs() const { return node_->b; }

namespace {

constexpr unsigned kMaxExponent = 1u << 16;
constexpr std::size_t kMaxResultBits = std::size_t{1} << 24;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool uses_variable(const Poly& p) {
  switch (p.kind()) {
    case Poly::Kind::Num:
      return false;
    case Poly::Kind::Var:
      return true;
    default:
      return uses_variable(p.lhs()) || uses_variable(p.rhs());
  }
}

class EquationParser {
 public:
  EquationParser(std::string_view text, const std::map<std::string, std::size_t, std::less<>>& names,
                 bool exponential, std::size_t line)
      : s_(text), names_(names), exponential_(exponential), line_(line) {}

  std::pair<Poly, Poly> parse() {
    Poly lhs = expr();
    skip();
    if (!eat('=')) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "expected '='");
    Poly rhs = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) +
                         ": " + msg,
                     line_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    while (eat('+')) p = Poly::add(p, term());
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      fail("subtraction is not allowed; move the term to the other side");
    }
    return p;
  }

  Poly term() {
    Poly p = power();
    while (eat('*')) p = Poly::mul(p, power());
    return p;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      const std::size_t at = pos_;
      Poly e = power();
      if (!exponential_ && uses_variable(e)) {
        pos_ = at;
        fail("variable exponent requires 'exponential: true'");
      }
      return Poly::pow(base, e);
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of equation");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::num(BigNat(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      auto it = names_.find(name);
      if (it == names_.end()) {
        pos_ = start;
        fail("undeclared name '" + std::string(name) + "'");
      }
      return Poly::var(it->second);
    }
    if (c == '-') fail("negative numbers are not naturals");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::map<std::string, std::size_t, std::less<>>& names_;
  bool exponential_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  return std::all_of(n.begin(), n.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void print(const Poly& p, const std::vector<std::string>& names, int prec, std::string& out) {
  switch (p.kind()) {
    case Poly::Kind::Num:
      out += p.value().str();
      return;
    case Poly::Kind::Var:
      out += names.at(p.index());
      return;
    case Poly::Kind::Add:
      if (prec > 1) out += '(';
      print(p.lhs(), names, 1, out);
      out += " + ";
      print(p.rhs(), names, 2, out);
      if (prec > 1) out += ')';
      return;
    case Poly::Kind::Mul:
      if (prec > 2) out += '(';
      print(p.lhs(), names, 2, out);
      out += " * ";
      print(p.rhs(), names, 3, out);
      if (prec > 2) out += ')';
      return;
    case Poly::Kind::Pow:
      if (prec > 3) out += '(';
      print(p.lhs(), names, 4, out);
      out += '^';
      print(p.rhs(), names, 3, out);
      if (prec > 3) out += ')';
      return;
  }
}

// Prints with every variable replaced by its numeral.
void print_closed(const Poly& p, const std::vector<BigNat>& values, int prec, std::string& out) {
  std::vector<std::string> numerals;
  numerals.reserve(values.size());
  for (const auto& v : values) numerals.push_back(v.str());
  print(p, numerals, prec, out);
}

}  // namespace

DiophantineFamily parse_diophantine(std::string_view text) {
  DiophantineFamily f;
  std::optional<std::pair<std::string, std::size_t>> equation;
  bool seen_params = false, seen_unknowns = false, seen_exp = false;
  std::size_t line_no = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end && text[i] != '\n' && text[i] != ';') continue;
    std::string_view line = text.substr(start, i - start);
    const std::size_t this_line = line_no;
    if (!end && text[i] == '\n') ++line_no;
    start = i + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon != std::string_view::npos && line.find('=') == std::string_view::npos) {
      const std::string key(trim(line.substr(0, colon)));
      const std::string_view rest = trim(line.substr(colon + 1));
      auto once = [&](bool& seen) {
        if (seen) throw ParseError("line " + std::to_string(this_line) + ": duplicate '" + key + "'", this_line);
        seen = true;
      };
      if (key == "params") {
        once(seen_params);
        f.params = split_names(rest);
      } else if (key == "unknowns") {
        once(seen_unknowns);
        f.unknowns = split_names(rest);
      } else if (key == "exponential") {
        once(seen_exp);
        if (rest == "true") {
          f.exponential = true;
        } else if (rest == "false") {
          f.exponential = false;
        } else {
          throw ParseError("line " + std::to_string(this_line) + ": exponential must be true or false",
                           this_line);
        }
      } else {
        throw ParseError("line " + std::to_string(this_line) + ": unknown key '" + key + "'", this_line);
      }
      continue;
    }
    if (equation) {
      throw ParseError("line " + std::to_string(this_line) + ": more than one equation", this_line);
    }
    equation.emplace(std::string(line), this_line);
  }
  if (!equation) throw ParseError("no equation given", line_no);
  if (f.unknowns.empty()) throw ParseError("no unknowns declared", equation->second);

  std::map<std::string, std::size_t, std::less<>> names;
  std::size_t idx = 0;
  for (const auto* list : {&f.params, &f.unknowns}) {
    for (const auto& n : *list) {
      if (!valid_name(n)) throw ParseError("invalid name '" + n + "'", equation->second);
      if (!names.emplace(n, idx++).second) throw ParseError("name '" + n + "' declared twice", equation->second);
    }
  }
  auto [lhs, rhs] = EquationParser(equation->first, names, f.exponential, equation->second).parse();
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  return f;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  std::string out;
  print(p, names, 0, out);
  return out;
}

std::string to_string(const DiophantineFamily& f) {
  std::vector<std::string> names = f.params;
  names.insert(names.end(), f.unknowns.begin(), f.unknowns.end());
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::string out;
  if (!f.params.empty()) out += "params: " + join(f.params) + "\n";
  out += "unknowns: " + join(f.unknowns) + "\n";
  out += std::string("exponential: ") + (f.exponential ? "true" : "false") + "\n";
  out += to_string(f.lhs, names) + " = " + to_string(f.rhs, names) + "\n";
  return out;
}

BigNat evaluate(const Poly& p, const std::vector<BigNat>& values) {
  switch (p.kind()) {
    case Poly::Kind::Num:
      return p.value();
    case Poly::Kind::Var:
      return values.at(p.index());
    case Poly::Kind::Add:
      return evaluate(p.lhs(), values) + evaluate(p.rhs(), values);
    case Poly::Kind::Mul:
      return evaluate(p.lhs(), values) * evaluate(p.rhs(), values);
    case Poly::Kind::Pow: {
      const BigNat base = evaluate(p.lhs(), values);
      const BigNat e = evaluate(p.rhs(), values);
      if (base == 0 || base == 1) return e == 0 ? BigNat(1) : base;
      if (e > kMaxExponent) throw DomainError("exponent " + e.str() + " exceeds the evaluation guard");
      const auto ue = e.convert_to<unsigned>();
      if (static_cast<std::size_t>(msb(base) + 1) * ue > kMaxResultBits) {
        throw DomainError("power exceeds the evaluation guard");
      }
      return boost::multiprecision::pow(base, ue);
    }
  }
  return 0;
}

SearchOutcome search_solutions(const DiophantineFamily& f, const Assignment& params,
                               std::uint64_t bound, unsigned jobs, std::uint64_t max_points) {
  if (params.size() != f.params.size()) {
    throw DomainError("family takes " + std::to_string(f.params.size()) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
  SearchOutcome out;
  out.bound = bound;
  const std::size_t m = f.unknowns.size();
  // Box size check without overflow.
  {
    long double points = 1;
    for (std::size_t i = 0; i < m; ++i) points *= static_cast<long double>(bound) + 1;
    if (points > static_cast<long double>(max_points)) return out;
  }

  std::vector<std::vector<Assignment>> per_lead(bound + 1);
  parallel_for(bound + 1, std::max(1u, jobs), [&](std::size_t lead) {
    std::vector<BigNat> values;
    for (auto v : params) values.emplace_back(v);
    values.resize(params.size() + m);
    Assignment x(m, 0);
    x[0] = lead;
    while (true) {
      for (std::size_t i = 0; i < m; ++i) values[params.size() + i] = x[i];
      if (evaluate(f.lhs, values) == evaluate(f.rhs, values)) per_lead[lead].push_back(x);
      // Odometer over the remaining unknowns, last one fastest.
      std::size_t k = m;
      while (k > 1 && x[k - 1] == bound) x[--k] = 0;
      if (k <= 1) break;
      ++x[k - 1];
    }
  });
  for (auto& chunk : per_lead) {
    for (auto& s : chunk) out.solutions.push_back(std::move(s));
  }
  out.count = out.solutions.size();
  out.exhausted = true;
  return out;
}

bool verify_witness(const DiophantineFamily& f, const Assignment& params, const Assignment& unknowns) {
  if (params.size() != f.params.size() || unknowns.size() != f.unknowns.size()) return false;
  std::vector<BigNat> values;
  for (auto v : params) values.emplace_back(v);
  for (auto v : unknowns) values.emplace_back(v);
  std::string text = "unknowns: _\nexponential: true\n";
  print_closed(f.lhs, values, 0, text);
  text += " = ";
  print_closed(f.rhs, values, 0, text);
  const DiophantineFamily closed = parse_diophantine(text);
  const std::vector<BigNat> dummy{BigNat(0)};
  return evaluate(closed.lhs, dummy) == evaluate(closed.rhs, dummy);
}

CountProfile count_profile(const DiophantineFamily& f, const std::vector<Assignment>& param_values,
                           const std::vector<std::uint64_t>& bounds, unsigned jobs) {
  std::vector<std::uint64_t> sorted = bounds;
  std::sort(sorted.begin(), sorted.end());
  CountProfile prof;
  prof.param_values = param_values;
  for (const auto& pv : param_values) {
    std::vector<std::uint64_t> counts;
    for (auto b : sorted) {
      const SearchOutcome s = search_solutions(f, pv, b, jobs);
      if (!s.exhausted) throw DomainError("box for bound " + std::to_string(b) + " is too large");
      prof.rows.push_back({pv, b, s.count});
      counts.push_back(s.count);
    }
    const bool zero = std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 0; });
    bool growing = counts.size() >= 2;
    for (std::size_t i = 1; i < counts.size(); ++i) growing = growing && counts[i] > counts[i - 1];
    prof.classes.push_back(zero ? ProfileClass::ZeroSoFar
                                : growing ? ProfileClass::Growing
                                          : ProfileClass::Undetermined);
  }
  return prof;
}

const char* profile_class_name(ProfileClass c) {
  switch (c) {
    case ProfileClass::ZeroSoFar:
      return "zero-so-far";
    case ProfileClass::Growing:
      return "growing";
    case ProfileClass::Undetermined:
      return "undetermined";
  }
  return "?";
}

std::string count_profile_csv(const DiophantineFamily& f, const CountProfile& p) {
  std::ostringstream os;
  for (const auto& n : f.params) os << n << ',';
  os << "bound,count\n";
  for (const auto& r : p.rows) {
    for (auto v : r.params) os << v << ',';
    os << r.bound << ',' << r.count << '\n';
  }
  return os.str();
}

}  // namespace uncomp
