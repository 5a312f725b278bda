#include "slp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "slp/fp.hpp"

namespace slp {

DiffMonomial::DiffMonomial(std::vector<int> indices) : idx_(std::move(indices)) {
  for (int i : idx_)
    if (i < 1 || i > Monomial::kMaxVars) throw Error("operator index out of range");
  std::sort(idx_.begin(), idx_.end());
}

bool DiffMonomial::is_squarefree() const {
  return std::adjacent_find(idx_.begin(), idx_.end()) == idx_.end();
}

DiffMonomial DiffMonomial::merged(const DiffMonomial& o) const {
  std::vector<int> all = idx_;
  all.insert(all.end(), o.idx_.begin(), o.idx_.end());
  return DiffMonomial(std::move(all));
}

Monomial DiffMonomial::monomial() const {
  Monomial m;
  for (int i : idx_) m.set_exponent(i, m.exponent(i) + 1);
  return m;
}

std::string DiffMonomial::to_text() const {
  std::string out = "(";
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(idx_[k]);
  }
  return out + ")";
}

DiffMonomial parse_diff_monomial(const std::string& text) {
  std::vector<int> idx;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected index", pos);
    idx.push_back(std::stoi(text.substr(start, pos - start)));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
    if (pos < text.size() && text[pos] == ')') { ++pos; break; }
    throw ParseError("expected ',' or ')'", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing text after tuple", pos);
  return DiffMonomial(std::move(idx));
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw Error("variable count out of range (0.." + std::to_string(Monomial::kMaxVars) + ")");
}

SparsePoly SparsePoly::constant(int nvars, mpz_class c) {
  SparsePoly p(nvars);
  p.add_term(Monomial::one(), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int var) {
  if (var < 1 || var > nvars) throw Error("variable index out of range");
  SparsePoly p(nvars);
  Monomial m;
  m.set_exponent(var, 1);
  p.add_term(m, 1);
  return p;
}

void SparsePoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool SparsePoly::is_homogeneous(int* degree) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = m.total_degree();
    if (d == -1) d = t;
    else if (t != d) return false;
  }
  if (degree) *degree = d;
  return true;
}

mpz_class SparsePoly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<std::pair<Monomial, mpz_class>> SparsePoly::sorted_terms() const {
  std::vector<std::pair<Monomial, mpz_class>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    return Monomial::compare(a.first, b.first, nvars_) > 0;
  });
  return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  if (a.variable_count() != b.variable_count()) throw Error("variable count mismatch");
  SparsePoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  if (a.variable_count() != b.variable_count()) throw Error("variable count mismatch");
  SparsePoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly r(a.variable_count());
  for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.variable_count() != b.variable_count()) throw Error("variable count mismatch");
  SparsePoly r(a.variable_count());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      r.add_term(ma.times(mb, a.variable_count()), ca * cb);
  return r;
}

SparsePoly operator*(const mpz_class& c, const SparsePoly& a) {
  SparsePoly r(a.variable_count());
  if (c == 0) return r;
  for (const auto& [m, k] : a.terms()) r.add_term(m, c * k);
  return r;
}

SparsePoly diff(const DiffMonomial& alpha, const SparsePoly& f) {
  // group repeated indices into (variable, multiplicity)
  std::vector<std::pair<int, int>> groups;
  for (int i : alpha.indices()) {
    if (!groups.empty() && groups.back().first == i) ++groups.back().second;
    else groups.emplace_back(i, 1);
  }
  for (auto [v, mult] : groups)
    if (v > f.variable_count()) throw Error("operator index exceeds variable count");
  SparsePoly r(f.variable_count());
  for (const auto& [m, c] : f.terms()) {
    mpz_class coef = c;
    Monomial out = m;
    bool alive = true;
    for (auto [v, mult] : groups) {
      int e = out.exponent(v);
      if (e < mult) { alive = false; break; }
      for (int t = 0; t < mult; ++t) coef *= (e - t);
      out.set_exponent(v, e - mult);
    }
    if (alive) r.add_term(out, coef);
  }
  return r;
}

mpz_class evaluate(const SparsePoly& f, std::span<const mpz_class> point) {
  if (static_cast<int>(point.size()) != f.variable_count())
    throw Error("evaluation point length mismatch");
  // memoize powers per variable
  std::vector<std::vector<mpz_class>> powers(f.variable_count());
  mpz_class acc = 0, term;
  for (const auto& [m, c] : f.terms()) {
    term = c;
    for (int v = 1; v <= f.variable_count(); ++v) {
      int e = m.exponent(v);
      if (!e) continue;
      auto& pw = powers[v - 1];
      if (pw.empty()) pw.push_back(1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[v - 1]);
      term *= pw[e];
    }
    acc += term;
  }
  return acc;
}

std::uint64_t evaluate_mod(const SparsePoly& f, std::span<const std::uint64_t> point,
                           std::uint64_t p) {
  if (static_cast<int>(point.size()) != f.variable_count())
    throw Error("evaluation point length mismatch");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (int v = 1; v <= f.variable_count(); ++v) {
      int e = m.exponent(v);
      if (!e) continue;
      term = mul_mod(term, pow_mod(point[v - 1] % p, e, p), p);
    }
    acc = add_mod(acc, term, p);
  }
  return acc;
}

std::vector<mpz_class> restrict_to_line(const SparsePoly& f, int var) {
  if (var < 1 || var > f.variable_count()) throw Error("variable index out of range");
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.exponent(var));
  std::vector<mpz_class> coeffs(top + 1, mpz_class(0));
  for (const auto& [m, c] : f.terms()) coeffs[m.exponent(var)] += c;
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

SparsePoly basis_generating_poly(const Graph& g) {
  g.validate();
  if (!g.is_connected()) throw Error("basis generating polynomial needs a connected graph");
  if (g.edge_count() > Monomial::kMaxVars)
    throw UnsupportedError("too many edges for the polynomial representation");
  SparsePoly f(g.edge_count());
  for_each_spanning_tree(g, [&](EdgeSet t) { f.add_term(Monomial::squarefree(t), 1); });
  return f;
}

std::string to_text(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  auto terms = f.sorted_terms();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
      first = false;
    } else {
      if (a < 0) { out << " - "; a = -a; }
      else out << " + ";
    }
    std::string mono;
    for (int v = 1; v <= f.variable_count(); ++v) {
      int e = m.exponent(v);
      if (!e) continue;
      if (!mono.empty()) mono += " ";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out << a.get_str();
    else if (a == 1) out << mono;
    else out << a.get_str() << " * " << mono;
  }
  return out.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool at_end() { skip_ws(); return pos >= s.size(); }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return mpz_class(s.substr(start, pos - start));
  }

  int parse_index() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected variable index", pos);
    return std::stoi(s.substr(start, pos - start));
  }

  // term := INT | INT '*' MONO | MONO ; MONO := ('x' INT ['^' INT])+
  void parse_term(bool negative, std::vector<std::pair<Monomial, mpz_class>>& terms, int& max_var) {
    skip_ws();
    mpz_class coef = 1;
    bool saw_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_integer();
      saw_coef = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') { ++pos; skip_ws(); }
    }
    Monomial m;
    bool saw_var = false;
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      int v = parse_index();
      if (v < 1 || v > Monomial::kMaxVars) throw ParseError("variable index out of range", pos);
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected exponent", pos);
        e = std::stoi(s.substr(start, pos - start));
      }
      if (e < 0 || m.exponent(v) + e > Monomial::kMaxExp) throw ParseError("exponent out of range", pos);
      m.set_exponent(v, m.exponent(v) + e);
      max_var = std::max(max_var, v);
      saw_var = true;
      skip_ws();
    }
    if (!saw_coef && !saw_var) throw ParseError("expected term", pos);
    terms.emplace_back(m, negative ? -coef : coef);
  }
};

}  // namespace

SparsePoly parse_poly(const std::string& text, int nvars) {
  PolyParser pp(text);
  std::vector<std::pair<Monomial, mpz_class>> terms;
  int max_var = 0;
  pp.skip_ws();
  bool negative = false;
  if (pp.pos < text.size() && (text[pp.pos] == '-' || text[pp.pos] == '+')) {
    negative = text[pp.pos] == '-';
    ++pp.pos;
  }
  pp.parse_term(negative, terms, max_var);
  while (!pp.at_end()) {
    char op = text[pp.pos];
    if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pp.pos);
    ++pp.pos;
    pp.parse_term(op == '-', terms, max_var);
  }
  int n = nvars >= 0 ? nvars : max_var;
  if (max_var > n) throw Error("polynomial uses more variables than declared");
  SparsePoly f(n);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

}  // namespace slp
