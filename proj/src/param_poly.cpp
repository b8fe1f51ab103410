#include "invsub/param_poly.hpp"

#include "invsub/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <numeric>
#include <sstream>

namespace invsub {

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic: higher total degree first, then lexicographically
// larger exponent tuple first.
bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

ParamPoly::ParamPoly(int k, const Rational& c) : k_(k) {
  if (!invsub::is_zero(c)) terms_.emplace(Monomial(static_cast<std::size_t>(k), 0), c);
}

ParamPoly ParamPoly::variable(int k, int index) {
  if (index < 0 || index >= k) throw DomainError("parameter index out of range");
  ParamPoly p(k);
  Monomial m(static_cast<std::size_t>(k), 0);
  m[static_cast<std::size_t>(index)] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

ParamPoly ParamPoly::from_terms(int k, const std::map<Monomial, Rational>& terms) {
  ParamPoly p(k);
  for (const auto& [m, c] : terms) {
    if (static_cast<int>(m.size()) != k) throw DimensionError("monomial length differs from parameter count");
    if (!invsub::is_zero(c)) p.terms_[m] += c;
  }
  std::erase_if(p.terms_, [](const auto& kv) { return invsub::is_zero(kv.second); });
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational ParamPoly::constant() const {
  auto it = terms_.find(Monomial(static_cast<std::size_t>(k_), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

int ParamPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

std::vector<int> ParamPoly::variables() const {
  std::vector<int> out;
  for (int i = 0; i < k_; ++i)
    if (involves(i)) out.push_back(i);
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.k_ != k_) throw DimensionError("parameter counts differ");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (invsub::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.k_ != k_) throw DimensionError("parameter counts differ");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (invsub::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly p = *this;
  p += o;
  return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly p = *this;
  p -= o;
  return p;
}

void ParamPoly::add_product(const ParamPoly& a, const ParamPoly& b, int sign) {
  if (a.k_ != k_ || b.k_ != k_) throw DimensionError("parameter counts differ");
  Monomial m(static_cast<std::size_t>(k_));
  Rational c;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < k_; ++i) m[i] = ma[i] + mb[i];
      c = ca * cb;
      if (sign < 0) c = -c;
      auto [it, inserted] = terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (invsub::is_zero(it->second)) terms_.erase(it);
      }
    }
  }
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly p(k_);
  p.add_product(*this, o);
  return p;
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
  if (invsub::is_zero(c)) return ParamPoly(k_);
  ParamPoly p = *this;
  for (auto& [m, x] : p.terms_) x *= c;
  return p;
}

bool ParamPoly::operator<(const ParamPoly& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

ParamPoly ParamPoly::coefficient_of(int var, int power) const {
  ParamPoly p(k_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(var)] != power) continue;
    Monomial r = m;
    r[static_cast<std::size_t>(var)] = 0;
    p.terms_.emplace(std::move(r), c);
  }
  return p;
}

ParamPoly ParamPoly::substitute(int var, const ParamPoly& value) const {
  if (value.k_ != k_) throw DimensionError("parameter counts differ");
  const int deg = degree_in(var);
  if (deg == 0) return *this;
  std::vector<ParamPoly> powers{ParamPoly(k_, Rational(1))};
  for (int e = 1; e <= deg; ++e) powers.push_back(powers.back() * value);
  ParamPoly out(k_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    const int e = r[static_cast<std::size_t>(var)];
    r[static_cast<std::size_t>(var)] = 0;
    ParamPoly term(k_);
    term.terms_.emplace(std::move(r), c);
    out.add_product(term, powers[static_cast<std::size_t>(e)]);
  }
  return out;
}

ParamPoly ParamPoly::substitute(const std::vector<std::optional<ParamPoly>>& values) const {
  ParamPoly out = *this;
  for (int i = 0; i < k_ && i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)]) out = out.substitute(i, *values[static_cast<std::size_t>(i)]);
  }
  return out;
}

Rational ParamPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != k_) throw DimensionError("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k_; ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

ParamPoly ParamPoly::remap(int new_k, const std::vector<int>& mapping) const {
  ParamPoly p(new_k);
  for (const auto& [m, c] : terms_) {
    Monomial r(static_cast<std::size_t>(new_k), 0);
    for (int i = 0; i < k_; ++i) {
      if (m[i] == 0) continue;
      const int j = mapping[static_cast<std::size_t>(i)];
      if (j < 0) throw DomainError("remap drops a parameter that occurs in the polynomial");
      r[static_cast<std::size_t>(j)] += m[i];
    }
    p.terms_[r] += c;
  }
  std::erase_if(p.terms_, [](const auto& kv) { return invsub::is_zero(kv.second); });
  return p;
}

std::pair<Monomial, Rational> ParamPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_greater(it->first, best->first)) best = it;
  return *best;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / leading_term().second);
}

ParamPoly ParamPoly::sign_normalized() const {
  if (terms_.empty()) return *this;
  return sgn(leading_term().second) < 0 ? -*this : *this;
}

std::optional<ParamPoly> ParamPoly::exact_divide(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (divisor.k_ != k_) throw DimensionError("parameter counts differ");
  const auto [lm, lc] = divisor.leading_term();
  ParamPoly rem = *this;
  ParamPoly quot(k_);
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading_term();
    if (!divides(lm, rm)) return std::nullopt;
    Monomial q(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) q[i] = rm[i] - lm[i];
    ParamPoly term(k_);
    term.terms_.emplace(std::move(q), rc / lc);
    quot += term;
    rem.add_product(term, divisor, -1);
  }
  return quot;
}

std::string ParamPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_parameter_names(k_) : names_in;
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = degree_of(m) == 0;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << invsub::to_string(mag);
      need_star = true;
    }
    for (int i = 0; i < k_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << names[static_cast<std::size_t>(i)];
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_parameter_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

ParamPoly parse_param_poly(const std::string& text, int k) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("polynomial '" + text + "': " + why + " at offset " + std::to_string(i));
  };
  auto read_digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw fail("expected digits");
    return text.substr(start, i - start);
  };

  std::map<Monomial, Rational> terms;
  skip();
  if (text.compare(i, std::string::npos, "0") == 0) return ParamPoly(k);
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = 1;
    Monomial m(static_cast<std::size_t>(k), 0);
    bool have_factor = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num = read_digits();
        if (i < text.size() && text[i] == '/') {
          ++i;
          num += "/" + read_digits();
        }
        Rational q;
        if (!parse_rational(num, q)) throw fail("bad coefficient");
        coef *= q;
      } else if (i < text.size() && text[i] == 't') {
        ++i;
        const int var = std::stoi(read_digits()) - 1;
        if (var < 0 || var >= k) throw fail("unknown parameter");
        int power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          power = std::stoi(read_digits());
        }
        m[static_cast<std::size_t>(var)] += power;
      } else {
        throw fail("expected a coefficient or parameter");
      }
      have_factor = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("empty term");
    terms[m] += coef * sign;
  }
  return ParamPoly::from_terms(k, terms);
}

}  // namespace invsub
