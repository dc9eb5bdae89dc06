#include "gkz/constants.hpp"

#include <cmath>

namespace gkz {

namespace {

std::vector<unsigned> trim(std::vector<unsigned> key) {
  while (!key.empty() && key.back() == 0) key.pop_back();
  return key;
}

Int factorial(unsigned k) {
  Int f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void ConstElem::insert(std::vector<unsigned> key, const Rat& c) {
  if (c == 0) return;
  key = trim(std::move(key));
  Rat& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

ConstElem ConstElem::rational(const Rat& c) {
  ConstElem e;
  e.insert({}, c);
  return e;
}

ConstElem ConstElem::gamma() {
  ConstElem e;
  e.insert({1}, Rat(1));
  return e;
}

ConstElem ConstElem::log2() {
  ConstElem e;
  e.insert({0, 1}, Rat(1));
  return e;
}

ConstElem ConstElem::zeta(unsigned k) {
  if (k < 2) throw Error("zeta symbol requires k >= 2");
  ConstElem e;
  std::vector<unsigned> key(k + 1, 0);
  key[k] = 1;
  e.insert(std::move(key), Rat(1));
  return e;
}

ConstElem ConstElem::operator+(const ConstElem& rhs) const {
  ConstElem out = *this;
  out += rhs;
  return out;
}

ConstElem& ConstElem::operator+=(const ConstElem& rhs) {
  for (const auto& [key, c] : rhs.terms_) insert(key, c);
  return *this;
}

ConstElem ConstElem::operator-(const ConstElem& rhs) const {
  ConstElem out = *this;
  for (const auto& [key, c] : rhs.terms_) out.insert(key, -c);
  return out;
}

ConstElem ConstElem::operator*(const ConstElem& rhs) const {
  ConstElem out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : rhs.terms_) {
      std::vector<unsigned> key(std::max(ka.size(), kb.size()), 0);
      for (size_t i = 0; i < ka.size(); ++i) key[i] += ka[i];
      for (size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
      out.insert(std::move(key), ca * cb);
    }
  return out;
}

ConstElem ConstElem::operator*(const Rat& c) const {
  ConstElem out;
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_[key] = v * c;
  return out;
}

bool ConstElem::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ConstElem::rational_part() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned ConstElem::gamma_degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_)
    if (!key.empty()) d = std::max(d, key[0]);
  return d;
}

unsigned ConstElem::max_weight() const {
  unsigned w = 0;
  for (const auto& [key, c] : terms_) {
    unsigned t = 0;
    for (size_t i = 0; i < key.size(); ++i) t += key[i] * (i < 2 ? 1 : (unsigned)i);
    w = std::max(w, t);
  }
  return w;
}

std::map<std::string, Rat> ConstElem::named_terms() const {
  std::map<std::string, Rat> out;
  for (const auto& [key, c] : terms_) {
    std::string name;
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      std::string sym = i == 0 ? "gamma" : (i == 1 ? "log2" : "zeta" + std::to_string(i));
      if (!name.empty()) name += "*";
      name += sym;
      if (key[i] > 1) name += "^" + std::to_string(key[i]);
    }
    if (name.empty()) name = "1";
    out[name] = c;
  }
  return out;
}

std::string ConstElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [name, c] : named_terms()) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (name != "1") s += "*" + name;
  }
  return s;
}

double ConstElem::eval_double(const std::vector<double>& symbol_values) const {
  double total = 0;
  for (const auto& [key, c] : terms_) {
    double t = c.get_d();
    for (size_t i = 0; i < key.size(); ++i)
      for (unsigned e = 0; e < key[i]; ++e) {
        if (i >= symbol_values.size()) throw Error("eval_double: missing symbol value");
        t *= symbol_values[i];
      }
    total += t;
  }
  return total;
}

ConstElem psi_value(const Rat& x, unsigned k) {
  if (x <= 0) throw Error("psi_value: argument must be positive");
  Rat base;
  unsigned q;
  if (x.get_den() == 1) {
    base = 1;
    q = (unsigned)(Rat(x - 1).get_num().get_ui());
  } else if (x.get_den() == 2) {
    base = Rat(1, 2);
    q = (unsigned)(Rat(x - Rat(1, 2)).get_num().get_ui());
  } else {
    throw Error("psi_value: unsupported base (argument must be integer or half-integer)");
  }

  ConstElem v;
  Int kf = factorial(k);
  if (base == 1) {
    if (k == 0)
      v = ConstElem::gamma() * Rat(-1);
    else
      v = ConstElem::zeta(k + 1) * Rat((k % 2 == 0 ? -kf : kf));
  } else {
    if (k == 0)
      v = ConstElem::gamma() * Rat(-1) + ConstElem::log2() * Rat(-2);
    else {
      Int scale = (Int(1) << (k + 1)) - 1;  // 2^(k+1) - 1
      v = ConstElem::zeta(k + 1) * Rat((k % 2 == 0 ? -kf : kf) * scale);
    }
  }
  // psi^(k)(base + q) = psi^(k)(base) + (-1)^k k! sum_{j<q} (base+j)^-(k+1)
  Rat corr = 0;
  for (unsigned j = 0; j < q; ++j) {
    Rat term = 1;
    Rat b = base + Rat(j);
    for (unsigned t = 0; t <= k; ++t) term /= b;
    corr += term;
  }
  v += ConstElem::rational(Rat(k % 2 == 0 ? kf : -kf) * corr);
  return v;
}

}  // namespace gkz
