#include "parb/series.hpp"

#include <algorithm>

#include "parb/error.hpp"

namespace parb {

using Terms = SeriesAlgebra::Terms;
using Monomial = SeriesAlgebra::Monomial;

namespace {

void add_to(Terms& into, const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Monomial join(std::initializer_list<const Monomial*> parts) {
  Monomial out;
  for (const Monomial* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

SeriesAlgebra::SeriesAlgebra(std::vector<std::string> names, std::vector<int> levels, int degree,
                             std::vector<std::vector<FreeWord>> conjugates)
    : names_(std::move(names)), levels_(std::move(levels)), degree_(degree) {
  const int k = letters();
  if (static_cast<int>(levels_.size()) != k) throw MalformedInput("one level per letter");
  if (degree_ < 0) throw MalformedInput("negative truncation degree");
  free_ = std::all_of(levels_.begin(), levels_.end(), [&](int l) { return l == levels_[0]; });
  if (free_) return;
  auto self = std::shared_ptr<const SeriesAlgebra>(std::shared_ptr<const SeriesAlgebra>{}, this);
  corrections_.assign(k, std::vector<Terms>(k));
  for (int g = 0; g < k; ++g)
    for (int u = 0; u < k; ++u) {
      if (levels_[g] >= levels_[u]) continue;
      const FreeWord& w = conjugates.at(g).at(u);
      for (const FreeLetter& l : w.letters())
        if (levels_[l.symbol] != levels_[u]) throw MalformedInput("conjugate leaves its level");
      // within one level the product is free, so magnus needs no commutation rules
      std::vector<Series> images;
      for (int v = 0; v < k; ++v) images.push_back(Series::group_letter(self, v));
      Series p = magnus(w, images) - Series::one(self) - Series::letter(self, u);
      corrections_[g][u] = p.terms();
    }
}

std::shared_ptr<const SeriesAlgebra> SeriesAlgebra::free(std::vector<std::string> names, int degree) {
  std::vector<int> levels(names.size(), 0);
  return std::make_shared<const SeriesAlgebra>(std::move(names), std::move(levels), degree);
}

const Terms& SeriesAlgebra::normal_form(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> guard(lock_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  Terms out;
  if (static_cast<int>(m.size()) <= degree_) {
    std::size_t i = 0;
    while (i + 1 < m.size() && levels_[m[i]] >= levels_[m[i + 1]]) ++i;
    if (i + 1 >= m.size()) {
      out.emplace(m, 1);
    } else {
      int g = m[i], u = m[i + 1];
      Monomial prefix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i));
      Monomial suffix(m.begin() + static_cast<std::ptrdiff_t>(i) + 2, m.end());
      Monomial swapped{u, g}, last{g};
      for (const auto& [mono, c] : normal_form(join({&prefix, &swapped, &suffix}))) add_to(out, mono, c);
      for (const auto& [q, cq] : corrections_[g][u]) {
        for (const auto& [mono, c] : normal_form(join({&prefix, &q, &suffix}))) add_to(out, mono, c * cq);
        for (const auto& [mono, c] : normal_form(join({&prefix, &q, &last, &suffix}))) add_to(out, mono, c * cq);
      }
    }
  }
  std::lock_guard<std::mutex> guard(lock_);
  return cache_.emplace(m, std::move(out)).first->second;
}

Terms SeriesAlgebra::multiply(const Terms& a, const Terms& b) const {
  Terms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (static_cast<int>(ma.size() + mb.size()) > degree_) continue;
      Monomial m = join({&ma, &mb});
      if (free_) {
        add_to(out, m, ca * cb);
      } else {
        mpq_class c = ca * cb;
        for (const auto& [mono, cm] : normal_form(m)) add_to(out, mono, c * cm);
      }
    }
  return out;
}

// ---- Series ----

Series::Series(std::shared_ptr<const SeriesAlgebra> alg, Terms terms) : alg_(std::move(alg)) {
  for (auto& [m, c] : terms)
    if (static_cast<int>(m.size()) <= alg_->degree() && c != 0) terms_.emplace(m, c);
}

Series Series::constant(std::shared_ptr<const SeriesAlgebra> alg, const mpq_class& c) {
  Terms t;
  if (c != 0) t.emplace(Monomial{}, c);
  return Series(std::move(alg), std::move(t));
}

Series Series::letter(std::shared_ptr<const SeriesAlgebra> alg, int u) {
  if (u < 0 || u >= alg->letters()) throw MalformedInput("letter out of range");
  Terms t;
  t.emplace(Monomial{u}, 1);
  return Series(std::move(alg), std::move(t));
}

Series Series::group_letter(std::shared_ptr<const SeriesAlgebra> alg, int u) {
  return one(alg) + letter(alg, u);
}

mpq_class Series::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Series Series::homogeneous(int degree) const {
  Terms t;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) t.emplace(m, c);
  return Series(alg_, std::move(t));
}

Series Series::operator+(const Series& o) const {
  Terms t = terms_;
  for (const auto& [m, c] : o.terms_) add_to(t, m, c);
  return Series(alg_ ? alg_ : o.alg_, std::move(t));
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const { return scaled(-1); }

Series Series::operator*(const Series& o) const {
  if (alg_.get() != o.alg_.get()) throw MalformedInput("series from different algebras");
  return Series(alg_, alg_->multiply(terms_, o.terms_));
}

Series Series::scaled(const mpq_class& c) const {
  Terms t;
  if (c != 0)
    for (const auto& [m, v] : terms_) t.emplace(m, v * c);
  return Series(alg_, std::move(t));
}

namespace {

// sum_k coeff(k) N^k for N = s - 1.
template <class Coeff>
Series power_series(const Series& s, Coeff coeff) {
  if (s.constant_term() != 1) throw MalformedInput("series must have constant term 1");
  Series n = s - Series::one(s.algebra());
  Series out = Series::constant(s.algebra(), coeff(0));
  Series p = Series::one(s.algebra());
  for (int k = 1; k <= s.algebra()->degree(); ++k) {
    p = p * n;
    if (p.is_zero()) break;
    out = out + p.scaled(coeff(k));
  }
  return out;
}

}  // namespace

Series Series::inverse() const {
  return power_series(*this, [](int k) { return mpq_class(k % 2 ? -1 : 1); });
}

Series Series::power(const mpq_class& exponent) const {
  mpq_class q = exponent;
  q.canonicalize();
  std::vector<mpq_class> binom{1};
  for (int k = 1; k <= alg_->degree(); ++k) binom.push_back(binom.back() * (q - (k - 1)) / k);
  return power_series(*this, [&](int k) { return binom[k]; });
}

Series Series::log() const {
  return power_series(*this, [](int k) { return k == 0 ? mpq_class(0) : mpq_class(k % 2 ? 1 : -1, k); });
}

Series Series::exp() const {
  if (constant_term() != 0) throw MalformedInput("exp needs constant term 0");
  Series out = one(alg_);
  Series p = one(alg_);
  mpq_class fact = 1;
  for (int k = 1; k <= alg_->degree(); ++k) {
    p = p * *this;
    if (p.is_zero()) break;
    fact *= k;
    out = out + p.scaled(1 / fact);
  }
  return out;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, mpq_class>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && !m.empty();
    if (!unit) out += mag.get_str();
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (!unit || k > 0) out += ' ';
      out += alg_->name(m[k]);
    }
  }
  return out;
}

Series magnus(const FreeWord& w, const std::vector<Series>& images) {
  if (images.empty()) throw MalformedInput("magnus needs images");
  if (static_cast<int>(images.size()) < w.rank()) throw MalformedInput("too few images");
  return w.substitute(images, Series::one(images[0].algebra()), [](const Series& a, const Series& b) { return a * b; },
                      [](const Series& a) { return a.inverse(); });
}

Series substitute(const Series& f, const std::vector<Series>& images) {
  if (images.empty()) throw MalformedInput("substitution needs images");
  auto alg = images[0].algebra();
  std::vector<Series> shifted;
  for (const Series& s : images) shifted.push_back(s - Series::one(alg));
  // products of shifted images, memoised by prefix
  std::map<Monomial, Series> prefix;
  prefix.emplace(Monomial{}, Series::one(alg));
  Series out(alg);
  for (const auto& [m, c] : f.terms()) {
    Monomial key;
    const Series* cur = &prefix.at(key);
    for (int u : m) {
      if (u >= static_cast<int>(shifted.size())) throw MalformedInput("too few images");
      key.push_back(u);
      auto it = prefix.find(key);
      if (it == prefix.end()) it = prefix.emplace(key, *cur * shifted[u]).first;
      cur = &it->second;
    }
    out = out + cur->scaled(c);
  }
  return out;
}

bool is_lie(const Series& s) {
  if (!s.algebra()->is_free()) throw MalformedInput("Lie test needs a free algebra");
  auto alg = s.algebra();
  if (s.constant_term() != 0) return false;
  for (int n = 1; n <= alg->degree(); ++n) {
    Series p = s.homogeneous(n);
    if (p.is_zero()) continue;
    Series d(alg);
    for (const auto& [m, c] : p.terms()) {
      Series bracket = Series::letter(alg, m[0]);
      for (std::size_t k = 1; k < m.size(); ++k) {
        Series x = Series::letter(alg, m[k]);
        bracket = bracket * x - x * bracket;
      }
      d = d + bracket.scaled(c);
    }
    if (!(d == p.scaled(n))) return false;
  }
  return true;
}

bool is_group_like(const Series& s) {
  if (s.constant_term() != 1) return false;
  // group-like for the coproduct making log(1 + X_k) primitive
  auto alg = s.algebra();
  std::vector<Series> images;
  for (int u = 0; u < alg->letters(); ++u) images.push_back(Series::letter(alg, u).exp());
  return is_lie(substitute(s, images).log());
}

}  // namespace parb
